#pragma once

#include "kstab/report.hpp"
#include "kstab/stab.hpp"

#include <optional>

namespace kstab {

// Picard-rank-one Fano threefold catalog entry. Index 2 entries are keyed by
// the degree d = H^3 in {1..5}; index 1 entries by the genus g, with
// d = H^3 = 2g - 2. For even genus g = 2s >= 6 the rank-2 bundle in the
// exceptional collection has character (2d, -d, s-2). Genus 4 is not covered:
// that character lies on both tangent planes and the slope-chain argument
// degenerates.
struct FanoEntry {
    int index;                 // i_X in {1, 2}
    int deg_or_genus;          // d for index 2, g for index 1
    Rational d;                // H^3
    ObjectDescriptor structure_sheaf;          // O_X
    std::optional<ObjectDescriptor> o_of_h;    // O(H), index 2 only
    std::optional<ObjectDescriptor> e2;        // rank-2 bundle, even genus >= 6
    // extra exceptional bundles known only by rank (no ch2 data); entries
    // carrying these are handled by the explicit-description route and are
    // rejected by the slope-chain verifiers
    std::vector<std::pair<std::string, int>> rank_only_bundles;
    bool explicit_description_route = false;

    Geometry geometry() const { return Geometry::fano(index, 3); }
};

// Supported keys: (2, d) for d in {1..5}; (1, g) for g in {2,3,5,6,8,10,12}
// plus metadata-only entries for g in {7, 9}. Throws std::invalid_argument
// for unsupported keys and a dedicated message for g = 4.
FanoEntry catalog(int index, int deg_or_genus);

// Supremum of t below which all strict slope conditions of the line-bundle
// part of the collection hold at the given beta:
//   mu_{t,beta}(G) > 0 > mu_{t,beta}(G(K_X)[1])  for each line bundle G.
// Returns 0 when no t > 0 works.
Rational alpha_threshold(const FanoEntry& entry, const Rational& beta);

// Hypotheses for inducing a stability condition on the right orthogonal of
// O_X, checked at beta = -i_X/2.
VerificationReport verify_1object(const FanoEntry& entry, const Rational& t);

// Index-2 hypotheses at beta = -1/2 for the pair (O, O(H)). d = H^3 may be
// any positive rational (higher Picard rank is accepted).
VerificationReport verify_index2(const Rational& d, const Rational& t);

// Index-1 even-genus hypotheses at beta = -1 + eps: tangent-plane location
// of the rank-2 bundle class, the integrality exclusion along beta = -1 with
// quantum H^3, the kernel-class endpoint solve at (t, beta) = (0, -1), the
// strict four-slope chain, and the second-tilt heart memberships.
VerificationReport verify_index1(int g, const Rational& eps, const Rational& t);

}  // namespace kstab
