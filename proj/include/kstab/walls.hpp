#pragma once

#include "kstab/stab.hpp"

#include <optional>
#include <vector>

namespace kstab {

// Classification of the locus mu(v) = mu(w) in the (beta, t) half-plane.
struct WallDescriptor {
    enum class Kind { None, Vertical, Semicircle, Empty } kind;
    Rational beta0;       // Vertical
    Rational center;      // Semicircle
    Rational radius_sq;   // Semicircle, > 0
    CharVec v, w;
};

// Rational generator of Ker Z_{t,beta}: (1, beta, beta^2/2 + t/2).
// t = 0 is allowed for boundary arguments; the limit lies on the quadric.
Vec3 kernel_vector(const Rational& t, const Rational& beta);

// Solves det[kernel_vector; v; w] = 0, i.e.
//   M12 - beta M02 + (beta^2 + t)/2 M01 = 0
// with M_ij the 2x2 minors of the pair (v, w).
WallDescriptor wall_curve(const CharVec& v, const CharVec& w);

bool on_wall(const WallDescriptor& wd, const StabParams& p);

// Enumeration configuration: candidate characters are integer multiples of
// the steps, with coordinate index caps. The optional quantum is the declared
// minimal positive value of Im Z on the lattice along a beta ray, enforcing
// the integrality exclusion during enumeration.
struct LatticeStepConfig {
    Rational step0 = 1, step1 = 1, step2 = 1;
    long cap0 = 0, cap1 = 0, cap2 = 0;  // |index| caps per coordinate
    std::optional<Rational> quantum;
    int partitions = 1;  // candidate-space partitions; result is independent
};

// Built-in integrality presets.
LatticeStepConfig threefold_steps(const Rational& d, long cap);
LatticeStepConfig clifford_steps(long cap);  // rank a multiple of 4

struct DestabilizerHit {
    CharVec w;
    WallDescriptor wall;
    StabParams at;  // representative meeting point used for the filters
};

// All lattice-integral candidates within bounds whose wall with v meets the
// region, with 0 < Im Z(w) <= Im Z(v) at the meeting point and nonnegative
// discriminants for both w and v - w. Output is lexicographically sorted and
// independent of partitioning. Bounds are finite; completeness is never
// claimed beyond them.
std::vector<DestabilizerHit> enumerate_destabilizers(const CharVec& v,
                                                     const Region& region,
                                                     const LatticeStepConfig& cfg);

// True iff Im Z_{.,beta0}(v) equals the declared quantum exactly, in which
// case no strict semistability can occur on the beta = beta0 ray. Throws if
// the imaginary part is not a nonnegative multiple of the quantum.
bool integrality_exclusion(const CharVec& v, const Rational& beta0,
                           const Rational& quantum);

enum class PlotFormat { Svg, Json };

// Draws walls as arcs in (beta, alpha = sqrt(t)) coordinates. Deterministic:
// square roots are rendered through fixed-width interval midpoints.
std::string emit_plot(const std::vector<WallDescriptor>& walls,
                      const Region& region, PlotFormat format);

}  // namespace kstab
