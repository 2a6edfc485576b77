#pragma once

#include "kstab/interval.hpp"
#include "kstab/qform.hpp"
#include "kstab/stab.hpp"

#include <vector>

namespace kstab {

// Left boundary of the convex hull of {0, total} U sub_charges, walked from 0
// to total. Vertices are Charge values; successive edge slopes strictly
// decrease.
struct Polygon {
    std::vector<Charge> vertices;  // starts at 0, ends at Z(total)
};

Polygon hn_polygon(const std::vector<Charge>& sub_charges, const Charge& total);

// Validates left-convexity (strictly decreasing edge slopes). Throws on
// violation; used by mass() and by tests.
void check_polygon(const Polygon& poly);

// Total edge length as an interval of at most the requested width.
IntervalReal mass(const Polygon& poly, const Rational& width);

// Support property of the tilt charge against Q on the rank-3 lattice:
// Q restricted to Ker Z_{t,beta} is negative definite, i.e.
// Q(kernel_vector) < 0. t = 0 is allowed and fails for Q = Delta_H.
bool support_check(const QForm3& q, const Rational& t, const Rational& beta);

// Rank-2 lattice with injective charge: Ker Z = 0 and the support property
// holds vacuously for any Q (including Q = 0).
bool support_check_rank2(bool charge_injective);

// Interval containing D = sqrt(2 / (1 + cos_phi)), the smallest constant with
// a1 + a2 <= D b over all triangles with angle phi opposite b. Follows from
//   b^2 = a1^2 + a2^2 - 2 a1 a2 cos phi
//       = (1+cos phi)/2 (a1+a2)^2 + (1-cos phi)/2 (a1-a2)^2.
IntervalReal triangle_amplification(const Rational& cos_phi, const Rational& width);

struct HNFactorSlope {
    Rational rank;  // > 0
    Rational mu;
};

// Exact check of  sum_{i<j} r_i r_j (mu_i - mu_j)^2 <= delta.
bool restriction_inequality(const Rational& delta,
                            const std::vector<HNFactorSlope>& factors);

}  // namespace kstab
