#pragma once

#include "kstab/report.hpp"
#include "kstab/stab.hpp"

namespace kstab {

// Twisted character of the Clifford bimodule B_j on P^3:
//   ch_{B0,<=2}(B_j) = (4, 2j-5, (2j-5)^2/8),
// so mu(B_j) = (2j-5)/4 and Delta_B0(B_j) = 0 for every j.
CharVec clifford_class(int j);

// Catalog descriptor for B_j: slope-stable with Delta = 0, Serre rule
// j -> j-3 with shift 3.
ObjectDescriptor clifford_object(int j, int shift = 0);

// chi(E, E) for a character on P^2 twisted by the Clifford structure sheaf:
//   chi = -7/64 e0^2 - 1/4 e1^2 + 1/2 e0 e2   (untwisted coordinates).
Rational chi_p2_diag(const CharVec& v);

// Positive-rank Clifford modules have rank divisible by 4.
bool rank_admissible(const Rational& e0);

// rank_admissible(e0) and Delta_B0 >= 0. Rank-0 classes are admissible
// (torsion modules).
bool bogomolov_predicate(const CharVec& v);

// The beta = -1 charge rotated into the second-tilt normalization:
//   Z_alpha = ch1^{-1} + i (-(t/2) ch0^{-1} + ch2^{-1})
// on twisted coordinates; equal to rotate_charge(z_tilt(v, (t,-1)), 0).
Charge z_alpha(const CharVec& v, const Rational& t);

// Characters of the projected line objects: i = 1 -> (4,-1,-15/8),
// i = 2 -> (-8,8,-18/8).
CharVec lambda_character(int i);

// Verifies the numerical hypotheses of the cubic-fourfold construction at
// beta = -1: heart membership and Delta = 0 certificates for B_1..B_3 and
// B_-2[1]..B_0[1], the strict six-term slope chain, the Serre rule, the
// second-tilt heart at mu0 = 0, and charge nonvanishing. beta != -1 is
// accepted for experimentation and noted in the report.
VerificationReport verify_cubic4(const Rational& t, const Rational& beta = -1);

}  // namespace kstab
