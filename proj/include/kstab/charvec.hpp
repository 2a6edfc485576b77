#pragma once

#include "kstab/qform.hpp"
#include "kstab/rational.hpp"

#include <utility>

namespace kstab {

// Which lattice the coordinates live in. Threefold/Surface coordinates are
// H-contracted Chern numbers (H^n ch0, H^{n-1} ch1, H^{n-2} ch2) against a
// polarization with d = H^n recorded alongside. The Clifford ambient carries
// characters on P^N, either plain or already twisted by (1 - 11/32 l).
enum class Ambient {
    Threefold,
    Surface,
    CliffordUntwisted,
    CliffordTwisted,
};

struct CharVec {
    Ambient ambient = Ambient::Threefold;
    Rational d = 1;  // H^n of the polarization (1 on P^N)
    Rational e0, e1, e2;

    Vec3 coords() const { return {e0, e1, e2}; }

    friend bool operator==(const CharVec& a, const CharVec& b) {
        return a.ambient == b.ambient && a.d == b.d && a.e0 == b.e0 &&
               a.e1 == b.e1 && a.e2 == b.e2;
    }

    CharVec operator-() const { return {ambient, d, -e0, -e1, -e2}; }
    CharVec operator+(const CharVec& o) const {
        return {ambient, d, e0 + o.e0, e1 + o.e1, e2 + o.e2};
    }
    CharVec operator-(const CharVec& o) const { return *this + (-o); }
    CharVec operator*(const Rational& c) const {
        return {ambient, d, c * e0, c * e1, c * e2};
    }
};

enum class TangentSide { Interior, Boundary, Exterior };

// ch^beta = e^{-beta H} ch:  (e0, e1 - b e0, e2 - b e1 + b^2/2 e0).
CharVec twist_beta(const CharVec& v, const Rational& beta);

// Discriminant e1^2 - 2 e0 e2; invariant under twist_beta.
Rational delta_H(const CharVec& v);

// Chern character of O(kH): (d, kd, k^2 d / 2).
CharVec line_bundle_class(const Rational& k, const Rational& d,
                          Ambient ambient = Ambient::Threefold);

// Multiplication by (1 - 11/32 l): only the degree-2 term changes.
CharVec clifford_twist(const CharVec& v);

// Discriminant on twisted Clifford coordinates (same quadratic form).
Rational delta_B0(const CharVec& v);

// Sidedness of x relative to the tangent plane of the quadric delta = 0 at p.
// Interior means the open half-space containing the positive-rank part of the
// negative cone; the reference class is r = (1, 0, 1/2).
TangentSide tangent_side(const CharVec& p, const CharVec& x);

// Discriminants of a class upstairs on a blow-up and of its pushforward:
//   up   = l_sq - a^2 - 2 rk (ch2 - 11/32 rk)
//   down = l_sq - 2 rk (ch2 + a/2 - 11/32 rk)
// They satisfy up - down = a (rk - a) identically.
struct BlowupDeltas {
    Rational up;
    Rational down;
};
BlowupDeltas blowup_delta_pair(const Rational& rk, const Rational& l_sq,
                               const Rational& a, const Rational& ch2);

}  // namespace kstab
