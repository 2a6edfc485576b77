#pragma once

#include "kstab/charvec.hpp"

#include <optional>
#include <variant>

namespace kstab {

// Stability parameters. t = alpha^2, so every charge, slope and wall equation
// stays rational.
struct StabParams {
    Rational t;
    Rational beta;

    StabParams(Rational t_, Rational beta_) : t(std::move(t_)), beta(std::move(beta_)) {
        if (t <= 0)
            throw std::invalid_argument("StabParams: t must be positive");
    }
};

struct Charge {
    Rational re, im;

    friend bool operator==(const Charge& a, const Charge& b) {
        return a.re == b.re && a.im == b.im;
    }
    Charge operator-() const { return {-re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
};

// Slope value: finite rational or +infinity (torsion direction).
struct Slope {
    bool infinite = false;
    Rational value;  // meaningful only when !infinite

    static Slope inf() { return {true, 0}; }
    static Slope finite(Rational v) { return {false, std::move(v)}; }

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend bool operator<(const Slope& a, const Slope& b) {
        if (a.infinite)
            return false;
        if (b.infinite)
            return true;
        return a.value < b.value;
    }
    friend bool operator<=(const Slope& a, const Slope& b) { return a < b || a == b; }
    friend bool operator>(const Slope& a, const Slope& b) { return b < a; }
};

// Rectangle (or segment, or point) in the (beta, t) half-plane.
struct Region {
    Rational beta_lo, beta_hi;
    Rational t_lo, t_hi;
    bool include_t_zero = false;  // closure at t = 0, for endpoint arguments
    bool all = false;             // whole upper half-plane
    bool t_unbounded = false;     // beta band, every t > 0

    static Region point(const StabParams& p) {
        return {p.beta, p.beta, p.t, p.t, false, false, false};
    }
    static Region beta_segment(Rational beta, Rational t_hi) {
        return {beta, beta, 0, std::move(t_hi), false, false, false};
    }
    static Region beta_band(Rational beta_lo, Rational beta_hi) {
        return {std::move(beta_lo), std::move(beta_hi), 0, 0, false, false, true};
    }
    static Region everywhere() { return {0, 0, 0, 0, false, true, false}; }

    bool is_point() const {
        return !all && !t_unbounded && beta_lo == beta_hi && t_lo == t_hi && t_lo > 0;
    }
    bool contains(const StabParams& p) const {
        if (all)
            return true;
        if (p.beta < beta_lo || p.beta > beta_hi)
            return false;
        return t_unbounded || (t_lo <= p.t && p.t <= t_hi);
    }
};

// Stability certificates. Numerics never claim stability they cannot certify:
// slope certificates come with the declared slope, tilt certificates with a
// validity region, and a Delta = 0 certificate promotes slope-stability to
// tilt-stability everywhere.
struct SlopeStableCert {
    Slope mu_H;
    bool strict = true;  // stable vs merely semistable
};
struct TiltStableCert {
    Region valid;
};
struct DeltaZeroCert {};

using Certificate = std::variant<SlopeStableCert, TiltStableCert, DeltaZeroCert>;

struct ObjectDescriptor {
    CharVec v;       // character of the unshifted object
    int shift = 0;   // homological shift applied on top
    Certificate cert;
    std::optional<int> clifford_j;  // set for catalog B_j objects
    std::string name;
};

// Makes a slope-certified descriptor, checking the declared slope against
// e1/e0 when the rank is nonzero.
ObjectDescriptor make_slope_stable(CharVec v, int shift, std::string name,
                                   bool strict = true);
ObjectDescriptor make_delta_zero(CharVec v, int shift, std::string name);

struct HeartSpec {
    enum class Kind { PlainCoh, TiltedCoh, DoubleTilt } kind;
    Rational beta;  // TiltedCoh, DoubleTilt
    Rational t;     // DoubleTilt
    Rational mu0;   // DoubleTilt

    static HeartSpec plain() { return {Kind::PlainCoh, 0, 0, 0}; }
    static HeartSpec tilted(Rational beta) {
        return {Kind::TiltedCoh, std::move(beta), 0, 0};
    }
    static HeartSpec double_tilt(Rational t, Rational beta, Rational mu0) {
        if (t <= 0)
            throw std::invalid_argument("HeartSpec: t must be positive");
        return {Kind::DoubleTilt, std::move(beta), std::move(t), std::move(mu0)};
    }
};

struct HeartAnswer {
    enum class Kind { Yes, No, NeedsShift, Unknown } kind;
    int shift = 0;  // the shift that would be a member, for NeedsShift

    bool yes() const { return kind == Kind::Yes; }
};

// Z_H = i e0 - e1, as a (re, im) pair.
Charge z_slope(const CharVec& v);

// Tilt charge at (t, beta): with w = ch^beta(v),
//   re = (t/2) w.e0 - w.e2,  im = w.e1.
Charge z_tilt(const CharVec& v, const StabParams& p);

// mu = -re/im for im > 0, +infinity for im = 0; im < 0 means the class is not
// in the heart and is an error.
Slope mu_of(const Charge& z);

// Division by u' = -mu0 + i, up to a positive real scalar. For mu0 = 0 this is
// (re, im) -> (im, -re). Hearts, slopes and all orderings are unchanged by the
// scalar.
Charge rotate_charge(const Charge& z, const Rational& mu0);

// Slope of v at p, computed with the correct sign for the shift k placing the
// object in Coh^beta (charge of E[k] is (-1)^k Z(E)).
Slope tilt_slope(const CharVec& v, int heart_shift, const StabParams& p);

HeartAnswer heart_member(const ObjectDescriptor& obj, const HeartSpec& h);

struct Geometry {
    enum class Kind { Fano, CliffordP3 } kind;
    int index = 0;  // i_X, Fano only
    int dim = 3;

    static Geometry fano(int index, int dim) { return {Kind::Fano, index, dim}; }
    static Geometry clifford_p3() { return {Kind::CliffordP3, 0, 3}; }
};

// Numerical Serre functor: twist by K_X = -i_X H and shift by dim (Fano), or
// index shift j -> j-3 and shift by 3 (Clifford catalog objects).
ObjectDescriptor serre_image(const ObjectDescriptor& obj, const Geometry& g);

}  // namespace kstab
