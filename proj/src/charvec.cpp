#include "kstab/charvec.hpp"

namespace kstab {

CharVec twist_beta(const CharVec& v, const Rational& beta) {
    CharVec w = v;
    w.e1 = v.e1 - beta * v.e0;
    w.e2 = v.e2 - beta * v.e1 + beta * beta / 2 * v.e0;
    return w;
}

Rational delta_H(const CharVec& v) {
    return v.e1 * v.e1 - 2 * v.e0 * v.e2;
}

CharVec line_bundle_class(const Rational& k, const Rational& d, Ambient ambient) {
    if (d <= 0)
        throw std::invalid_argument("line_bundle_class: d must be positive");
    return {ambient, d, d, k * d, k * k * d / 2};
}

CharVec clifford_twist(const CharVec& v) {
    if (v.ambient != Ambient::CliffordUntwisted)
        throw std::invalid_argument("clifford_twist: expects untwisted Clifford class");
    CharVec w = v;
    w.ambient = Ambient::CliffordTwisted;
    w.e2 = v.e2 - Rational(11, 32) * v.e0;
    return w;
}

Rational delta_B0(const CharVec& v) {
    if (v.ambient != Ambient::CliffordTwisted)
        throw std::invalid_argument("delta_B0: expects twisted Clifford class");
    return v.e1 * v.e1 - 2 * v.e0 * v.e2;
}

TangentSide tangent_side(const CharVec& p, const CharVec& x) {
    if (delta_H(p) != 0)
        throw std::invalid_argument("tangent_side: base point not on the quadric");
    if (p.e0 == 0 && p.e1 == 0 && p.e2 == 0)
        throw std::invalid_argument("tangent_side: base point is zero");
    const QForm3& q = delta_form();
    static const Vec3 reference{Rational(1), Rational(0), Rational(1, 2)};
    const Rational ref = q.bilinear(p.coords(), reference);
    if (ref == 0)
        throw std::invalid_argument("tangent_side: reference class lies on the tangent plane");
    const Rational val = q.bilinear(p.coords(), x.coords());
    if (val == 0)
        return TangentSide::Boundary;
    return (val > 0) == (ref > 0) ? TangentSide::Interior : TangentSide::Exterior;
}

BlowupDeltas blowup_delta_pair(const Rational& rk, const Rational& l_sq,
                               const Rational& a, const Rational& ch2) {
    const Rational twisted = ch2 - Rational(11, 32) * rk;
    return {l_sq - a * a - 2 * rk * twisted,
            l_sq - 2 * rk * (twisted + a / 2)};
}

}  // namespace kstab
