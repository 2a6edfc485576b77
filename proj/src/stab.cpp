#include "kstab/stab.hpp"

#include "kstab/cubic4.hpp"

namespace kstab {

namespace {

// Slope of a sheaf class: e1/e0 for nonzero rank, +infinity for torsion.
Slope sheaf_slope(const CharVec& v) {
    if (v.e0 == 0)
        return Slope::inf();
    return Slope::finite(v.e1 / v.e0);
}

}  // namespace

ObjectDescriptor make_slope_stable(CharVec v, int shift, std::string name,
                                   bool strict) {
    ObjectDescriptor obj;
    obj.v = std::move(v);
    obj.shift = shift;
    obj.cert = SlopeStableCert{sheaf_slope(obj.v), strict};
    obj.name = std::move(name);
    return obj;
}

ObjectDescriptor make_delta_zero(CharVec v, int shift, std::string name) {
    const Rational delta = (v.ambient == Ambient::CliffordTwisted)
                               ? delta_B0(v)
                               : delta_H(v);
    if (delta != 0)
        throw std::invalid_argument("make_delta_zero: discriminant is nonzero");
    ObjectDescriptor obj;
    obj.v = std::move(v);
    obj.shift = shift;
    obj.cert = DeltaZeroCert{};
    obj.name = std::move(name);
    return obj;
}

Charge z_slope(const CharVec& v) {
    return {-v.e1, v.e0};
}

Charge z_tilt(const CharVec& v, const StabParams& p) {
    const CharVec w = twist_beta(v, p.beta);
    return {p.t / 2 * w.e0 - w.e2, w.e1};
}

Slope mu_of(const Charge& z) {
    if (z.im < 0)
        throw std::domain_error("mu_of: negative imaginary part (not in heart)");
    if (z.im == 0)
        return Slope::inf();
    return Slope::finite(-z.re / z.im);
}

Charge rotate_charge(const Charge& z, const Rational& mu0) {
    // z / u' with u' = -mu0 + i, rescaled by |u'|^2 > 0:
    // z * conj(u') = (re + i im)(-mu0 - i).
    return {-mu0 * z.re + z.im, -mu0 * z.im - z.re};
}

Slope tilt_slope(const CharVec& v, int heart_shift, const StabParams& p) {
    Charge z = z_tilt(v, p);
    if (heart_shift % 2 != 0)
        z = -z;
    return mu_of(z);
}

namespace {

// Shift placing a slope-semistable sheaf of slope mu in Coh^beta:
// 0 when mu > beta, 1 when mu <= beta.
int coh_beta_shift(const Slope& mu, const Rational& beta) {
    return mu > Slope::finite(beta) ? 0 : 1;
}

// Slope information available from the certificate, if any.
std::optional<Slope> certified_slope(const ObjectDescriptor& obj) {
    if (const auto* s = std::get_if<SlopeStableCert>(&obj.cert))
        return s->mu_H;
    if (std::holds_alternative<DeltaZeroCert>(obj.cert))
        return sheaf_slope(obj.v);
    return std::nullopt;
}

}  // namespace

HeartAnswer heart_member(const ObjectDescriptor& obj, const HeartSpec& h) {
    using K = HeartAnswer::Kind;

    const auto mu = certified_slope(obj);

    switch (h.kind) {
    case HeartSpec::Kind::PlainCoh: {
        if (!mu)
            return {K::Unknown};
        return obj.shift == 0 ? HeartAnswer{K::Yes} : HeartAnswer{K::NeedsShift, 0};
    }
    case HeartSpec::Kind::TiltedCoh: {
        if (!mu)
            return {K::Unknown};
        const int k = coh_beta_shift(*mu, h.beta);
        return obj.shift == k ? HeartAnswer{K::Yes} : HeartAnswer{K::NeedsShift, k};
    }
    case HeartSpec::Kind::DoubleTilt: {
        // Requires tilt-stability at (t, beta): either a Delta = 0 certificate
        // (valid everywhere) or a region-scoped tilt certificate.
        const StabParams p{h.t, h.beta};
        const bool tilt_ok =
            std::holds_alternative<DeltaZeroCert>(obj.cert) ||
            (std::holds_alternative<TiltStableCert>(obj.cert) &&
             std::get<TiltStableCert>(obj.cert).valid.contains(p));
        if (!tilt_ok)
            return {K::Unknown};
        const auto mu_base = mu ? mu : std::optional<Slope>(sheaf_slope(obj.v));
        const int k1 = coh_beta_shift(*mu_base, h.beta);
        const Slope m = tilt_slope(obj.v, k1, p);
        const int k2 = m > Slope::finite(h.mu0) ? 0 : 1;
        const int k = k1 + k2;
        return obj.shift == k ? HeartAnswer{K::Yes} : HeartAnswer{K::NeedsShift, k};
    }
    }
    return {K::Unknown};
}

ObjectDescriptor serre_image(const ObjectDescriptor& obj, const Geometry& g) {
    ObjectDescriptor out = obj;
    switch (g.kind) {
    case Geometry::Kind::Fano: {
        // Tensor by O(K_X) = O(-i_X H) multiplies the character by e^{-i_X H},
        // which is the beta-twist at beta = i_X.
        out.v = twist_beta(obj.v, Rational(g.index));
        out.shift = obj.shift + g.dim;
        if (const auto* s = std::get_if<SlopeStableCert>(&obj.cert)) {
            SlopeStableCert c = *s;
            if (!c.mu_H.infinite)
                c.mu_H.value -= g.index;
            out.cert = c;
        }
        return out;
    }
    case Geometry::Kind::CliffordP3: {
        if (!obj.clifford_j)
            throw std::invalid_argument(
                "serre_image: Clifford Serre functor needs a catalog B_j object");
        const int j = *obj.clifford_j - 3;
        out.v = clifford_class(j);
        out.clifford_j = j;
        out.shift = obj.shift + 3;
        out.name = "B_" + std::to_string(j);
        return out;
    }
    }
    throw std::logic_error("serre_image: unreachable");
}

}  // namespace kstab
