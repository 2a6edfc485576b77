#include "kstab/fano3.hpp"

#include "kstab/walls.hpp"

#include <limits>

namespace kstab {

namespace {

std::string slope_str(const Slope& s) {
    return s.infinite ? "inf" : to_string(s.value);
}

ObjectDescriptor line_bundle_object(const Rational& k, const Rational& d,
                                    int shift, std::string name) {
    return make_delta_zero(line_bundle_class(k, d, Ambient::Threefold), shift,
                           std::move(name));
}

// Stability of the rank-2 bundle and its twist is a certified catalog fact
// along the band -1 <= beta <= -1/2 (for every t > 0), which is all the
// verifiers use.
ObjectDescriptor e2_object(const Rational& d, const Rational& ch2) {
    ObjectDescriptor obj;
    obj.v = CharVec{Ambient::Threefold, d, 2 * d, -d, ch2};
    obj.shift = 0;
    obj.cert = TiltStableCert{Region::beta_band(-1, Rational(-1, 2))};
    obj.name = "E_2";
    return obj;
}

}  // namespace

FanoEntry catalog(int index, int deg_or_genus) {
    FanoEntry entry;
    entry.index = index;
    entry.deg_or_genus = deg_or_genus;

    if (index == 2) {
        if (deg_or_genus < 1 || deg_or_genus > 5)
            throw std::invalid_argument("catalog: index-2 degree must be in 1..5");
        entry.d = deg_or_genus;
        entry.structure_sheaf = line_bundle_object(0, entry.d, 0, "O");
        entry.o_of_h = line_bundle_object(1, entry.d, 0, "O(H)");
        if (deg_or_genus >= 4)
            entry.explicit_description_route = true;
        return entry;
    }
    if (index != 1)
        throw std::invalid_argument("catalog: index must be 1 or 2");

    const int g = deg_or_genus;
    if (g == 4)
        throw std::invalid_argument(
            "catalog: genus 4 not covered - the rank-2 bundle class lies on both "
            "tangent planes and the slope-chain argument degenerates");
    entry.d = 2 * g - 2;
    entry.structure_sheaf = line_bundle_object(0, entry.d, 0, "O");
    switch (g) {
    case 2:
    case 3:
    case 5:
        break;  // O-orthogonal route only
    case 6:
    case 8:
    case 10:
    case 12:
        entry.e2 = e2_object(entry.d, Rational(g / 2 - 2));
        if (g == 12) {
            entry.rank_only_bundles = {{"E_4", 4}, {"E_3", 3}};
            entry.explicit_description_route = true;
        }
        break;
    case 7:
        entry.rank_only_bundles = {{"E_5", 5}};
        entry.explicit_description_route = true;
        break;
    case 9:
        entry.rank_only_bundles = {{"E_3", 3}};
        entry.explicit_description_route = true;
        break;
    default:
        throw std::invalid_argument("catalog: unsupported genus");
    }
    return entry;
}

namespace {

// mu_{t,beta} of a class at the given heart shift is affine in t; returns
// (A, B) with mu(t) = A + B t, or nullopt when the slope is infinite.
std::optional<std::pair<Rational, Rational>> slope_affine(const CharVec& v,
                                                          int shift,
                                                          const Rational& beta) {
    CharVec w = twist_beta(v, beta);
    if (shift % 2 != 0)
        w = -w;
    if (w.e1 == 0)
        return std::nullopt;
    // mu(t) = (w.e2 - (t/2) w.e0) / w.e1
    return std::make_pair(w.e2 / w.e1, -w.e0 / (2 * w.e1));
}

}  // namespace

Rational alpha_threshold(const FanoEntry& entry, const Rational& beta) {
    std::vector<const ObjectDescriptor*> bundles{&entry.structure_sheaf};
    if (entry.o_of_h)
        bundles.push_back(&*entry.o_of_h);

    std::optional<Rational> bound;
    bool infeasible = false;
    auto constrain = [&](const CharVec& v, int shift, bool positive) {
        const auto ab = slope_affine(v, shift, beta);
        if (!ab)
            return;  // infinite slope: the sign condition degenerates
        Rational a = ab->first, b = ab->second;
        if (!positive) {
            a = -a;
            b = -b;
        }
        // need a + b t > 0 on an interval (0, T)
        if (b < 0) {
            if (a <= 0)
                infeasible = true;
            else if (!bound || -a / b < *bound)
                bound = -a / b;
        } else if (a < 0) {
            infeasible = true;  // fails arbitrarily close to t = 0
        }
        // b >= 0 and a >= 0: no upper bound from this constraint
    };

    for (const auto* obj : bundles) {
        constrain(obj->v, 0, true);
        // Serre twist: G(K_X) = G(-i_X H), placed with shift 1
        constrain(twist_beta(obj->v, Rational(entry.index)), 1, false);
    }
    if (infeasible)
        return 0;
    if (!bound)
        throw std::logic_error("alpha_threshold: constraints do not bound t");
    return *bound;
}

VerificationReport verify_1object(const FanoEntry& entry, const Rational& t) {
    if (t <= 0)
        throw std::invalid_argument("verify_1object: t must be positive");
    VerificationReport rep;
    const Rational beta = Rational(-entry.index, 2);
    const StabParams p{t, beta};

    const ObjectDescriptor& o = entry.structure_sheaf;
    const CharVec ok_class = twist_beta(o.v, Rational(entry.index));
    const ObjectDescriptor ok1 = make_delta_zero(ok_class, 1, "O(K)[1]");

    const HeartSpec heart = HeartSpec::tilted(beta);
    rep.add("heart: O", heart_member(o, heart).yes(), "mu_H = 0");
    rep.add("heart: O(K)[1]", heart_member(ok1, heart).yes(),
            "mu_H = " + to_string(-entry.index));
    rep.add("Delta_H(O) = 0", delta_H(o.v) == 0, to_string(delta_H(o.v)));
    rep.add("Delta_H(O(K)) = 0", delta_H(ok_class) == 0, to_string(delta_H(ok_class)));

    const Slope mu_o = tilt_slope(o.v, 0, p);
    const Slope mu_ok = tilt_slope(ok_class, 1, p);
    rep.add("mu(O) > 0", Slope::finite(0) < mu_o, slope_str(mu_o));
    rep.add("mu(O(K)[1]) < 0", mu_ok < Slope::finite(0), slope_str(mu_ok));

    const HeartSpec second = HeartSpec::double_tilt(t, beta, 0);
    rep.add("second tilt: O", heart_member(o, second).yes(), "shift 0");
    rep.add("second tilt: O(K)[2]",
            heart_member(make_delta_zero(ok_class, 2, "O(K)[2]"), second).yes(),
            "shift 2");

    const Charge z = z_tilt(o.v, p);
    rep.add("Z(O) != 0", !z.is_zero(),
            "(" + to_string(z.re) + ", " + to_string(z.im) + ")");
    return rep;
}

VerificationReport verify_index2(const Rational& d, const Rational& t) {
    if (d <= 0 || t <= 0)
        throw std::invalid_argument("verify_index2: d and t must be positive");
    VerificationReport rep;
    const Rational beta(-1, 2);
    const StabParams p{t, beta};
    const HeartSpec heart = HeartSpec::tilted(beta);

    FanoEntry entry;
    entry.index = 2;
    entry.d = d;
    entry.structure_sheaf = line_bundle_object(0, d, 0, "O");
    entry.o_of_h = line_bundle_object(1, d, 0, "O(H)");

    for (const auto* obj : {&entry.structure_sheaf, &*entry.o_of_h}) {
        const CharVec gk = twist_beta(obj->v, 2);  // G(K_X) = G(-2H)
        const ObjectDescriptor gk1 = make_delta_zero(gk, 1, obj->name + "(K)[1]");
        rep.add("heart: " + obj->name, heart_member(*obj, heart).yes(), "");
        rep.add("heart: " + gk1.name, heart_member(gk1, heart).yes(), "");
        const Slope mu_g = tilt_slope(obj->v, 0, p);
        const Slope mu_gk = tilt_slope(gk, 1, p);
        rep.add("mu(" + obj->name + ") > 0", Slope::finite(0) < mu_g, slope_str(mu_g));
        rep.add("mu(" + gk1.name + ") < 0", mu_gk < Slope::finite(0), slope_str(mu_gk));
    }

    const Rational threshold = alpha_threshold(entry, beta);
    rep.add("t below threshold", t < threshold,
            "threshold = " + to_string(threshold));
    return rep;
}

VerificationReport verify_index1(int g, const Rational& eps, const Rational& t) {
    if (g % 2 != 0 || g < 6)
        throw std::invalid_argument(
            "verify_index1: requires even genus >= 6 (genus 4 is not covered)");
    if (eps <= 0 || t <= 0)
        throw std::invalid_argument("verify_index1: eps and t must be positive");
    const FanoEntry entry = catalog(1, g);
    if (!entry.e2)
        throw std::invalid_argument("verify_index1: entry has no rank-2 bundle data");

    VerificationReport rep;
    const Rational d = entry.d;
    const Rational beta = -1 + eps;
    const StabParams p{t, beta};

    const CharVec v_o = entry.structure_sheaf.v;
    const CharVec v_om = line_bundle_class(-1, d, Ambient::Threefold);
    const CharVec v_e2 = entry.e2->v;
    const CharVec v_e2m = twist_beta(v_e2, 1);  // E_2(-H)

    // (a) tangent-plane location of the rank-2 bundle class
    const TangentSide s1 = tangent_side(v_o, v_e2);
    const TangentSide s2 = tangent_side(v_om, v_e2);
    rep.add("tangent plane at O: interior", s1 == TangentSide::Interior,
            "H ch2(E_2) = " + to_string(v_e2.e2));
    rep.add("tangent plane at O(-H): interior", s2 == TangentSide::Interior, "");

    // (b) integrality exclusion along beta = -1, quantum H^3
    bool excl_e2 = false, excl_e2m = false;
    try {
        excl_e2 = integrality_exclusion(v_e2, -1, d);
        excl_e2m = integrality_exclusion(-v_e2m, -1, d);
    } catch (const std::invalid_argument&) {
        // leave as failed
    }
    rep.add("Im Z_{.,-1}(E_2) = H^3", excl_e2,
            to_string(v_e2.e1 + v_e2.e0));
    rep.add("Im Z_{.,-1}(E_2(-H)[1]) = H^3", excl_e2m,
            to_string(-(v_e2m.e1 + v_e2m.e0)));

    // (c) kernel class at the endpoint (t, beta) = (0, -1) is proportional to
    // the class of O(-H)
    {
        const Vec3 k = kernel_vector(0, -1);
        const bool prop = k[0] * v_om.e1 - k[1] * v_om.e0 == 0 &&
                          k[0] * v_om.e2 - k[2] * v_om.e0 == 0 &&
                          k[1] * v_om.e2 - k[2] * v_om.e1 == 0;
        rep.add("kernel at (0,-1) proportional to O(-H)", prop, "");
    }

    // (d) strict four-slope chain at (t, -1 + eps)
    const Slope mu1 = tilt_slope(v_e2m, 1, p);
    const Slope mu2 = tilt_slope(v_om, 1, p);
    const Slope mu3 = tilt_slope(v_e2, 0, p);
    const Slope mu4 = tilt_slope(v_o, 0, p);
    rep.add("mu(E_2(-H)[1]) < mu(O(-H)[1])", mu1 < mu2,
            slope_str(mu1) + " vs " + slope_str(mu2));
    rep.add("mu(O(-H)[1]) < mu(E_2)", mu2 < mu3,
            slope_str(mu2) + " vs " + slope_str(mu3));
    rep.add("mu(E_2) < mu(O)", mu3 < mu4, slope_str(mu3) + " vs " + slope_str(mu4));

    // (e) a rational mu0 strictly between slopes #2 and #3, and membership in
    // the doubly tilted heart
    if (mu2 < mu3 && !mu2.infinite && !mu3.infinite) {
        const Rational mu0 = (mu2.value + mu3.value) / 2;
        const HeartSpec second = HeartSpec::double_tilt(t, beta, mu0);
        rep.add("mu0 between the middle slopes", true, to_string(mu0));

        ObjectDescriptor e2 = *entry.e2;
        ObjectDescriptor e2m;
        e2m.v = v_e2m;
        e2m.shift = 2;
        e2m.cert = TiltStableCert{Region::beta_band(-1, Rational(-1, 2))};
        e2m.name = "E_2(-H)[2]";

        rep.add("second tilt: O", heart_member(entry.structure_sheaf, second).yes(),
                "");
        rep.add("second tilt: E_2", heart_member(e2, second).yes(), "");
        rep.add("second tilt: O(-H)[2]",
                heart_member(make_delta_zero(v_om, 2, "O(-H)[2]"), second).yes(), "");
        rep.add("second tilt: E_2(-H)[2]", heart_member(e2m, second).yes(), "");
    } else {
        rep.add("mu0 between the middle slopes", false, "middle slopes not strict");
    }
    return rep;
}

}  // namespace kstab
