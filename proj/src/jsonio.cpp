#include "kstab/jsonio.hpp"

namespace kstab {

json rational_json(const Rational& x) {
    return to_string(x);
}

Rational rational_from(const json& j) {
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected rational as \"p/q\" string or integer");
}

json charge_json(const Charge& z) {
    return {{"re", rational_json(z.re)}, {"im", rational_json(z.im)}};
}

json slope_json(const Slope& s) {
    if (s.infinite)
        return "inf";
    return rational_json(s.value);
}

namespace {

std::string ambient_name(Ambient a) {
    switch (a) {
    case Ambient::Threefold: return "threefold";
    case Ambient::Surface: return "surface";
    case Ambient::CliffordUntwisted: return "clifford";
    case Ambient::CliffordTwisted: return "clifford_twisted";
    }
    throw std::logic_error("ambient_name");
}

Ambient ambient_from(const std::string& s) {
    if (s == "threefold") return Ambient::Threefold;
    if (s == "surface") return Ambient::Surface;
    if (s == "clifford") return Ambient::CliffordUntwisted;
    if (s == "clifford_twisted") return Ambient::CliffordTwisted;
    throw std::invalid_argument("unknown ambient: " + s);
}

}  // namespace

json charvec_json(const CharVec& v) {
    return {{"ambient", ambient_name(v.ambient)},
            {"d", rational_json(v.d)},
            {"e0", rational_json(v.e0)},
            {"e1", rational_json(v.e1)},
            {"e2", rational_json(v.e2)}};
}

CharVec charvec_from(const json& j) {
    CharVec v;
    if (j.contains("ambient"))
        v.ambient = ambient_from(j.at("ambient").get<std::string>());
    v.d = j.contains("d") ? rational_from(j.at("d")) : Rational(1);
    v.e0 = rational_from(j.at("e0"));
    v.e1 = rational_from(j.at("e1"));
    v.e2 = rational_from(j.at("e2"));
    return v;
}

json region_json(const Region& r) {
    if (r.all)
        return {{"all", true}};
    json out = {{"beta_lo", rational_json(r.beta_lo)},
                {"beta_hi", rational_json(r.beta_hi)}};
    if (r.t_unbounded) {
        out["t_unbounded"] = true;
    } else {
        out["t_lo"] = rational_json(r.t_lo);
        out["t_hi"] = rational_json(r.t_hi);
    }
    if (r.include_t_zero)
        out["include_t_zero"] = true;
    return out;
}

Region region_from(const json& j) {
    Region r;
    if (j.value("all", false)) {
        r.all = true;
        return r;
    }
    r.beta_lo = rational_from(j.at("beta_lo"));
    r.beta_hi = rational_from(j.at("beta_hi"));
    if (j.value("t_unbounded", false)) {
        r.t_unbounded = true;
    } else {
        r.t_lo = rational_from(j.at("t_lo"));
        r.t_hi = rational_from(j.at("t_hi"));
    }
    r.include_t_zero = j.value("include_t_zero", false);
    if (r.beta_lo > r.beta_hi || (!r.t_unbounded && r.t_lo > r.t_hi))
        throw std::invalid_argument("region: empty bounds");
    return r;
}

json certificate_json(const Certificate& c) {
    if (const auto* s = std::get_if<SlopeStableCert>(&c))
        return {{"type", "slope_stable"},
                {"mu", slope_json(s->mu_H)},
                {"strict", s->strict}};
    if (const auto* t = std::get_if<TiltStableCert>(&c))
        return {{"type", "tilt_stable"}, {"region", region_json(t->valid)}};
    return {{"type", "delta_zero"}};
}

Certificate certificate_from(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "slope_stable") {
        SlopeStableCert s;
        const json& mu = j.at("mu");
        s.mu_H = (mu.is_string() && mu.get<std::string>() == "inf")
                     ? Slope::inf()
                     : Slope::finite(rational_from(mu));
        s.strict = j.value("strict", true);
        return s;
    }
    if (type == "tilt_stable")
        return TiltStableCert{region_from(j.at("region"))};
    if (type == "delta_zero")
        return DeltaZeroCert{};
    throw std::invalid_argument("unknown certificate type: " + type);
}

json object_json(const ObjectDescriptor& o) {
    json out = {{"v", charvec_json(o.v)},
                {"shift", o.shift},
                {"cert", certificate_json(o.cert)}};
    if (o.clifford_j)
        out["clifford_j"] = *o.clifford_j;
    if (!o.name.empty())
        out["name"] = o.name;
    return out;
}

ObjectDescriptor object_from(const json& j) {
    ObjectDescriptor o;
    o.v = charvec_from(j.at("v"));
    o.shift = j.value("shift", 0);
    if (j.contains("cert"))
        o.cert = certificate_from(j.at("cert"));
    else
        o.cert = make_slope_stable(o.v, 0, "").cert;
    if (j.contains("clifford_j"))
        o.clifford_j = j.at("clifford_j").get<int>();
    o.name = j.value("name", std::string{});
    return o;
}

json wall_json(const WallDescriptor& w) {
    json out;
    switch (w.kind) {
    case WallDescriptor::Kind::None:
        out["kind"] = "none";
        break;
    case WallDescriptor::Kind::Empty:
        out["kind"] = "empty";
        break;
    case WallDescriptor::Kind::Vertical:
        out["kind"] = "vertical";
        out["beta0"] = rational_json(w.beta0);
        break;
    case WallDescriptor::Kind::Semicircle:
        out["kind"] = "semicircle";
        out["center"] = rational_json(w.center);
        out["radius_sq"] = rational_json(w.radius_sq);
        break;
    }
    return out;
}

json report_json(const VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"witness", c.witness}});
    return {{"overall", r.overall()}, {"checks", checks}, {"notes", r.notes}};
}

}  // namespace kstab
