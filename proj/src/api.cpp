#include "kstab/api.hpp"

#include "kstab/cubic4.hpp"
#include "kstab/fano3.hpp"
#include "kstab/mukai.hpp"
#include "kstab/support.hpp"

#include <cstdlib>

namespace kstab::api {

namespace {

long max_candidates_limit() {
    if (const char* env = std::getenv("KSTAB_MAX_CANDIDATES")) {
        const long v = std::atol(env);
        if (v > 0)
            return v;
    }
    return 1000000;
}

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

HeartSpec heart_from(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "plain")
        return HeartSpec::plain();
    if (kind == "tilted")
        return HeartSpec::tilted(rational_from(j.at("beta")));
    if (kind == "double_tilt")
        return HeartSpec::double_tilt(rational_from(j.at("t")),
                                      rational_from(j.at("beta")),
                                      rational_from(j.at("mu0")));
    throw UsageError("unknown heart kind: " + kind);
}

LatticeStepConfig steps_from(const json& j) {
    if (j.contains("preset")) {
        const std::string preset = j.at("preset").get<std::string>();
        const long cap = j.at("cap").get<long>();
        if (preset == "threefold")
            return threefold_steps(rational_from(j.at("d")), cap);
        if (preset == "clifford")
            return clifford_steps(cap);
        throw UsageError("unknown step preset: " + preset);
    }
    LatticeStepConfig cfg;
    if (j.contains("step0")) cfg.step0 = rational_from(j.at("step0"));
    if (j.contains("step1")) cfg.step1 = rational_from(j.at("step1"));
    if (j.contains("step2")) cfg.step2 = rational_from(j.at("step2"));
    cfg.cap0 = j.at("cap0").get<long>();
    cfg.cap1 = j.at("cap1").get<long>();
    cfg.cap2 = j.at("cap2").get<long>();
    if (j.contains("quantum"))
        cfg.quantum = rational_from(j.at("quantum"));
    cfg.partitions = j.value("partitions", 1);
    return cfg;
}

void check_enumeration_size(const LatticeStepConfig& cfg) {
    const Int count = (2 * Int(cfg.cap0) + 1) * (2 * Int(cfg.cap1) + 1) *
                      (2 * Int(cfg.cap2) + 1);
    if (count > max_candidates_limit())
        throw UsageError("enumeration size " + count.str() +
                         " exceeds KSTAB_MAX_CANDIDATES");
}

const LatticeSpec& builtin_lattice(const std::string& name) {
    if (name == "a2")
        return lattice_a2();
    if (name == "u")
        return lattice_u();
    if (name == "mukai24")
        return lattice_mukai24();
    throw UsageError("unknown builtin lattice: " + name);
}

LatticeSpec lattice_from(const json& j) {
    if (j.is_string())
        return builtin_lattice(j.get<std::string>());
    IntMat gram;
    for (const auto& row : j.at("gram")) {
        IntVec r;
        for (const auto& c : row)
            r.push_back(Int(c.get<long long>()));
        gram.push_back(std::move(r));
    }
    std::optional<IntVec> l1, l2;
    auto read_vec = [](const json& a) {
        IntVec v;
        for (const auto& c : a)
            v.push_back(Int(c.get<long long>()));
        return v;
    };
    if (j.contains("lambda1"))
        l1 = read_vec(j.at("lambda1"));
    if (j.contains("lambda2"))
        l2 = read_vec(j.at("lambda2"));
    return make_lattice(std::move(gram), std::move(l1), std::move(l2));
}

json intvec_json(const IntVec& v) {
    json out = json::array();
    for (const auto& c : v)
        out.push_back(c.str());
    return out;
}

IntVec intvec_from(const json& j) {
    IntVec v;
    for (const auto& c : j)
        v.push_back(Int(c.is_string() ? Int(c.get<std::string>())
                                      : Int(c.get<long long>())));
    return v;
}

json cmd_slope(const json& req) {
    const CharVec v = charvec_from(req.at("v"));
    const StabParams p{rational_from(req.at("t")), rational_from(req.at("beta"))};
    const int shift = req.value("shift", 0);
    Charge z = z_tilt(v, p);
    if (shift % 2 != 0)
        z = -z;
    json payload = {{"z", charge_json(z)}};
    payload["mu"] = slope_json(tilt_slope(v, shift, p));
    payload["mu_H"] = slope_json(mu_of(z_slope(v)));
    payload["delta"] = rational_json(v.ambient == Ambient::CliffordTwisted
                                         ? delta_B0(v)
                                         : delta_H(v));
    return payload;
}

json cmd_heart(const json& req) {
    const ObjectDescriptor obj = object_from(req.at("object"));
    const HeartAnswer a = heart_member(obj, heart_from(req.at("heart")));
    json payload;
    switch (a.kind) {
    case HeartAnswer::Kind::Yes: payload["answer"] = "yes"; break;
    case HeartAnswer::Kind::No: payload["answer"] = "no"; break;
    case HeartAnswer::Kind::Unknown: payload["answer"] = "unknown"; break;
    case HeartAnswer::Kind::NeedsShift:
        payload["answer"] = "needs_shift";
        payload["shift"] = a.shift;
        break;
    }
    return payload;
}

json walls_payload(const CharVec& v, const Region& region,
                   const LatticeStepConfig& cfg) {
    check_enumeration_size(cfg);
    json hits = json::array();
    for (const auto& h : enumerate_destabilizers(v, region, cfg)) {
        json item = {{"w", charvec_json(h.w)},
                     {"wall", wall_json(h.wall)},
                     {"at", {{"t", rational_json(h.at.t)},
                             {"beta", rational_json(h.at.beta)}}}};
        hits.push_back(std::move(item));
    }
    return {{"count", hits.size()}, {"hits", hits}};
}

json cmd_walls(const json& req) {
    return walls_payload(charvec_from(req.at("v")), region_from(req.at("region")),
                         steps_from(req.at("config")));
}

json cmd_verify(const json& req, int& status) {
    const std::string target = req.at("target").get<std::string>();
    VerificationReport rep;
    if (target == "cubic4") {
        rep = verify_cubic4(rational_from(req.at("t")),
                            req.contains("beta") ? rational_from(req.at("beta"))
                                                 : Rational(-1));
    } else if (target == "1object") {
        const FanoEntry entry =
            catalog(req.at("index").get<int>(), req.at("deg").get<int>());
        rep = verify_1object(entry, rational_from(req.at("t")));
    } else if (target == "fano") {
        const int index = req.at("index").get<int>();
        if (index == 2) {
            const Rational d = req.contains("d")
                                   ? rational_from(req.at("d"))
                                   : catalog(2, req.at("deg").get<int>()).d;
            rep = verify_index2(d, rational_from(req.at("t")));
        } else if (index == 1) {
            rep = verify_index1(req.at("genus").get<int>(),
                                req.contains("eps") ? rational_from(req.at("eps"))
                                                    : Rational(1, 10),
                                rational_from(req.at("t")));
        } else {
            throw UsageError("verify fano: index must be 1 or 2");
        }
    } else {
        throw UsageError("unknown verify target: " + target);
    }
    if (!rep.overall())
        status = VERIFY_FAILED;
    return report_json(rep);
}

json cmd_clifford(const json& req) {
    const int lo = req.at("j_lo").get<int>();
    const int hi = req.at("j_hi").get<int>();
    if (lo > hi)
        throw UsageError("clifford: empty index range");
    if (hi - lo > 1000)
        throw UsageError("clifford: range too large");
    json rows = json::array();
    for (int j = lo; j <= hi; ++j) {
        const CharVec c = clifford_class(j);
        rows.push_back({{"j", j},
                        {"class", charvec_json(c)},
                        {"mu", rational_json(c.e1 / c.e0)},
                        {"delta_B0", rational_json(delta_B0(c))}});
    }
    return {{"rows", rows}};
}

json cmd_mukai(const json& req) {
    const LatticeSpec l = lattice_from(req.at("lattice"));
    const std::string op = req.at("op").get<std::string>();
    if (op == "minus_two") {
        const long bound = req.at("bound").get<long>();
        const MinusTwoSearch s = minus_two_search(l, bound, max_candidates_limit());
        json vecs = json::array();
        for (const auto& v : s.vectors)
            vecs.push_back(intvec_json(v));
        return {{"vectors", vecs}, {"complete", s.complete}};
    }
    if (op == "pairing") {
        const IntVec x = intvec_from(req.at("x"));
        const IntVec y = intvec_from(req.at("y"));
        return {{"pairing", pairing(x, y, l).str()},
                {"euler", euler(x, y, l).str()}};
    }
    if (op == "ext1")
        return {{"ext1", stable_ext1(intvec_from(req.at("v")), l).str()}};
    if (op == "in_p0") {
        ComplexEta eta;
        for (const auto& c : req.at("re"))
            eta.re.push_back(rational_from(c));
        for (const auto& c : req.at("im"))
            eta.im.push_back(rational_from(c));
        const bool p = in_P(eta, l);
        json out = {{"in_p", p}};
        const P0Verdict v = in_P0(eta, l, req.value("bound", 10L));
        out["in_p0"] = v == P0Verdict::Yes ? "yes"
                       : v == P0Verdict::No ? "no"
                                            : "yes_up_to_bound";
        return out;
    }
    if (op == "degree_shift") {
        const auto m = degree_shift_matrix();
        json rows = json::array();
        rows.push_back(json::array({m[0][0].str(), m[0][1].str()}));
        rows.push_back(json::array({m[1][0].str(), m[1][1].str()}));
        return {{"matrix", rows}};
    }
    if (op == "distinguished") {
        const DistinguishedClasses d = distinguished_classes(l);
        return {{"lambda1", intvec_json(d.lambda1)},
                {"lambda2", intvec_json(d.lambda2)},
                {"fano_lines", intvec_json(d.fano_lines)},
                {"plucker", intvec_json(d.plucker)}};
    }
    if (op == "decomposition") {
        const DecompositionReport r =
            decomposition_obstruction(intvec_from(req.at("v")), l,
                                      req.value("bound", 10L));
        json splits = json::array();
        for (const auto& [a, b] : r.splittings)
            splits.push_back({{"a", intvec_json(a)}, {"b", intvec_json(b)}});
        return {{"splittings", splits},
                {"all_certified", r.all_certified},
                {"symbolic_identity", r.symbolic_identity}};
    }
    throw UsageError("unknown mukai op: " + op);
}

json cmd_plot(const json& req) {
    const Region region = region_from(req.at("region"));
    std::vector<WallDescriptor> walls;
    if (req.contains("pairs")) {
        for (const auto& pr : req.at("pairs"))
            walls.push_back(wall_curve(charvec_from(pr.at(0)),
                                       charvec_from(pr.at(1))));
    } else {
        const CharVec v = charvec_from(req.at("v"));
        const LatticeStepConfig cfg = steps_from(req.at("config"));
        check_enumeration_size(cfg);
        for (const auto& h : enumerate_destabilizers(v, region, cfg))
            walls.push_back(h.wall);
    }
    const std::string fmt = req.value("format", std::string("svg"));
    if (fmt != "svg" && fmt != "json")
        throw UsageError("plot: format must be svg or json");
    return {{"format", fmt},
            {"document", emit_plot(walls, region,
                                   fmt == "svg" ? PlotFormat::Svg
                                                : PlotFormat::Json)}};
}

}  // namespace

json eval(const json& request) {
    json out = {{"status", OK}, {"payload", json::object()}, {"message", ""}};
    try {
        const std::string cmd = request.at("cmd").get<std::string>();
        int status = OK;
        if (cmd == "slope")
            out["payload"] = cmd_slope(request);
        else if (cmd == "heart")
            out["payload"] = cmd_heart(request);
        else if (cmd == "walls")
            out["payload"] = cmd_walls(request);
        else if (cmd == "verify")
            out["payload"] = cmd_verify(request, status);
        else if (cmd == "clifford")
            out["payload"] = cmd_clifford(request);
        else if (cmd == "mukai")
            out["payload"] = cmd_mukai(request);
        else if (cmd == "plot")
            out["payload"] = cmd_plot(request);
        else
            throw UsageError("unknown command: " + cmd);
        out["status"] = status;
    } catch (const UsageError& e) {
        out["status"] = ERR_USAGE;
        out["message"] = e.what();
    } catch (const json::exception& e) {
        out["status"] = ERR_USAGE;
        out["message"] = e.what();
    } catch (const std::invalid_argument& e) {
        out["status"] = ERR_USAGE;
        out["message"] = e.what();
    } catch (const std::exception& e) {
        out["status"] = ERR_INTERNAL;
        out["message"] = e.what();
    }
    return out;
}

std::string eval_string(const std::string& request) {
    json req;
    try {
        req = json::parse(request);
    } catch (const json::exception& e) {
        return json{{"status", ERR_USAGE},
                    {"payload", json::object()},
                    {"message", e.what()}}
            .dump();
    }
    return eval(req).dump();
}

}  // namespace kstab::api
