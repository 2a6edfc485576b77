// Command-line front end. All computation goes through the C library
// interface; this file only builds JSON requests and formats responses.

#include "kstab/kstab.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// "e0,e1,e2" with exact rational entries; parsing is left to the engine.
json charvec_arg(const std::string& coords, const std::string& ambient,
                 const std::string& d) {
    const auto parts = split(coords, ',');
    if (parts.size() != 3)
        throw CLI::ValidationError("--v", "expected e0,e1,e2");
    json v = {{"ambient", ambient}, {"e0", parts[0]}, {"e1", parts[1]},
              {"e2", parts[2]}};
    if (!d.empty())
        v["d"] = d;
    return v;
}

struct Outcome {
    int exit_code = 2;
    json response;
};

Outcome run_request(const json& request) {
    Outcome out;
    kstab_result* r = kstab_eval(request.dump().c_str());
    if (!r) {
        std::cerr << "allocation failure\n";
        return out;
    }
    out.response = json::parse(kstab_result_json(r));
    const int status = kstab_result_status(r);
    out.exit_code = status == KSTAB_OK ? 0 : status == KSTAB_VERIFY_FAILED ? 1 : 2;
    kstab_result_free(r);
    return out;
}

void print_report(const json& payload) {
    for (const auto& c : payload.at("checks"))
        std::cout << (c.at("ok").get<bool>() ? "[ok]   " : "[FAIL] ")
                  << c.at("name").get<std::string>() << "  ("
                  << c.at("witness").get<std::string>() << ")\n";
    for (const auto& n : payload.at("notes"))
        std::cout << "note: " << n.get<std::string>() << "\n";
    std::cout << "overall: "
              << (payload.at("overall").get<bool>() ? "verified" : "FAILED")
              << "\n";
}

void print_human(const std::string& cmd, const json& resp) {
    const json& payload = resp.at("payload");
    const int status = resp.at("status").get<int>();
    if (status >= 2) {
        std::cerr << "error: " << resp.at("message").get<std::string>() << "\n";
        return;
    }
    if (cmd == "verify") {
        print_report(payload);
        return;
    }
    if (cmd == "slope") {
        std::cout << "Z = (" << payload.at("z").at("re").get<std::string>()
                  << ", " << payload.at("z").at("im").get<std::string>()
                  << ")\nmu = " << payload.at("mu").get<std::string>()
                  << "\nmu_H = " << payload.at("mu_H").get<std::string>()
                  << "\ndelta = " << payload.at("delta").get<std::string>()
                  << "\n";
        return;
    }
    if (cmd == "heart") {
        std::cout << "member: " << payload.at("answer").get<std::string>();
        if (payload.contains("shift"))
            std::cout << " (shift " << payload.at("shift").get<int>() << ")";
        std::cout << "\n";
        return;
    }
    if (cmd == "walls") {
        std::cout << payload.at("count").get<std::size_t>() << " hit(s)\n";
        for (const auto& h : payload.at("hits")) {
            const json& w = h.at("w");
            const json& wall = h.at("wall");
            std::cout << "w = (" << w.at("e0").get<std::string>() << ", "
                      << w.at("e1").get<std::string>() << ", "
                      << w.at("e2").get<std::string>() << ")  "
                      << wall.at("kind").get<std::string>();
            if (wall.contains("center"))
                std::cout << " center " << wall.at("center").get<std::string>()
                          << " radius^2 "
                          << wall.at("radius_sq").get<std::string>();
            if (wall.contains("beta0"))
                std::cout << " beta " << wall.at("beta0").get<std::string>();
            std::cout << "\n";
        }
        return;
    }
    if (cmd == "clifford") {
        for (const auto& row : payload.at("rows")) {
            const json& c = row.at("class");
            std::cout << "B_" << row.at("j").get<int>() << ": ("
                      << c.at("e0").get<std::string>() << ", "
                      << c.at("e1").get<std::string>() << ", "
                      << c.at("e2").get<std::string>() << ")  mu = "
                      << row.at("mu").get<std::string>() << "  Delta_B0 = "
                      << row.at("delta_B0").get<std::string>() << "\n";
        }
        return;
    }
    // mukai and anything structured: dump the payload
    std::cout << payload.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for tilt stability, wall geometry "
                 "and Mukai-lattice computations"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the raw JSON response");

    std::string v_coords, ambient = "threefold", d_str, t_str, beta_str;
    int shift = 0;

    auto add_charvec = [&](CLI::App* sub, bool need_params) {
        sub->add_option("--v", v_coords, "character e0,e1,e2 (exact rationals)")
            ->required();
        sub->add_option("--ambient", ambient,
                        "threefold|surface|clifford|clifford_twisted");
        sub->add_option("--d", d_str, "polarization degree H^n");
        if (need_params) {
            sub->add_option("--t", t_str, "t = alpha^2 > 0")->required();
            sub->add_option("--beta", beta_str, "beta")->required();
        }
    };

    auto* slope = app.add_subcommand("slope", "tilt charge and slope at (t, beta)");
    add_charvec(slope, true);
    slope->add_option("--shift", shift, "homological shift");

    auto* heart = app.add_subcommand("heart", "heart membership of an object");
    add_charvec(heart, false);
    std::string heart_kind = "tilted", cert = "slope_stable", mu0_str = "0";
    heart->add_option("--kind", heart_kind, "plain|tilted|double_tilt");
    heart->add_option("--beta", beta_str, "beta");
    heart->add_option("--t", t_str, "t (double_tilt)");
    heart->add_option("--mu0", mu0_str, "slope cut (double_tilt)");
    heart->add_option("--shift", shift, "homological shift");
    heart->add_option("--cert", cert, "slope_stable|delta_zero");

    auto* walls = app.add_subcommand("walls", "enumerate destabilizing walls");
    add_charvec(walls, false);
    std::string preset = "threefold", quantum, region_str;
    long cap = 3;
    walls->add_option("--region", region_str,
                      "beta_lo,beta_hi,t_lo,t_hi or beta,t (point)")
        ->required();
    walls->add_option("--preset", preset, "threefold|clifford");
    walls->add_option("--cap", cap, "coordinate index cap");
    walls->add_option("--quantum", quantum, "Im Z integrality quantum");

    auto* verify = app.add_subcommand("verify", "run a construction verifier");
    verify->require_subcommand(1);
    int index = 2, deg = 1, genus = 6;
    std::string eps_str = "1/10", dv_str;
    auto* vfano = verify->add_subcommand("fano", "threefold hypotheses");
    vfano->add_option("--index", index, "Fano index (1 or 2)")->required();
    vfano->add_option("--deg", deg, "degree H^3 (index 2 catalog key)");
    vfano->add_option("--genus", genus, "genus (index 1)");
    vfano->add_option("--d", dv_str, "H^3 as a rational (index 2, overrides --deg)");
    vfano->add_option("--t", t_str, "t = alpha^2")->required();
    vfano->add_option("--eps", eps_str, "beta offset (index 1)");
    auto* vcubic = verify->add_subcommand("cubic4", "cubic-fourfold hypotheses");
    vcubic->add_option("--t", t_str, "t = alpha^2")->required();
    vcubic->add_option("--beta", beta_str, "beta (default -1)");
    auto* vone = verify->add_subcommand("1object", "one-object collection");
    vone->add_option("--index", index, "Fano index")->required();
    vone->add_option("--deg", deg, "catalog key (degree or genus)")->required();
    vone->add_option("--t", t_str, "t = alpha^2")->required();

    auto* clifford = app.add_subcommand("clifford", "Clifford module catalog");
    std::string j_range = "-2..3";
    clifford->add_option("--j-range", j_range, "index range a..b");

    auto* mukai = app.add_subcommand("mukai", "lattice queries");
    std::string builtin = "a2", vec_str, x_str, y_str;
    long bound = 10;
    bool minus_two = false, degree_shift_flag = false, distinguished = false;
    mukai->add_option("--builtin", builtin, "a2|u|mukai24");
    mukai->add_flag("--minus-two", minus_two, "(-2)-vector search");
    mukai->add_option("--bound", bound, "coordinate bound");
    mukai->add_option("--ext1", vec_str, "ext^1 of a stable class (coords)");
    mukai->add_option("--pairing", x_str, "pairing: first vector");
    mukai->add_option("--with", y_str, "pairing: second vector");
    mukai->add_flag("--degree-shift", degree_shift_flag, "degree-shift matrix");
    mukai->add_flag("--distinguished", distinguished, "distinguished classes");
    std::string decomp_str;
    mukai->add_option("--decompose", decomp_str,
                      "isotropic splittings of a square-2 class");

    auto* plot = app.add_subcommand("plot", "wall diagram");
    add_charvec(plot, false);
    std::string out_file, format = "svg";
    plot->add_option("--region", region_str, "beta_lo,beta_hi,t_lo,t_hi")
        ->required();
    plot->add_option("--preset", preset, "threefold|clifford");
    plot->add_option("--cap", cap, "coordinate index cap");
    plot->add_option("--quantum", quantum, "Im Z integrality quantum");
    plot->add_option("--format", format, "svg|json");
    plot->add_option("--out", out_file, "write document to file");

    // let --json appear after any subcommand
    for (CLI::App* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands(nullptr))
            nested->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    auto region_json = [&]() -> json {
        const auto parts = split(region_str, ',');
        if (parts.size() == 2)
            return {{"beta_lo", parts[0]}, {"beta_hi", parts[0]},
                    {"t_lo", parts[1]}, {"t_hi", parts[1]}};
        if (parts.size() != 4)
            throw CLI::ValidationError("--region",
                                       "expected beta_lo,beta_hi,t_lo,t_hi");
        return {{"beta_lo", parts[0]}, {"beta_hi", parts[1]},
                {"t_lo", parts[2]}, {"t_hi", parts[3]}};
    };
    auto config_json = [&]() -> json {
        json cfg = {{"preset", preset}, {"cap", cap}};
        if (preset == "threefold")
            cfg["d"] = d_str.empty() ? "1" : d_str;
        if (!quantum.empty())
            cfg["quantum"] = quantum;
        return cfg;
    };
    auto intvec_json = [](const std::string& s) {
        json out = json::array();
        for (const auto& p : split(s, ','))
            out.push_back(p);
        return out;
    };

    json request;
    std::string cmd;
    try {
        if (*slope) {
            cmd = "slope";
            request = {{"cmd", cmd},
                       {"v", charvec_arg(v_coords, ambient, d_str)},
                       {"t", t_str}, {"beta", beta_str}, {"shift", shift}};
        } else if (*heart) {
            cmd = "heart";
            json h = {{"kind", heart_kind}};
            if (heart_kind != "plain")
                h["beta"] = beta_str;
            if (heart_kind == "double_tilt") {
                h["t"] = t_str;
                h["mu0"] = mu0_str;
            }
            request = {{"cmd", cmd},
                       {"object", {{"v", charvec_arg(v_coords, ambient, d_str)},
                                   {"shift", shift},
                                   {"cert", {{"type", cert}}}}},
                       {"heart", h}};
        } else if (*walls) {
            cmd = "walls";
            request = {{"cmd", cmd},
                       {"v", charvec_arg(v_coords, ambient, d_str)},
                       {"region", region_json()},
                       {"config", config_json()}};
        } else if (*verify) {
            cmd = "verify";
            if (*vcubic) {
                request = {{"cmd", cmd}, {"target", "cubic4"}, {"t", t_str}};
                if (!beta_str.empty())
                    request["beta"] = beta_str;
            } else if (*vone) {
                request = {{"cmd", cmd}, {"target", "1object"},
                           {"index", index}, {"deg", deg}, {"t", t_str}};
            } else {
                request = {{"cmd", cmd}, {"target", "fano"}, {"index", index},
                           {"t", t_str}};
                if (index == 2) {
                    request["deg"] = deg;
                    if (!dv_str.empty())
                        request["d"] = dv_str;
                } else {
                    request["genus"] = genus;
                    request["eps"] = eps_str;
                }
            }
        } else if (*clifford) {
            cmd = "clifford";
            const auto pos = j_range.find("..");
            if (pos == std::string::npos)
                throw CLI::ValidationError("--j-range", "expected a..b");
            request = {{"cmd", cmd},
                       {"j_lo", std::stoi(j_range.substr(0, pos))},
                       {"j_hi", std::stoi(j_range.substr(pos + 2))}};
        } else if (*mukai) {
            cmd = "mukai";
            request = {{"cmd", cmd}, {"lattice", builtin}};
            if (minus_two) {
                request["op"] = "minus_two";
                request["bound"] = bound;
            } else if (!vec_str.empty()) {
                request["op"] = "ext1";
                request["v"] = intvec_json(vec_str);
            } else if (!x_str.empty()) {
                request["op"] = "pairing";
                request["x"] = intvec_json(x_str);
                request["y"] = intvec_json(y_str);
            } else if (degree_shift_flag) {
                request["op"] = "degree_shift";
            } else if (distinguished) {
                request["op"] = "distinguished";
            } else if (!decomp_str.empty()) {
                request["op"] = "decomposition";
                request["v"] = intvec_json(decomp_str);
                request["bound"] = bound;
            } else {
                std::cerr << "mukai: no operation selected\n";
                return 2;
            }
        } else if (*plot) {
            cmd = "plot";
            request = {{"cmd", cmd},
                       {"v", charvec_arg(v_coords, ambient, d_str)},
                       {"region", region_json()},
                       {"config", config_json()},
                       {"format", format}};
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const Outcome out = run_request(request);
    if (cmd == "plot" && out.exit_code == 0 && !out_file.empty()) {
        std::ofstream f(out_file, std::ios::binary);
        f << out.response.at("payload").at("document").get<std::string>();
        if (!f) {
            std::cerr << "error: cannot write " << out_file << "\n";
            return 2;
        }
        if (!as_json)
            std::cout << "wrote " << out_file << "\n";
        if (as_json)
            std::cout << out.response.dump() << "\n";
        return out.exit_code;
    }
    if (as_json)
        std::cout << out.response.dump() << "\n";
    else
        print_human(cmd, out.response);
    return out.exit_code;
}
