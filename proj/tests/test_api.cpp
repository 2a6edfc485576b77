#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kstab/api.hpp"

using namespace kstab;
using kstab::api::eval;
using kstab::api::eval_string;

TEST_CASE("slope request") {
    const json res = eval({{"cmd", "slope"},
                           {"v", {{"e0", "1"}, {"e1", "0"}, {"e2", "0"}}},
                           {"t", "1/5"},
                           {"beta", "-1/2"}});
    CHECK(res.at("status") == 0);
    const json& p = res.at("payload");
    CHECK(p.at("z").at("im") == "1/2");
    CHECK(p.at("mu") == "1/20");  // 1/4 - 1/5
    CHECK(p.at("mu_H") == "0");
    CHECK(p.at("delta") == "0");
}

TEST_CASE("slope of a torsion class is infinite") {
    const json res = eval({{"cmd", "slope"},
                           {"v", {{"e0", "0"}, {"e1", "0"}, {"e2", "1"}}},
                           {"t", "1"},
                           {"beta", "0"}});
    CHECK(res.at("status") == 0);
    CHECK(res.at("payload").at("mu") == "inf");
}

TEST_CASE("heart request") {
    const json res = eval(
        {{"cmd", "heart"},
         {"object",
          {{"v", {{"e0", "1"}, {"e1", "-1"}, {"e2", "1/2"}}},
           {"shift", 1},
           {"cert", {{"type", "delta_zero"}}}}},
         {"heart", {{"kind", "tilted"}, {"beta", "-1/2"}}}});
    CHECK(res.at("status") == 0);
    CHECK(res.at("payload").at("answer") == "yes");

    const json needs = eval(
        {{"cmd", "heart"},
         {"object",
          {{"v", {{"e0", "28"}, {"e1", "-14"}, {"e2", "2"}, {"d", "14"}}},
           {"cert", {{"type", "slope_stable"}, {"mu", "-1/2"}}}}},
         {"heart", {{"kind", "tilted"}, {"beta", "-1/2"}}}});
    CHECK(needs.at("status") == 0);
    CHECK(needs.at("payload").at("answer") == "needs_shift");
    CHECK(needs.at("payload").at("shift") == 1);
}

TEST_CASE("walls request") {
    const json res = eval(
        {{"cmd", "walls"},
         {"v", {{"e0", "1"}, {"e1", "0"}, {"e2", "-1"}}},
         {"region",
          {{"beta_lo", "-2"}, {"beta_hi", "-1"}, {"t_lo", "1/100"}, {"t_hi", "1"}}},
         {"config", {{"preset", "threefold"}, {"d", "1"}, {"cap", 3}}}});
    REQUIRE(res.at("status") == 0);
    const json& p = res.at("payload");
    CHECK(p.at("count").get<int>() > 0);
    bool found = false;
    for (const auto& h : p.at("hits"))
        if (h.at("wall").at("kind") == "semicircle" &&
            h.at("wall").at("center") == "-3/2" &&
            h.at("wall").at("radius_sq") == "1/4")
            found = true;
    CHECK(found);
}

TEST_CASE("verify requests map failure onto the dedicated status") {
    const json pass = eval({{"cmd", "verify"}, {"target", "cubic4"}, {"t", "1/32"}});
    CHECK(pass.at("status") == 0);
    CHECK(pass.at("payload").at("overall") == true);

    const json fail = eval({{"cmd", "verify"}, {"target", "cubic4"}, {"t", "1/16"}});
    CHECK(fail.at("status") == 1);
    CHECK(fail.at("payload").at("overall") == false);
    CHECK(!fail.at("payload").at("checks").empty());

    const json fano = eval({{"cmd", "verify"},
                            {"target", "fano"},
                            {"index", 2},
                            {"deg", 3},
                            {"t", "1/2"}});
    CHECK(fano.at("status") == 1);

    const json one = eval({{"cmd", "verify"},
                           {"target", "1object"},
                           {"index", 2},
                           {"deg", 3},
                           {"t", "1/8"}});
    CHECK(one.at("status") == 0);
}

TEST_CASE("clifford catalog dump") {
    const json res = eval({{"cmd", "clifford"}, {"j_lo", 0}, {"j_hi", 1}});
    REQUIRE(res.at("status") == 0);
    const json& rows = res.at("payload").at("rows");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].at("class").at("e2") == "25/8");
    CHECK(rows[0].at("mu") == "-5/4");
    CHECK(rows[0].at("delta_B0") == "0");
    CHECK(rows[1].at("class").at("e2") == "9/8");
    CHECK(rows[1].at("mu") == "-3/4");
}

TEST_CASE("mukai requests") {
    const json m = eval({{"cmd", "mukai"},
                         {"lattice", "a2"},
                         {"op", "minus_two"},
                         {"bound", 3}});
    REQUIRE(m.at("status") == 0);
    CHECK(m.at("payload").at("vectors").empty());
    CHECK(m.at("payload").at("complete") == true);

    const json pr = eval({{"cmd", "mukai"},
                          {"lattice", "a2"},
                          {"op", "pairing"},
                          {"x", {1, 2}},
                          {"y", {1, 2}}});
    CHECK(pr.at("payload").at("pairing") == "6");
    CHECK(pr.at("payload").at("euler") == "-6");

    const json e1 = eval({{"cmd", "mukai"},
                          {"lattice", "a2"},
                          {"op", "ext1"},
                          {"v", {1, 0}}});
    CHECK(e1.at("payload").at("ext1") == "4");

    const json custom = eval(
        {{"cmd", "mukai"},
         {"lattice", {{"gram", {{0, 1}, {1, 0}}}}},
         {"op", "minus_two"},
         {"bound", 1}});
    REQUIRE(custom.at("status") == 0);
    CHECK(custom.at("payload").at("vectors").size() == 2);
    CHECK(custom.at("payload").at("complete") == false);
}

TEST_CASE("plot request") {
    const json req = {{"cmd", "plot"},
                      {"region",
                       {{"beta_lo", "-2"},
                        {"beta_hi", "1"},
                        {"t_lo", "0"},
                        {"t_hi", "1"},
                        {"include_t_zero", true}}},
                      {"pairs",
                       {{{{"e0", "1"}, {"e1", "0"}, {"e2", "0"}},
                         {{"e0", "1"}, {"e1", "1"}, {"e2", "1/2"}}}}},
                      {"format", "svg"}};
    const json res = eval(req);
    REQUIRE(res.at("status") == 0);
    const std::string doc = res.at("payload").at("document");
    CHECK(doc.find("<svg") != std::string::npos);
    // byte-identical across evaluations
    CHECK(eval(req).dump() == res.dump());
}

TEST_CASE("usage errors") {
    CHECK(eval({{"cmd", "nope"}}).at("status") == 2);
    CHECK(eval({{"v", 1}}).at("status") == 2);  // missing cmd
    CHECK(eval({{"cmd", "slope"},
                {"v", {{"e0", "1"}, {"e1", "0"}, {"e2", "0"}}},
                {"t", "1.5"},
                {"beta", "0"}})
              .at("status") == 2);  // float syntax rejected
    CHECK(eval({{"cmd", "slope"},
                {"v", {{"e0", "1"}, {"e1", "0"}, {"e2", "0"}}},
                {"t", "0"},
                {"beta", "0"}})
              .at("status") == 2);  // t must be positive
    CHECK(eval({{"cmd", "verify"}, {"target", "fano"}, {"index", 3}, {"t", "1/8"}})
              .at("status") == 2);
    CHECK(eval({{"cmd", "mukai"}, {"lattice", "nope"}, {"op", "minus_two"}, {"bound", 1}})
              .at("status") == 2);
    CHECK(eval({{"cmd", "verify"},
                {"target", "fano"},
                {"index", 1},
                {"genus", 4},
                {"t", "1/100"}})
              .at("status") == 2);  // genus 4 refusal
}

TEST_CASE("enumeration cap guards requests") {
    const json big = eval(
        {{"cmd", "walls"},
         {"v", {{"e0", "1"}, {"e1", "0"}, {"e2", "0"}}},
         {"region",
          {{"beta_lo", "-1"}, {"beta_hi", "0"}, {"t_lo", "1/2"}, {"t_hi", "1"}}},
         {"config", {{"preset", "threefold"}, {"d", "1"}, {"cap", 500}}}});
    CHECK(big.at("status") == 2);
    CHECK(big.at("message").get<std::string>().find("KSTAB_MAX_CANDIDATES") !=
          std::string::npos);
}

TEST_CASE("string round trip and malformed JSON") {
    const std::string out = eval_string(
        R"({"cmd":"slope","v":{"e0":"1","e1":"0","e2":"0"},"t":"1","beta":"-1/2"})");
    const json parsed = json::parse(out);
    CHECK(parsed.at("status") == 0);
    CHECK(parsed.at("payload").at("mu") == "-3/4");  // 1/4 - t

    const json bad = json::parse(eval_string("{not json"));
    CHECK(bad.at("status") == 2);
    CHECK(!bad.at("message").get<std::string>().empty());
}

TEST_CASE("responses are deterministic") {
    const json req = {{"cmd", "verify"}, {"target", "cubic4"}, {"t", "1/32"}};
    CHECK(eval(req).dump() == eval(req).dump());
    const std::string s =
        R"({"cmd":"clifford","j_lo":-2,"j_hi":3})";
    CHECK(eval_string(s) == eval_string(s));
}
