#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "transversal/runner.hpp"

using namespace transversal;

TEST_CASE("parse a declaration and command script")
{
    SessionScript s = parse_session(
        "ring A = QQ[x,y];\n"
        "ideal I = (x^2, x*y, y^2);\n"
        "run relation_type I;\n");
    CHECK(s.env.rings.count("A") == 1);
    CHECK(s.env.ideals.count("I") == 1);
    REQUIRE(s.commands.size() == 1);
    CHECK(s.commands[0].verb == "relation_type");
    CHECK(s.commands[0].positionals == std::vector<std::string>{"I"});
}

TEST_CASE("quotient ring declaration")
{
    SessionScript s = parse_session("ring B = QQ[z,t] / (z*t);");
    REQUIRE(s.env.rings.count("B") == 1);
    CHECK(s.env.rings.at("B")->is_quotient());
    CHECK(s.env.rings.at("B")->quotient_relations().size() == 1);
}

TEST_CASE("undefined names are parse errors with location")
{
    CHECK_THROWS_AS(parse_session("ring A = QQ[x,y];\n"
                                  "ideal I = (x);\n"
                                  "run transversality I J pmax=3 qmax=3 dmax=8;\n"),
                    ParseError);
    try {
        parse_session("ring A = QQ[x,y];\nrun groebner Z;\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("undefined name 'Z'") != std::string::npos);
    }
}

TEST_CASE("syntax and declaration errors")
{
    CHECK_THROWS_AS(parse_session("ring A = ZZ[x];"), ParseError);
    CHECK_THROWS_AS(parse_session("ring A = QQ[x, x];"), ParseError);
    CHECK_THROWS_AS(parse_session("ring A = QQ[x]; ideal I = (x^);"), ParseError);
    CHECK_THROWS_AS(parse_session("ring A = QQ[x]; run bogus A;"), ParseError);
    CHECK_THROWS_AS(parse_session("ring A = QQ[x]; ring A = QQ[y];"), ParseError);
    CHECK_THROWS_AS(parse_session("ideal I = (x);"), ParseError);  // no ring yet
}

TEST_CASE("module declarations")
{
    SessionScript s = parse_session(
        "ring A = QQ[x,y];\n"
        "module M = submodule(A^2; [x, 0], [0, y]);\n"
        "module C = cokernel(A^1; [x^2]);\n"
        "module F = submodule(A^1; [1]);\n");
    CHECK(s.env.modules.at("M").generators.size() == 2);
    CHECK(s.env.modules.at("C").relations.size() == 1);
    CHECK(s.env.modules.at("F").is_submodule());
    CHECK_THROWS_AS(parse_session("ring A = QQ[x];\nmodule M = submodule(A^2; [x]);"),
                    ParseError);
}

TEST_CASE("print/parse round-trip is the identity on the AST")
{
    std::string text =
        "ring B = QQ[z,t] / (z*t);\n"
        "ideal I = (z);\n"
        "ideal J = (t);\n"
        "module M = submodule(B^1; [1]);\n"
        "run transversality I J pmax=2 qmax=2 dmax=8;\n"
        "run artin_rees I M M nmax=4;\n";
    SessionScript once = parse_session(text);
    std::string printed = print_session(once);
    SessionScript twice = parse_session(printed);
    CHECK(once == twice);
    CHECK(print_session(twice) == printed);
}

TEST_CASE("run_session on the singular curve example")
{
    SessionScript s = parse_session(
        "ring B = QQ[z,t] / (z*t);\n"
        "ideal I = (z);\n"
        "ideal J = (t);\n"
        "run transversality I J pmax=2 qmax=2 dmax=8;\n");
    RunOptions opts;
    std::vector<Report> reports = run_session(s, opts);
    REQUIRE(reports.size() == 1);
    const auto& rep = reports[0];
    CHECK(rep.result["agree"] == true);
    CHECK(rep.result["condition_i"]["status"] == "FAILS");
    CHECK(rep.result["condition_ii"]["status"] == "FAILS");
    CHECK_FALSE(rep.internalDisagreement);
}

TEST_CASE("artin_rees command fixture")
{
    SessionScript s = parse_session(
        "ring A = QQ[x];\n"
        "ideal m = (x);\n"
        "module M = submodule(A^1; [1]);\n"
        "module N = submodule(A^1; [x^2]);\n"
        "run artin_rees m M N nmax=6;\n");
    std::vector<Report> reports = run_session(s, RunOptions{});
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].result["found"] == true);
    CHECK(reports[0].result["s"] == 2);
}

TEST_CASE("empty script produces no reports")
{
    SessionScript s = parse_session("# nothing but a comment\n");
    CHECK(run_session(s, RunOptions{}).empty());
}

TEST_CASE("command errors carry the command index")
{
    SessionScript s = parse_session(
        "ring A = QQ[x,y];\n"
        "ideal I = (x + x^2);\n"
        "ideal J = (y);\n"
        "run sigma_iso I J;\n");
    try {
        run_session(s, RunOptions{});
        FAIL("expected CommandError");
    } catch (const CommandError& e) {
        CHECK(e.index == 0);
        CHECK(std::string(e.what()).find("inhomogeneous") != std::string::npos);
    }
}

TEST_CASE("ring mismatch between operands is reported")
{
    SessionScript s = parse_session(
        "ring A = QQ[x,y];\n"
        "ring B = QQ[z,t];\n"
        "ideal I = (x) in A;\n"
        "ideal J = (z) in B;\n"
        "run intersect I J;\n");
    CHECK_THROWS_AS(run_session(s, RunOptions{}), CommandError);
}

TEST_CASE("reports are deterministic apart from timing")
{
    std::string text =
        "ring A = QQ[x,y];\n"
        "ideal I = (x, y);\n"
        "run relation_type I;\n"
        "run groebner I;\n";
    auto strip = [](std::vector<Report> reports) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& r : reports) {
            nlohmann::json j = report_to_json(r);
            j.erase("wall_ms");
            arr.push_back(j);
        }
        return arr.dump();
    };
    SessionScript s1 = parse_session(text);
    SessionScript s2 = parse_session(text);
    CHECK(strip(run_session(s1, RunOptions{})) == strip(run_session(s2, RunOptions{})));
}

TEST_CASE("selftest scripts all parse and run")
{
    RunOptions opts;
    for (const auto& [name, text] : selftest_scripts()) {
        CAPTURE(name);
        SessionScript script = parse_session(text);
        std::vector<Report> reports = run_session(script, opts);
        CHECK(!reports.empty());
        for (const auto& r : reports)
            CHECK_FALSE(r.internalDisagreement);
    }
}

TEST_CASE("json report schema")
{
    SessionScript s = parse_session(
        "ring A = QQ[x];\n"
        "ideal I = (x);\n"
        "run relation_type I;\n");
    std::vector<Report> reports = run_session(s, RunOptions{});
    nlohmann::json j = report_to_json(reports[0]);
    CHECK(j["schema"] == 1);
    CHECK(j["engine"] == std::string(kEngineVersion));
    CHECK(j.contains("fingerprint"));
    CHECK(j.contains("wall_ms"));
    CHECK(j["result"]["rt"] == 1);
}
