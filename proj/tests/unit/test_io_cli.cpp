#include <doctest.h>

#include "bireg/cli.hpp"
#include "bireg/errors.hpp"
#include "bireg/io.hpp"

using namespace bireg;

namespace {

std::string data(const std::string& name) { return std::string(BIREG_TEST_DATA_DIR) + "/" + name; }

} // namespace

TEST_CASE("parse an ideal document") {
    const auto doc = parse_input("# comment\nring field=32003 m=1 n=1\nideal: x0*y0; x0*y1;\n  x1*y0; x1*y1\n");
    CHECK(doc.kind == "ideal");
    CHECK(doc.ring.m() == 1);
    CHECK(doc.ideal_gens.size() == 4);
    CHECK(doc.module.f0().rank() == 4);
    CHECK(doc.module.relations().source().rank() == 4);
}

TEST_CASE("parse a module document") {
    const auto doc = parse_input("ring field=q m=1 n=1\nmodule: gens=(0,0),(1,0)\n rels: x0*e1 - e2; y0*e2\n");
    CHECK(doc.kind == "module");
    CHECK(!doc.ring.field().is_prime());
    CHECK(doc.module.f0().gens() == std::vector<Bidegree>{{0, 0}, {1, 0}});
    CHECK(doc.module.relations().source().gens() == std::vector<Bidegree>{{1, 0}, {1, 1}});
}

TEST_CASE("polynomial syntax") {
    const Ring R(1, 1);
    CHECK(parse_polynomial(R, "3*x0^2*y1 - x0*x1*y1") == parse_polynomial(R, "- x1*x0*y1 + 3*y1*x0*x0"));
    CHECK(parse_polynomial(R, "x0^2").bidegree() == Bidegree{2, 0});
    CHECK(parse_polynomial(R, "-2*y0*y1").terms().size() == 1);
    CHECK_THROWS_AS(parse_polynomial(R, "x2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(R, "x0 +"), ParseError);
}

TEST_CASE("parse errors report line and column") {
    try {
        parse_input("ring field=32003 m=1 n=1\nideal: x0*y0; x0*+y1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 18);
    }
    try {
        parse_input("ring field=32003 m=1 n=1\n\n  bogus\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        // A line without a keyword continues the ring statement; "bogus" is read as a key.
        CHECK(e.line() == 3);
        CHECK(e.column() == 8);
    }
    CHECK_THROWS_AS(parse_input("ideal: x0\n"), ParseError);
    CHECK_THROWS_AS(parse_input("ring field=32003 m=1 n=1\nideal: x0*y0 + x1\n"), NotBihomogeneous);
    CHECK_THROWS_AS(parse_input("ring field=32003 m=1 n=1\nideal: x0 - x0\n"), ZeroPolynomial);
    CHECK_THROWS_AS(parse_input("ring field=32003 m=1 n=1\nmodule: gens=(0,0),(0,0)\n rels: x0*e1 + y0*e2\n"),
                    DegreeMismatch);
    CHECK_THROWS_AS(parse_input("ring field=32002 m=1 n=1\nideal: x0\n"), InvalidField);
}

TEST_CASE("Betti JSON round trip") {
    const auto doc = parse_input("ring field=32003 m=1 n=1\nideal: x0*y0; x0*y1; x1*y0; x1*y1\n");
    const BigradedModule M(doc.module);
    const auto j = betti_json(M.betti());
    CHECK(betti_from_json(j) == M.betti());
    CHECK(j["0"] == nlohmann::json::array({{1, 1, 4}}));
    CHECK(ring_json(doc.ring)["field"] == 32003);
    const auto f = frontier_json(strong_regularity_frontier(M));
    CHECK(f.dump().find("[1,1]") != std::string::npos);
}

TEST_CASE("cli subcommands and exit codes") {
    const auto betti = run_cli({"betti", data("irrelevant.txt")});
    CHECK(betti.code == kExitOk);
    CHECK(betti.out.find("(2,2)") != std::string::npos);

    const auto json = run_cli({"--json", "frontier", data("quotient_m.txt")});
    CHECK(json.code == kExitOk);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["ring"]["m"] == 1);
    CHECK(j["frontier"].dump().find("[0,1]") != std::string::npos);

    CHECK(run_cli({"reg-strong", data("irrelevant.txt"), "--p", "1", "--pp", "1"}).code == kExitOk);
    CHECK(run_cli({"reg-strong", data("irrelevant.txt"), "--p", "0", "--pp", "1"}).code == kExitNegative);
    CHECK(run_cli({"reg-weak", data("quotient_m.txt"), "--p", "0", "--pp", "1"}).code == kExitNegative);
    CHECK(run_cli({"reg-weak", data("quotient_m.txt"), "--p", "0", "--pp", "1", "--variant", "definition"}).code ==
          kExitOk);
    CHECK(run_cli({"mult", data("free_sum.txt"), "--from", "0,0", "--step", "2,0"}).code == kExitNegative);
    CHECK(run_cli({"mult", data("free_sum.txt"), "--from", "2,0", "--step", "1,1"}).code == kExitOk);

    const auto lc = run_cli({"lc", data("irrelevant.txt"), "--ideal", "irr", "--i", "3", "--window", "-4:-2,-4:-2"});
    CHECK(lc.code == kExitOk);
    const auto uncertified =
        run_cli({"--nu-max", "1", "lc", data("irrelevant.txt"), "--i", "3", "--window", "-6:-5,-6:-5"});
    CHECK(uncertified.code == kExitUndecided);

    CHECK(run_cli({"verify", data("x_power_y_power.txt")}).code == kExitOk);
    CHECK(run_cli({"betti", data("bad_syntax.txt")}).code == kExitInputError);
    CHECK(run_cli({"betti", data("not_bihomogeneous.txt")}).code == kExitInputError);
    CHECK(run_cli({"betti", data("missing.txt")}).code == kExitInputError);
    CHECK(run_cli({"nonsense"}).code == kExitInputError);
    CHECK(run_cli({"region", "--kind", "Foo", "--i", "0", "--p", "0", "--pp", "0"}).code == kExitInputError);
}

TEST_CASE("cli region and sheaf output") {
    const auto r = run_cli({"region", "--kind", "St", "--i", "2", "--p", "0", "--pp", "0", "--window", "-2:0,-2:0"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("...\n#..\n.#.\n") != std::string::npos);
    const auto s = run_cli({"--json", "sheaf", "--m", "1", "--n", "1", "--i", "0", "--window", "0:1,0:1"});
    CHECK(s.code == kExitOk);
    const auto j = nlohmann::json::parse(s.out);
    CHECK(j["sheaf"]["grids"][0]["dims"] == nlohmann::json::array({{1, 2}, {2, 4}}));
}

TEST_CASE("cli output is deterministic") {
    const std::vector<std::string> args{"--json", "betti", data("irrelevant.txt")};
    CHECK(run_cli(args).out == run_cli(args).out);
    const std::vector<std::string> lc{"--json", "lc", data("quotient_m.txt"), "--i", "0"};
    CHECK(run_cli(lc).out == run_cli(lc).out);
}
