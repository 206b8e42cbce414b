#include <doctest.h>

#include "bireg/io.hpp"
#include "bireg/verify.hpp"
#include "support/corpus.hpp"

using namespace bireg;
using namespace bireg::testing;

TEST_CASE("strong regularity from the resolution") {
    const Ring R(1, 1);
    const BigradedModule m(ideal(R, irrelevant_gens(1, 1)));
    CHECK(strong_regularity_check(m, 1, 1).value);
    CHECK(strong_regularity_check(m, 2, 3).value);
    const auto v = strong_regularity_check(m, 0, 1);
    CHECK(!v.value);
    REQUIRE(!v.witnesses.empty());
    CHECK(v.witnesses[0].i == 0);
    CHECK(v.witnesses[0].at == Bidegree{1, 1});
    CHECK(v.method == RegularityMethod::ResolutionCriterion);
}

TEST_CASE("frontiers") {
    const Ring R(1, 1);
    CHECK(strong_regularity_frontier(BigradedModule(free_module(R, {{0, 0}}))).minimal_points ==
          std::vector<Bidegree>{{0, 0}});
    CHECK(strong_regularity_frontier(BigradedModule(quotient(R, irrelevant_gens(1, 1)))).minimal_points ==
          std::vector<Bidegree>{{0, 1}, {1, 0}});
    CHECK(strong_regularity_frontier(BigradedModule(free_module(R, {{0, 0}, {2, 0}}))).minimal_points ==
          std::vector<Bidegree>{{2, 0}});
    const Frontier f = strong_regularity_frontier(BigradedModule(quotient(R, {"x0*y0", "x1*y1"})));
    CHECK(f.minimal_points == std::vector<Bidegree>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(f.contains(3, 1));
    CHECK(!f.contains(0, 1));
}

TEST_CASE("frontier from a Betti table sweeps the antidiagonal") {
    BettiTable b;
    b.add(0, {0, 0});
    b.add(1, {3, 0});
    b.add(1, {0, 3});
    // A = 2, B = 2, S = 2: the single point (2,2).
    CHECK(frontier_from_betti(b).minimal_points == std::vector<Bidegree>{{2, 2}});
    BettiTable c;
    c.add(0, {0, 0});
    c.add(1, {2, 2});
    // A = 1, B = 1, S = 3.
    CHECK(frontier_from_betti(c).minimal_points == std::vector<Bidegree>{{1, 2}, {2, 1}});
    CHECK(frontier_from_betti(BettiTable()).everything);
}

TEST_CASE("frontier moves with twists") {
    const Ring R(1, 1);
    const Presentation base = quotient(R, {"x0*y0", "x1^2*y1"});
    const auto f = strong_regularity_frontier(BigradedModule(base)).minimal_points;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {-2, 1}, {0, -3}}) {
        auto g = strong_regularity_frontier(BigradedModule(twist(base, a, b))).minimal_points;
        REQUIRE(g.size() == f.size());
        for (std::size_t i = 0; i < f.size(); ++i) CHECK(g[i] == f[i] - Bidegree{a, b});
    }
}

TEST_CASE("strong implies weak on small modules") {
    const Ring R(1, 1);
    for (const auto& P : {free_module(R, {{0, 0}}), ideal(R, irrelevant_gens(1, 1)), quotient(R, {"x0*y0"})}) {
        const BigradedModule M(P);
        for (Bidegree q : strong_regularity_frontier(M).minimal_points) {
            const auto v = weak_regularity_check(M, q.a, q.b);
            CHECK(v.value);
            CHECK(v.decided);
            CHECK(v.method == RegularityMethod::LocalCohomologyCheck);
        }
    }
}

TEST_CASE("weak regularity of R/m distinguishes the two hypothesis variants") {
    const Ring R(1, 1);
    const BigradedModule M(quotient(R, irrelevant_gens(1, 1)));
    CHECK(weak_regularity_check(M, 0, 1, HypothesisVariant::DefinitionOnly).value);
    const auto v = weak_regularity_check(M, 0, 1, HypothesisVariant::TheoremThreeFiveThree);
    CHECK(!v.value);
    REQUIRE(!v.witnesses.empty());
    CHECK(v.witnesses[0].i == 0);
    CHECK(weak_regularity_check(M, 1, 1).value);
        CHECK(weak_regularity_check(M, 0, 0, HypothesisVariant::DefinitionOnly).value);
    CHECK(!weak_regularity_check(M, -1, -1, HypothesisVariant::DefinitionOnly).value);
}

TEST_CASE("weak regularity of R fails below the origin") {
    const Ring R(1, 1);
    const BigradedModule M(free_module(R, {{0, 0}}));
    CHECK(weak_regularity_check(M, 0, 0).value);
    const auto v = weak_regularity_check(M, -1, 0);
    CHECK(!v.value);
    REQUIRE(!v.witnesses.empty());
    // H^3_m(R)_{-2,-2} = H^2(O(-2,-2)) on the staircase St_2(-1,0).
    CHECK(v.witnesses[0].i == 3);
    CHECK(v.witnesses[0].at == Bidegree{-2, -2});
}

TEST_CASE("vanishing conditions on a window") {
    const Ring R(1, 1);
    const BigradedModule M(free_module(R, {{0, 0}}));
    const auto ok = vc_window_verify(M, 0, 0, 0, {-4, 4, -4, 4});
    CHECK(ok.ok);
    CHECK(ok.decided);
    CHECK(ok.cells_checked > 0);
    const auto bad = vc_window_verify(M, 0, -1, 0, {-4, 4, -4, 4});
    CHECK(!bad.ok);
    CHECK(!bad.violations.empty());
}

TEST_CASE("multiplication surjectivity") {
    const Ring R(1, 1);
    const BigradedModule free(free_module(R, {{0, 0}}));
    CHECK(multiplication_surjectivity(free, {0, 0}, {1, 0}));
    CHECK(multiplication_surjectivity(free, {2, 1}, {1, 2}));
    // R (+) R(-2,0): the generator in degree (2,0) is not reached from (0,0).
    const BigradedModule split(free_module(R, {{0, 0}, {2, 0}}));
    CHECK(!multiplication_surjectivity(split, {0, 0}, {2, 0}));
    CHECK(multiplication_surjectivity(split, {2, 0}, {1, 1}));
    const BigradedModule m(ideal(R, irrelevant_gens(1, 1)));
    CHECK(!multiplication_surjectivity(m, {0, 0}, {1, 1}));
    CHECK(multiplication_surjectivity(m, {1, 1}, {1, 0}));
}

TEST_CASE("classical regularity reduction") {
    const Ring R(0, 1);
    const auto one = classical_reduction_check(BigradedModule(ideal(R, {"y0", "y1"})));
    CHECK(one.block == 'y');
    CHECK(one.classical == 1);
    CHECK(one.agree);
    const auto two = classical_reduction_check(BigradedModule(ideal(R, {"y0^2", "y0*y1", "y1^2"})));
    CHECK(two.classical == 2);
    CHECK(two.frontier_coordinate == 2);
    CHECK(two.agree);
    const Ring Rx(1, -1);
    const auto x = classical_reduction_check(BigradedModule(quotient(Rx, {"x0^3"})));
    CHECK(x.block == 'x');
    CHECK(x.classical == 2);
    CHECK(x.agree);
    BettiTable b;
    b.add(0, {0, 0});
    b.add(1, {4, 0});
    CHECK(classical_regularity(b) == 3);
    CHECK_THROWS(classical_reduction_check(BigradedModule(free_module(Ring(1, 1), {{0, 0}}))));
}

TEST_CASE("x0^t (y0,y1)^s has frontier (t,s)") {
    const Ring R(0, 1);
    for (int t = 1; t <= 2; ++t)
        for (int s = 1; s <= 2; ++s)
            CHECK(strong_regularity_frontier(BigradedModule(ideal_presentation(R, x_power_times_y_power(R, t, s))))
                      .minimal_points == std::vector<Bidegree>{{t, s}});
}

TEST_CASE("ideal generated in degree (1,1) has the expected graded dimensions") {
    // m on P1 x P1 in degree (k,k') with k,k' >= 1 is all of R.
    const Ring R(1, 1);
    const BigradedModule m(ideal(R, irrelevant_gens(1, 1)));
    for (int k = 0; k <= 3; ++k)
        for (int kp = 0; kp <= 3; ++kp)
            CHECK(m.quotient().dim({k, kp}) == (k >= 1 && kp >= 1 ? R.dim({k, kp}) : 0));
}

TEST_CASE("cross validation passes on corpus samples") {
    for (const auto& e : corpus()) {
        if (e.name != "m on P1xP1" && e.name != "R/(x0y0)" && e.name != "x0^1(y0,y1)^2") continue;
        const BigradedModule M(e.module);
        for (const auto& c : cross_validate(M, {-2, 3, -2, 3})) {
            INFO(e.name << ": " << c.name << " " << c.detail);
            CHECK(c.status == CheckStatus::Pass);
        }
    }
}
