// One PASS/FAIL line per acceptance criterion. Exit status is 0 when every failing criterion is a
// documented known red (see README), 1 otherwise.

#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bireg/io.hpp"
#include "bireg/regularity.hpp"
#include "bireg/sheaf.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace bireg;
using namespace bireg::testing;

namespace {

struct Result {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<Result()> run;
};

std::string str(Bidegree d) {
    std::ostringstream os;
    os << d;
    return os.str();
}

// Lattice regions straight from their set-theoretic definitions.
std::vector<Bidegree> staircase(int i, int p, int pp) {
    std::vector<Bidegree> out;
    if (i > 0)
        for (int r = -i; r <= -1; ++r) out.push_back({p + r, pp - i - 1 - r});
    else
        for (int r = 0; r <= -i; ++r) out.push_back({p + r, pp - i - r});
    return out;
}

bool in_staircase(int i, int p, int pp, int k, int kp) {
    for (Bidegree q : staircase(i, p, pp))
        if (q.a == k && q.b == kp) return true;
    return false;
}

bool in_reg(int i, int p, int pp, int k, int kp) {
    if (i == -1) return k >= p + 1 && kp >= pp + 1;
    for (Bidegree q : staircase(i, p, pp))
        if (k >= q.a && kp >= q.b) return true;
    return false;
}

bool in_dreg(int i, int p, int pp, int k, int kp) {
    for (Bidegree q : staircase(-i, p, pp))
        if (k <= q.a && kp <= q.b) return true;
    return false;
}

Result criterion1() {
    Result res;
    const Window w{-12, 12, -12, 12};
    std::set<int> item1_fail_levels;
    std::string first_other;
    for (int i = -1; i <= 6; ++i)
        for (int p = -5; p <= 5; ++p)
            for (int pp = -5; pp <= 5; ++pp) {
                const Region reg(RegionKind::Reg, i, p, pp);
                std::optional<Region> dreg, st;
                if (i >= 0) {
                    dreg.emplace(RegionKind::DReg, i, p, pp);
                    st.emplace(RegionKind::St, i, p, pp);
                }
                const Region regp(RegionKind::RegPrime, -1, p, pp), regpp(RegionKind::RegDoublePrime, -1, p, pp);
                auto note = [&](const std::string& what, int k, int kp) {
                    if (first_other.empty())
                        first_other = what + " at (" + std::to_string(k) + "," + std::to_string(kp) + ") i=" +
                                      std::to_string(i) + " p=" + std::to_string(p) + " p'=" + std::to_string(pp);
                };
                for (int k = w.k0; k <= w.k1; ++k)
                    for (int kp = w.l0; kp <= w.l1; ++kp) {
                        if (reg.contains(k, kp) != in_reg(i, p, pp, k, kp)) note("Reg != Z+^2 + St", k, kp);
                        if (i >= 0) {
                            if (dreg->contains(k, kp) != in_dreg(i, p, pp, k, kp)) note("DReg definition", k, kp);
                            if (dreg->contains(k, kp) != in_reg(i + 1, -p + 1, -pp + 1, -k, -kp))
                                note("DReg != -Reg(-p+1,-p'+1)", k, kp);
                            if (st->contains(k, kp) != in_staircase(i, p, pp, k, kp)) note("St definition", k, kp);
                        }
                        // The six implications, each evaluated on the definitional sets.
                        if (i >= 0 && in_staircase(i, p, pp, k, kp)) {
                            if (!(in_staircase(i + 1, p, pp, k - 1, kp) && in_staircase(i + 1, p, pp, k, kp - 1)))
                                item1_fail_levels.insert(i);
                            if (!in_reg(i, p, pp, k, kp)) note("item 2", k, kp);
                        }
                        if (i >= 0 && in_reg(i, p, pp, k, kp) &&
                            !(in_reg(i + 1, p, pp, k - 1, kp) && in_reg(i + 1, p, pp, k, kp - 1)))
                            note("item 3", k, kp);
                        if (i >= 0 && (in_reg(i, p + 1, pp, k, kp) || in_reg(i, p, pp + 1, k, kp)) &&
                            !in_reg(i, p, pp, k, kp))
                            note("item 4", k, kp);
                        if (regp.contains(k, kp) && !in_reg(0, p, pp, k - 1, kp)) note("item 5", k, kp);
                        if (regpp.contains(k, kp) && !in_reg(0, p, pp, k, kp - 1)) note("item 6", k, kp);
                        if (regp.contains(k, kp) != (k >= p + 1 && kp >= pp)) note("Reg' definition", k, kp);
                        if (regpp.contains(k, kp) != (k >= p && kp >= pp + 1)) note("Reg'' definition", k, kp);
                    }
                // The library's own pointwise routine must agree with the definitional checks.
                if (i >= 1 && !region_shift_properties_check(i, p, pp, w).ok) note("region_shift_properties_check", 0, 0);
            }
    if (!first_other.empty()) {
        res.pass = false;
        res.detail = first_other;
    }
    if (!item1_fail_levels.empty()) {
        res.pass = false;
        std::string lv;
        for (int i : item1_fail_levels) lv += (lv.empty() ? "" : ",") + std::to_string(i);
        res.detail += (res.detail.empty() ? "" : "; ") +
                      std::string("item 1 (St_i shifted into St_{i+1}) is false at i in {") + lv +
                      "}: St_0(p,p') = {(p,p')} but St_1(p,p') = {(p-1,p'-1)}; all other identities hold";
    }
    return res;
}

Result criterion2() {
    Result res;
    for (int m = 0; m <= 2; ++m)
        for (int k = -6; k <= 6; ++k) {
            const auto h = cech_cohomology(m, k);
            for (int a = 0; a <= m + 1; ++a) {
                const long long want = h[static_cast<std::size_t>(a)];
                const long long got = serre_dim(m, k, a);
                if (got != want && res.pass) {
                    res.pass = false;
                    res.detail = "serre_dim(" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(a) +
                                 ") = " + std::to_string(got) + ", Cech " + std::to_string(want);
                }
            }
        }
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}})
        for (int i = 1; i <= m + n; ++i)
            for (Bidegree q : staircase(i, 0, 0))
                if (kunneth_dim(m, n, q.a, q.b, i) != 0 && res.pass) {
                    res.pass = false;
                    res.detail = "kunneth nonzero on St_" + std::to_string(i) + " at " + str(q);
                }
    return res;
}

Result criterion3() {
    Result res;
    const Ring R(1, 1);
    const BigradedModule M(free_module(R, {{0, 0}}), 8);
    const Window w{-5, 5, -5, 5};
    long long cells = 0;
    auto fail = [&](const std::string& s) {
        if (res.pass) res.detail = s;
        res.pass = false;
    };
    for (IdealKind kind : {IdealKind::X, IdealKind::Y}) {
        for (int i = 0; i <= 4; ++i)
            for (int k = w.k0; k <= w.k1; ++k)
                for (int kp = w.l0; kp <= w.l1; ++kp) {
                    const auto v = M.local_cohomology(kind, i, {k, kp});
                    ++cells;
                    const std::string at = to_string(kind) + " i=" + std::to_string(i) + " " + str({k, kp});
                    if (!v.certified) fail("uncertified " + at);
                    if (v.dim != free_lc_dim(kind, i, {0, 0}, {k, kp}, 1, 1)) fail("closed form mismatch " + at);
                    const int lead = kind == IdealKind::X ? k : kp;
                    if (lead >= 1 - i && v.dim != 0) fail("nonvanishing " + at);
                }
    }
    // (x,y) family on the total-degree flattening R^#.
    for (int i = 0; i <= 4; ++i)
        for (int t = w.k0 + w.l0; t <= w.k1 + w.l1; ++t) {
            const auto v = sharp_lc_dim(M, i, t);
            ++cells;
            const std::string at = "sum i=" + std::to_string(i) + " t=" + std::to_string(t);
            if (!v.certified) fail("uncertified " + at);
            // Oracle: R^# is the polynomial ring in 4 variables, H^4 in degrees t <= -4.
            const long long want = i == 4 ? serre_dim(3, t, 3) : 0;
            if (v.dim != want) fail("closed form mismatch " + at);
            if (t >= 1 - i && v.dim != 0) fail("nonvanishing " + at);
        }
    if (res.pass) res.detail = std::to_string(cells) + " cells certified";
    return res;
}

Result criterion4() {
    Result res;
    const Ring R(1, 1);
    const Window w{-4, 4, -4, 4};
    for (Bidegree twist : {Bidegree{0, 0}, Bidegree{-1, -2}}) {
        const BigradedModule M(free_module(R, {{-twist.a, -twist.b}}), 8);
        const LineBundleSum F{1, 1, {twist}};
        for (int k = w.k0; k <= w.k1; ++k)
            for (int kp = w.l0; kp <= w.l1; ++kp)
                for (int i = 0; i <= 3; ++i) {
                    const auto v = M.local_cohomology(IdealKind::IRRELEVANT, i, {k, kp});
                    const long long want = i <= 1 ? 0 : F.h(i - 1, k, kp);
                    if ((!v.certified || v.dim != want) && res.pass) {
                        res.pass = false;
                        res.detail = "twist " + str(twist) + " H^" + std::to_string(i) + "_m at " + str({k, kp}) +
                                     " = " + std::to_string(v.dim) + (v.certified ? "" : "?") + ", expected " +
                                     std::to_string(want);
                    }
                }
    }
    return res;
}

std::string frontier_string(const Frontier& f) {
    std::string s = "{";
    for (Bidegree q : f.minimal_points) s += (s.size() > 1 ? "," : "") + str(q);
    return s + "}";
}

Result criterion5() {
    Result res;
    auto expect = [&](const std::string& name, const Presentation& P, std::vector<Bidegree> want) {
        const Frontier f = strong_regularity_frontier(BigradedModule(P));
        if (f.minimal_points != want && res.pass) {
            res.pass = false;
            res.detail = name + " frontier " + frontier_string(f);
        }
    };
    const Ring R(1, 1);
    expect("R", free_module(R, {{0, 0}}), {{0, 0}});
    expect("m", ideal(R, irrelevant_gens(1, 1)), {{1, 1}});
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) expect("R(-a,-b)", free_module(R, {{a, b}}), {{a, b}});
    return res;
}

Result criterion6() {
    Result res;
    const Ring R(0, 1);
    for (int t = 1; t <= 3; ++t)
        for (int s = 1; s <= 3; ++s) {
            const BigradedModule M(ideal_presentation(R, x_power_times_y_power(R, t, s)));
            const Frontier f = strong_regularity_frontier(M);
            const std::string name = "t=" + std::to_string(t) + " s=" + std::to_string(s);
            if (f.minimal_points != std::vector<Bidegree>{{t, s}} && res.pass) {
                res.pass = false;
                res.detail = name + " frontier " + frontier_string(f);
            }
            // Classical regularity of (y0,y1)^s in K[y0,y1], computed by dropping x0.
            const BigradedModule Y(ideal_presentation(R, x_power_times_y_power(R, 0, s)));
            const auto rep = classical_reduction_check(Y);
            if ((!rep.classical || *rep.classical != s || !rep.agree) && res.pass) {
                res.pass = false;
                res.detail = name + " classical reduction: " + rep.detail;
            }
        }
    return res;
}

struct WeakPoint {
    std::string module;
    Bidegree at;
    bool value;
    bool decided;
};

std::vector<CorpusEntry>& shared_corpus() {
    static std::vector<CorpusEntry> c = corpus();
    return c;
}

Result criterion7() {
    Result res;
    std::vector<std::string> failures;
    int points = 0;
    for (const auto& e : shared_corpus()) {
        const BigradedModule M(e.module);
        for (Bidegree q : strong_regularity_frontier(M).minimal_points) {
            ++points;
            const auto v = weak_regularity_check(M, q.a, q.b, HypothesisVariant::TheoremThreeFiveThree);
            if (!v.value || !v.decided) {
                std::string s = e.name + " at " + str(q) + (v.decided ? " false" : " undecided");
                if (!v.witnesses.empty())
                    s += " (H^" + std::to_string(v.witnesses[0].i) + "_m nonzero at " + str(v.witnesses[0].at) + ")";
                const auto d = weak_regularity_check(M, q.a, q.b, HypothesisVariant::DefinitionOnly);
                s += d.value && d.decided ? ", definition-only variant true" : ", definition-only variant false";
                failures.push_back(s);
            }
        }
    }
    res.pass = failures.empty();
    res.detail = std::to_string(points) + " frontier points";
    for (const auto& f : failures) res.detail += "; " + f;
    return res;
}

Result criterion8() {
    Result res;
    long long checks = 0;
    int points = 0;
    for (const auto& e : shared_corpus()) {
        const BigradedModule M(e.module);
        std::set<Bidegree> candidates;
        for (Bidegree q : strong_regularity_frontier(M).minimal_points) {
            candidates.insert(q);
            candidates.insert(q + Bidegree{1, 0});
            candidates.insert(q + Bidegree{0, 1});
        }
        for (Bidegree q : candidates) {
            const auto v = weak_regularity_check(M, q.a, q.b, HypothesisVariant::TheoremThreeFiveThree);
            if (!v.value || !v.decided) continue;
            ++points;
            for (int k = q.a; k <= q.a + 3; ++k)
                for (int kp = q.b; kp <= q.b + 3; ++kp)
                    for (int d = 0; d <= 3; ++d)
                        for (int dp = 0; d + dp <= 3; ++dp) {
                            ++checks;
                            if (!multiplication_surjectivity(M, {k, kp}, {d, dp}) && res.pass) {
                                res.pass = false;
                                res.detail = e.name + " regular at " + str(q) + ": not surjective from " + str({k, kp}) +
                                             " by " + str({d, dp});
                            }
                        }
        }
    }
    if (res.pass) res.detail = std::to_string(points) + " regular points, " + std::to_string(checks) + " rank checks";
    return res;
}

Result criterion9() {
    Result res;
    const Ring R(1, 1);
    const Window w{-5, 5, -5, 5};
    for (int nu = 1; nu <= 2; ++nu) {
        const FreeComplex C = irrelevant_resolution(R, nu);
        if (!C.d_squared_zero()) {
            res.pass = false;
            res.detail = "d^2 != 0 for nu=" + std::to_string(nu);
        }
        const auto ex = check_exact(R, C, w);
        if (!ex.exact && res.pass) {
            res.pass = false;
            res.detail = "homology at position " + std::to_string(ex.position) + " bidegree " + str(ex.where) +
                         " for nu=" + std::to_string(nu);
        }
    }
    BettiTable want;
    for (int i = 0; i < 4; ++i) want.add(0, {1, 1});
    for (int i = 0; i < 2; ++i) {
        want.add(1, {2, 1});
        want.add(1, {1, 2});
    }
    want.add(2, {2, 2});
    // Drop the R term and shift so that the ideal m sits in homological degree 0.
    const BettiTable full = minimize(irrelevant_resolution(R, 1)).betti();
    BettiTable got;
    for (const auto& [d, row] : full.rows())
        if (d >= 1)
            for (const auto& [e, mult] : row) got.add(d - 1, e, mult);
    if (!(got == want) && res.pass) {
        res.pass = false;
        res.detail = "minimized Betti table\n" + got.to_string();
    }
    return res;
}

Result criterion10() {
    Result res;
    std::mt19937 rng(20260);
    int runs = 0;
    for (const auto& e : shared_corpus()) {
        const BettiTable base = BigradedModule(e.module).betti();
        for (int s = 0; s < 5; ++s) {
            ++runs;
            const BettiTable b = BigradedModule(shuffled(e, rng)).betti();
            if (!(b == base) && res.pass) {
                res.pass = false;
                res.detail = e.name + " shuffle " + std::to_string(s) + " changed the Betti table";
            }
        }
    }
    if (res.pass) res.detail = std::to_string(runs) + " shuffled resolutions";
    return res;
}

} // namespace

int main() {
    const std::set<int> known_red{1, 7};
    const std::vector<Criterion> criteria{
        {1, "region identities", 1, criterion1},
        {2, "Serre and Kunneth dimensions", 5, criterion2},
        {3, "vanishing of H_(x), H_(y), H_(x,y) for R", 60, criterion3},
        {4, "local/sheaf cohomology dictionary", 120, criterion4},
        {5, "frontiers of R, m, R(-a,-b)", 10, criterion5},
        {6, "frontier of x0^t (y0,y1)^s", 30, criterion6},
        {7, "strong implies weak at the frontier", 600, criterion7},
        {8, "multiplication surjectivity", 120, criterion8},
        {9, "irrelevant resolution", 30, criterion9},
        {10, "Betti tables invariant under shuffles", 300, criterion10},
    };
    std::vector<int> unexpected;
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_seconds) {
            r.detail += (r.detail.empty() ? "" : "; ") + std::string("over time budget");
            r.pass = false;
        }
        std::cout << "criterion " << c.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << c.title << "  ("
                  << std::fixed << std::setprecision(2) << secs << " s)";
        if (!r.detail.empty()) std::cout << "  " << r.detail;
        std::cout << std::endl;
        if (!r.pass) {
            ++failed;
            if (!known_red.count(c.id)) unexpected.push_back(c.id);
        }
    }
    std::cout << "summary: " << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size()
              << " pass";
    if (failed) {
        std::cout << ", known red {1, 7}";
        if (!unexpected.empty()) {
            std::cout << ", unexpected failures:";
            for (int id : unexpected) std::cout << " " << id;
        }
    }
    std::cout << std::endl;
    return unexpected.empty() ? 0 : 1;
}
