#include "bireg/regularity.hpp"

#include <algorithm>
#include <climits>
#include <unordered_map>

#include "bireg/errors.hpp"
#include "bireg/linalg.hpp"

namespace bireg {

std::string to_string(RegularityMethod m) {
    return m == RegularityMethod::ResolutionCriterion ? "ResolutionCriterion" : "LocalCohomologyCheck";
}

std::string to_string(HypothesisVariant v) {
    return v == HypothesisVariant::DefinitionOnly ? "DefinitionOnly" : "TheoremThreeFiveThree";
}

bool Frontier::contains(int p, int pp) const {
    if (everything) return true;
    return std::any_of(minimal_points.begin(), minimal_points.end(),
                       [&](Bidegree q) { return q.a <= p && q.b <= pp; });
}

// ---------------------------------------------------------------- strong regularity

RegularityVerdict strong_regularity_check(const BigradedModule& M, int p, int pp) {
    RegularityVerdict v;
    v.method = RegularityMethod::ResolutionCriterion;
    for (const auto& [d, row] : M.betti().rows()) {
        const Region D(RegionKind::DReg, d, p, pp);
        for (const auto& [e, mult] : row)
            if (!D.contains(e.a, e.b)) v.witnesses.push_back({d, e, mult});
    }
    v.value = v.witnesses.empty();
    return v;
}

Frontier frontier_from_betti(const BettiTable& betti) {
    Frontier f;
    int A = INT_MIN, B = INT_MIN, S = INT_MIN;
    for (const auto& [d, row] : betti.rows())
        for (const auto& [e, mult] : row) {
            if (mult == 0) continue;
            A = std::max(A, e.a - d);
            B = std::max(B, e.b - d);
            S = std::max(S, e.a + e.b - d);
        }
    if (A == INT_MIN) {
        f.everything = true;
        return f;
    }
    // Sweep p over [A, max(A, S - B)]; each column's least admissible p' is max(B, S - p).
    int last = INT_MAX;
    for (int p = A; p <= std::max(A, S - B); ++p) {
        const int q = std::max(B, S - p);
        if (q < last) f.minimal_points.push_back({p, q});
        last = q;
    }
    return f;
}

Frontier strong_regularity_frontier(const BigradedModule& M) { return frontier_from_betti(M.betti()); }

// ---------------------------------------------------------------- weak regularity

namespace {

// A bidegree in the up-set where the torsion module is nonzero, found from the standard-pair cones.
std::optional<Bidegree> upset_witness(const GradedQuotient& T, const UpsetBounds& ub) {
    const Ring& ring = T.ring();
    for (const auto& sp : standard_pairs(T.gb(), ring.nx(), ring.nvars())) {
        const Bidegree c = sp.base.bidegree() + T.f0().gen(sp.comp);
        bool hx = false, hy = false;
        for (int v : sp.free_vars) (v < ring.nx() ? hx : hy) = true;
        Bidegree q = c;
        if (hx && hy) {
            q.a = std::max(c.a, ub.a);
            q.b = std::max({c.b, ub.b, ub.s - q.a});
        } else if (hx) {
            q.a = std::max({c.a, ub.a, ub.s - c.b});
        } else if (hy) {
            q.b = std::max({c.b, ub.b, ub.s - c.a});
        }
        if (ub.contains(q.a, q.b)) return q;
    }
    return std::nullopt;
}

} // namespace

RegularityVerdict weak_regularity_check(const BigradedModule& M, int p, int pp, HypothesisVariant variant) {
    RegularityVerdict v;
    v.method = RegularityMethod::LocalCohomologyCheck;
    const Ring& R = M.ring();

    std::vector<Region> h0_regions{Region(RegionKind::Reg, -1, p, pp)};
    if (variant == HypothesisVariant::TheoremThreeFiveThree) {
        h0_regions.emplace_back(RegionKind::RegPrime, -1, p, pp);
        h0_regions.emplace_back(RegionKind::RegDoublePrime, -1, p, pp);
    }
    const GradedQuotient& T = M.torsion_quotient(IdealKind::IRRELEVANT);
    for (const Region& U : h0_regions) {
        if (vanishes_on_upset(T.presentation(), U)) continue;
        const auto q = upset_witness(T, U.upset_bounds());
        if (q) v.witnesses.push_back({0, *q, T.dim(*q)});
        else v.diagnostics.push_back("H^0 nonzero on " + U.name() + " (no explicit point found)");
        break;
    }

    // All levels are checked before anything is concluded: the St-to-Reg passage couples them.
    for (int i = 1; i <= R.nvars(); ++i) {
        for (Bidegree q : Region(RegionKind::St, i - 1, p, pp).points()) {
            const auto c = M.local_cohomology(IdealKind::IRRELEVANT, i, q);
            if (c.dim != 0) v.witnesses.push_back({i, q, c.dim});
            if (!c.certified) {
                v.decided = false;
                v.diagnostics.push_back("H^" + std::to_string(i) + " at (" + std::to_string(q.a) + "," +
                                        std::to_string(q.b) + "): " + c.diagnostics);
            }
        }
    }
    v.value = v.witnesses.empty() && v.diagnostics.empty() && v.decided;
    if (!v.witnesses.empty()) v.decided = true;
    return v;
}

// ---------------------------------------------------------------- VC_d windows

VcReport vc_window_verify(const BigradedModule& M, int d, int p, int pp, const Window& w) {
    VcReport rep;
    if (d < 0) throw InvalidIndex("VC_d needs d >= 0");
    const Ring& R = M.ring();
    auto record = [&](IdealKind kind, int i, Bidegree at, const LocalCohomologyValue& c) {
        ++rep.cells_checked;
        VcCell cell{kind, i, at, c.dim, c.certified};
        if (c.dim != 0) rep.violations.push_back(cell);
        else if (!c.certified) rep.undecided.push_back(cell);
    };
    if (!w.empty()) {
        for (int i = 0; i <= R.nvars(); ++i) {
            for (int k = w.k0; k <= w.k1; ++k)
                for (int kp = w.l0; kp <= w.l1; ++kp) {
                    if (k >= p + d + 1 - i) record(IdealKind::X, i, {k, kp}, M.local_cohomology(IdealKind::X, i, {k, kp}));
                    if (kp >= pp + d + 1 - i)
                        record(IdealKind::Y, i, {k, kp}, M.local_cohomology(IdealKind::Y, i, {k, kp}));
                }
            for (int t = w.k0 + w.l0; t <= w.k1 + w.l1; ++t)
                if (t >= p + pp + d + 1 - i) record(IdealKind::XY_SUM, i, {t, 0}, sharp_lc_dim(M, i, t));
        }
    }
    rep.ok = rep.violations.empty();
    rep.decided = rep.undecided.empty() || !rep.ok;
    return rep;
}

// ---------------------------------------------------------------- multiplication

bool multiplication_surjectivity(const BigradedModule& M, Bidegree from, Bidegree step) {
    if (!step.nonnegative()) throw InvalidIndex("step must be componentwise nonnegative");
    const GradedQuotient& Q = M.quotient();
    const GradedPiece& src = Q.piece(from);
    const GradedPiece& tgt = Q.piece(from + step);
    if (tgt.dim() == 0) return true;
    const auto& mons = M.ring().monomials(step);
    Matrix A(M.ring().field(), static_cast<int>(tgt.dim()), static_cast<int>(src.dim() * static_cast<long long>(mons.size())));
    int col = 0;
    for (const auto& u : mons)
        for (const auto& b : src.basis) {
            const Vector v = Q.normal_form(Q.basis_vector(ModKey{u * b.mono, b.comp}));
            for (const Term& t : v.terms()) A.add_to(tgt.index.at(ModKey{t.mono, static_cast<int>(t.comp)}), col, t.coef);
            ++col;
        }
    return A.rank() == tgt.dim();
}

// ---------------------------------------------------------------- classical reduction

std::optional<int> classical_regularity(const BettiTable& single_graded) {
    std::optional<int> r;
    for (const auto& [i, row] : single_graded.rows())
        for (const auto& [e, mult] : row)
            if (mult > 0) r = std::max(r.value_or(INT_MIN), e.total() - i);
    return r;
}

namespace {

// Substitute var := 1 and keep the remaining block; the result lives over a single-block ring.
Presentation drop_variable(const Presentation& M, char keep) {
    const Ring& R = M.ring();
    const bool keep_y = keep == 'y';
    Ring S = keep_y ? Ring(-1, R.n(), R.field()) : Ring(R.m(), -1, R.field());
    const int first = keep_y ? R.nx() : 0;
    const int count = keep_y ? R.ny() : R.nx();
    auto gen_deg = [&](Bidegree e) { return keep_y ? Bidegree{0, e.b} : Bidegree{e.a, 0}; };
    auto map_poly = [&](const Polynomial& f) {
        std::vector<Polynomial::TermT> terms;
        for (const auto& [mono, c] : f.terms()) {
            std::vector<int> ex(static_cast<std::size_t>(count));
            for (int v = 0; v < count; ++v) ex[static_cast<std::size_t>(v)] = mono[first + v];
            terms.emplace_back(Monomial::from_exponents(keep_y ? 0 : count, ex), c);
        }
        return Polynomial::from_terms(std::move(terms));
    };
    std::vector<Bidegree> g0, g1;
    for (Bidegree e : M.f0().gens()) g0.push_back(gen_deg(e));
    for (Bidegree e : M.relations().source().gens()) g1.push_back(gen_deg(e));
    const FreeModule F0(g0), F1(g1);
    std::vector<Vector> cols;
    for (const Vector& v : M.relations().columns()) {
        std::vector<Polynomial> entries;
        for (int c = 0; c < F0.rank(); ++c) entries.push_back(map_poly(v.component(c)));
        cols.push_back(Vector::from_entries(F0, entries));
    }
    return Presentation(S, F0, ModuleMap(F1, F0, std::move(cols)));
}

} // namespace

ClassicalReductionReport classical_reduction_check(const BigradedModule& M) {
    const Ring& R = M.ring();
    ClassicalReductionReport rep;
    if (R.n() < 0) rep.block = 'x';
    else if (R.m() <= 0) rep.block = 'y';
    else if (R.n() == 0) rep.block = 'x';
    else throw InvalidIndex("classical reduction needs a block with at most one variable");

    const bool trivial_block_present = rep.block == 'y' ? R.m() == 0 : R.n() == 0;
    if (trivial_block_present) {
        const Resolution res = minimal_free_resolution(drop_variable(M.presentation(), rep.block));
        rep.single_graded = res.betti();
        rep.detail = std::string("dropped ") + (rep.block == 'y' ? "x0" : "y0");
    } else {
        rep.single_graded = M.betti();
        rep.detail = "single-block ring";
    }
    rep.classical = classical_regularity(rep.single_graded);
    const Frontier f = strong_regularity_frontier(M);
    for (Bidegree q : f.minimal_points) {
        const int c = rep.block == 'y' ? q.b : q.a;
        rep.frontier_coordinate = std::min(rep.frontier_coordinate.value_or(INT_MAX), c);
    }
    rep.agree = rep.classical == rep.frontier_coordinate;
    return rep;
}

} // namespace bireg
