#include "bireg/verify.hpp"

#include <sstream>

namespace bireg {

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Undecided: return "UNDECIDED";
    }
    return "?";
}

namespace {

std::string pt(Bidegree q) { return "(" + std::to_string(q.a) + "," + std::to_string(q.b) + ")"; }

CheckOutcome verdict_outcome(const std::string& name, const RegularityVerdict& v, bool expect) {
    CheckOutcome c{name, CheckStatus::Pass, ""};
    if (!v.decided) {
        c.status = CheckStatus::Undecided;
        if (!v.diagnostics.empty()) c.detail = v.diagnostics.front();
    } else if (v.value != expect) {
        c.status = CheckStatus::Fail;
        if (!v.witnesses.empty()) {
            const auto& w = v.witnesses.front();
            c.detail = "witness i=" + std::to_string(w.i) + " at " + pt(w.at) + " dim " + std::to_string(w.dim);
        }
    }
    return c;
}

} // namespace

CheckOutcome mayer_vietoris_check(const BigradedModule& M, const Window& w) {
    CheckOutcome c{"Mayer-Vietoris rank bound", CheckStatus::Pass, ""};
    const int top = M.ring().nvars();
    for (int i = 0; i <= top; ++i)
        for (int k = w.k0; k <= w.k1; ++k)
            for (int kp = w.l0; kp <= w.l1; ++kp) {
                const Bidegree d{k, kp};
                const auto m = M.local_cohomology(IdealKind::IRRELEVANT, i, d);
                const auto x = M.local_cohomology(IdealKind::X, i, d);
                const auto y = M.local_cohomology(IdealKind::Y, i, d);
                LocalCohomologyValue s;
                s.certified = true;
                if (i + 1 <= top) s = M.local_cohomology(IdealKind::XY_SUM, i + 1, d);
                if (!(m.certified && x.certified && y.certified && s.certified)) {
                    if (c.status == CheckStatus::Pass) {
                        c.status = CheckStatus::Undecided;
                        c.detail = "uncertified cell at i=" + std::to_string(i) + " " + pt(d);
                    }
                    continue;
                }
                if (m.dim > x.dim + y.dim + s.dim) {
                    c.status = CheckStatus::Fail;
                    c.detail = "i=" + std::to_string(i) + " at " + pt(d);
                    return c;
                }
            }
    return c;
}

std::vector<CheckOutcome> cross_validate(const BigradedModule& M, const Window& w) {
    std::vector<CheckOutcome> out;
    const Ring& R = M.ring();
    const Resolution& res = M.resolution();

    out.push_back({"resolution d^2 = 0", res.d_squared_zero() ? CheckStatus::Pass : CheckStatus::Fail, ""});
    {
        const auto ex = check_exact(R, res, w, 1);
        CheckOutcome c{"resolution exact on window", ex.exact ? CheckStatus::Pass : CheckStatus::Fail, ""};
        if (!ex.exact) c.detail = "homology at F_" + std::to_string(ex.position) + " in " + pt(ex.where);
        out.push_back(c);
    }
    out.push_back({"resolution minimal", minimize(static_cast<const FreeComplex&>(res)).betti() == res.betti()
                                             ? CheckStatus::Pass
                                             : CheckStatus::Fail,
                   ""});

    const Frontier f = strong_regularity_frontier(M);
    if (f.everything) {
        out.push_back({"frontier", CheckStatus::Pass, "zero module: regular everywhere"});
    }
    for (Bidegree q : f.minimal_points) {
        const std::string at = " at " + pt(q);
        out.push_back(verdict_outcome("strongly regular" + at, strong_regularity_check(M, q.a, q.b), true));
        out.push_back(verdict_outcome("not strongly regular at " + pt(q - Bidegree{1, 0}),
                                      strong_regularity_check(M, q.a - 1, q.b), false));
        out.push_back(verdict_outcome("not strongly regular at " + pt(q - Bidegree{0, 1}),
                                      strong_regularity_check(M, q.a, q.b - 1), false));
        const auto weak = weak_regularity_check(M, q.a, q.b, HypothesisVariant::TheoremThreeFiveThree);
        out.push_back(verdict_outcome("strong implies weak (H^0 on Reg' and Reg'')" + at, weak, true));
        out.push_back(verdict_outcome("strong implies weak (H^0 on Reg_-1)" + at,
                                      weak_regularity_check(M, q.a, q.b, HypothesisVariant::DefinitionOnly), true));
        {
            const VcReport vc = vc_window_verify(M, 0, q.a, q.b, w);
            CheckOutcome c{"VC_0 on window" + at, CheckStatus::Pass, std::to_string(vc.cells_checked) + " cells"};
            if (!vc.ok) {
                const auto& v = vc.violations.front();
                c.status = CheckStatus::Fail;
                c.detail = to_string(v.kind) + " i=" + std::to_string(v.i) + " at " + pt(v.at);
            } else if (!vc.decided) {
                c.status = CheckStatus::Undecided;
            }
            out.push_back(c);
        }
        if (weak.value) {
            CheckOutcome c{"multiplication surjective from" + at, CheckStatus::Pass, ""};
            for (int a = 0; a <= 1; ++a)
                for (int b = 0; b <= 1; ++b)
                    for (Bidegree step : {Bidegree{1, 0}, Bidegree{0, 1}, Bidegree{1, 1}})
                        if (!multiplication_surjectivity(M, q + Bidegree{a, b}, step)) {
                            c.status = CheckStatus::Fail;
                            c.detail = "from " + pt(q + Bidegree{a, b}) + " step " + pt(step);
                        }
            out.push_back(c);
        }
    }
    out.push_back(mayer_vietoris_check(M, w));
    return out;
}

} // namespace bireg
