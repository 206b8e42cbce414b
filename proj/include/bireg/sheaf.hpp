#pragma once

#include <string>
#include <vector>

#include "bireg/regions.hpp"
#include "bireg/ring.hpp"

namespace bireg {

// h^a(P^m, O(k)). P^0 (and the empty block m = -1) contribute h^0 = 1 for every twist.
long long serre_dim(int m, int k, int a);

// h^i(P^m x P^n, O(k,k')).
long long kunneth_dim(int m, int n, int k, int kp, int i);

// (+)_alpha O(a_alpha, b_alpha) on P^m x P^n.
struct LineBundleSum {
    int m = 1;
    int n = 1;
    std::vector<Bidegree> twists;

    static LineBundleSum structure_sheaf(int m, int n) { return {m, n, {{0, 0}}}; }
    long long h(int i, int k, int kp) const;
    long long h0(Bidegree d) const { return h(0, d.a, d.b); }
    int top() const noexcept;
};

struct SheafCellWitness {
    int i;
    Bidegree at;
    long long dim;
};

struct SheafCheckReport {
    bool ok = true;
    std::vector<SheafCellWitness> witnesses;
};

// Vanishing of H^i(F(k,k')) on St_i(p,p') for 1 <= i <= m+n.
SheafCheckReport sheaf_regularity_report(const LineBundleSum& F, int p, int pp);
bool sheaf_regularity_check(const LineBundleSum& F, int p, int pp);

// Vanishing of H^i(F(k,k')) on Reg_i(p,p') inside the window, 1 <= i <= m+n.
SheafCheckReport sheaf_regularity_upset_check(const LineBundleSum& F, int p, int pp, const Window& w);

// Rank of H^0(F(k-1,k')) (x) H^0(O(1,0)) -> H^0(F(k,k')) (or the y-version when y_step) on monomial
// bases, compared with the target dimension.
bool h0_multiplication_surjective(const LineBundleSum& F, Bidegree target, bool y_step = false);

// Grid of h^i(F(k,k')) over the window; rows k' descending.
std::string render_sheaf_grid(const LineBundleSum& F, int i, const Window& w);

} // namespace bireg
