#include "bireg/sheaf.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "bireg/errors.hpp"
#include "bireg/linalg.hpp"

namespace bireg {

long long serre_dim(int m, int k, int a) {
    if (m <= 0) return a == 0 ? 1 : 0;
    if (a == 0) return k >= 0 ? binomial(m + k, m) : 0;
    if (a == m) return k <= -m - 1 ? binomial(-k - 1, m) : 0;
    return 0;
}

long long kunneth_dim(int m, int n, int k, int kp, int i) {
    long long total = 0;
    for (int a = 0; a <= i; ++a) total += serre_dim(m, k, a) * serre_dim(n, kp, i - a);
    return total;
}

long long LineBundleSum::h(int i, int k, int kp) const {
    long long total = 0;
    for (Bidegree t : twists) total += kunneth_dim(m, n, k + t.a, kp + t.b, i);
    return total;
}

int LineBundleSum::top() const noexcept { return std::max(m, 0) + std::max(n, 0); }

SheafCheckReport sheaf_regularity_report(const LineBundleSum& F, int p, int pp) {
    SheafCheckReport rep;
    for (int i = 1; i <= F.top(); ++i) {
        for (Bidegree d : Region(RegionKind::St, i, p, pp).points()) {
            long long h = F.h(i, d.a, d.b);
            if (h != 0) {
                rep.ok = false;
                rep.witnesses.push_back({i, d, h});
            }
        }
    }
    return rep;
}

bool sheaf_regularity_check(const LineBundleSum& F, int p, int pp) { return sheaf_regularity_report(F, p, pp).ok; }

SheafCheckReport sheaf_regularity_upset_check(const LineBundleSum& F, int p, int pp, const Window& w) {
    SheafCheckReport rep;
    for (int i = 1; i <= F.top(); ++i) {
        for (Bidegree d : Region(RegionKind::Reg, i, p, pp).points(w)) {
            long long h = F.h(i, d.a, d.b);
            if (h != 0) {
                rep.ok = false;
                rep.witnesses.push_back({i, d, h});
            }
        }
    }
    return rep;
}

namespace {

// Rank of K[z_0..z_r]_{a-1} (x) K[z]_1 -> K[z]_a.
long long linear_multiplication_rank(int r, int a) {
    if (a - 1 < 0) return 0;
    Ring S(r, -1);
    const auto& src = S.monomials({a - 1, 0});
    const auto& tgt = S.monomials({a, 0});
    std::unordered_map<Monomial, int, MonomialHash> row;
    for (std::size_t i = 0; i < tgt.size(); ++i) row.emplace(tgt[i], static_cast<int>(i));
    Matrix A(S.field(), static_cast<int>(tgt.size()), static_cast<int>(src.size()) * (r + 1));
    int col = 0;
    for (const Monomial& u : src) {
        for (int v = 0; v <= r; ++v) A.set(row.at(u * S.var(v)), col++, S.field().one());
    }
    return A.rank();
}

} // namespace

bool h0_multiplication_surjective(const LineBundleSum& F, Bidegree target, bool y_step) {
    int r = y_step ? F.n : F.m;
    int other = y_step ? F.m : F.n;
    if (r <= 0) return true; // the step variable is a nowhere-vanishing section
    for (Bidegree t : F.twists) {
        int a = (y_step ? target.b + t.b : target.a + t.a);
        int b = (y_step ? target.a + t.a : target.b + t.b);
        long long rest = serre_dim(other, b, 0);
        long long want = serre_dim(r, a, 0) * rest;
        long long got = linear_multiplication_rank(r, a) * rest;
        if (got != want) return false;
    }
    return true;
}

std::string render_sheaf_grid(const LineBundleSum& F, int i, const Window& w) {
    std::ostringstream os;
    if (w.empty()) return "";
    std::size_t width = 1;
    for (int kp = w.l1; kp >= w.l0; --kp)
        for (int k = w.k0; k <= w.k1; ++k) width = std::max(width, std::to_string(F.h(i, k, kp)).size());
    for (int kp = w.l1; kp >= w.l0; --kp) {
        for (int k = w.k0; k <= w.k1; ++k) {
            std::string s = std::to_string(F.h(i, k, kp));
            if (k > w.k0) os << ' ';
            os << std::string(width - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace bireg
