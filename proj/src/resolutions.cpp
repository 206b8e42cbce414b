#include "bireg/resolutions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "bireg/errors.hpp"

namespace bireg {

namespace {

std::vector<Vector> nonzero(const std::vector<Vector>& v) {
    std::vector<Vector> out;
    for (const auto& x : v)
        if (!x.is_zero()) out.push_back(x);
    return out;
}

// Remove component a and shift the later components down.
Vector drop_component(const Vector& v, int a) {
    std::vector<Term> terms;
    terms.reserve(v.size());
    for (const auto& t : v.terms()) {
        if (static_cast<int>(t.comp) == a) continue;
        Term s = t;
        if (static_cast<int>(s.comp) > a) --s.comp;
        terms.push_back(std::move(s));
    }
    return Vector::from_terms(std::move(terms));
}

const Scalar* constant_at(const Vector& v, int a) {
    for (const auto& t : v.terms())
        if (static_cast<int>(t.comp) == a && t.mono.is_one()) return &t.coef;
    return nullptr;
}

Vector unit(const Ring& ring, const FreeModule& F, int a) {
    return Vector::from_terms({Term{ring.one(), static_cast<std::uint32_t>(a), F.gen(a).total(), ring.field().one()}});
}

template <class T>
void erase_at(std::vector<T>& v, int i) {
    v.erase(v.begin() + i);
}

} // namespace

// ---------------------------------------------------------------- BettiTable

void BettiTable::add(int d, Bidegree e, int mult) {
    if (mult == 0) return;
    Row& row = rows_[d];
    auto it = std::lower_bound(row.begin(), row.end(), e, [](const auto& p, Bidegree x) { return p.first < x; });
    if (it != row.end() && it->first == e) it->second += mult;
    else row.insert(it, {e, mult});
}

BettiTable BettiTable::from_terms(const std::vector<FreeModule>& terms) {
    BettiTable t;
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (const auto& g : terms[i].gens()) t.add(static_cast<int>(i), g);
    return t;
}

int BettiTable::length() const { return rows_.empty() ? -1 : rows_.rbegin()->first; }

int BettiTable::rank(int d) const {
    auto it = rows_.find(d);
    if (it == rows_.end()) return 0;
    int r = 0;
    for (const auto& [e, k] : it->second) r += k;
    return r;
}

std::string BettiTable::to_string() const {
    std::ostringstream os;
    for (const auto& [d, row] : rows_) {
        os << d << ':';
        for (const auto& [e, k] : row) {
            os << ' ' << e;
            if (k != 1) os << '^' << k;
        }
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------- complexes

bool FreeComplex::d_squared_zero() const {
    for (std::size_t i = 0; i + 1 < differentials.size(); ++i)
        if (!differentials[i].compose(differentials[i + 1]).is_zero()) return false;
    return true;
}

Matrix graded_matrix(const Ring& ring, const ModuleMap& phi, Bidegree d) {
    const FreeModule& S = phi.source();
    const FreeModule& T = phi.target();
    std::unordered_map<ModKey, int, ModKeyHash> row;
    int nrows = 0;
    for (int i = 0; i < T.rank(); ++i) {
        const Bidegree e = d - T.gen(i);
        if (!e.nonnegative()) continue;
        for (const auto& mono : ring.monomials(e)) row.emplace(ModKey{mono, i}, nrows++);
    }
    const long long ncols = S.dim(ring, d);
    Matrix A(ring.field(), nrows, static_cast<int>(ncols));
    int col = 0;
    for (int j = 0; j < S.rank(); ++j) {
        const Bidegree e = d - S.gen(j);
        if (!e.nonnegative()) continue;
        for (const auto& mono : ring.monomials(e)) {
            for (const auto& t : phi.column(j).terms()) {
                auto it = row.find(ModKey{t.mono * mono, static_cast<int>(t.comp)});
                if (it == row.end()) throw DegreeMismatch("map is not degree compatible");
                A.add_to(it->second, col, t.coef);
            }
            ++col;
        }
    }
    return A;
}

long long homology_dim(const Ring& ring, const FreeComplex& C, int i, Bidegree d) {
    long long h = C.terms[static_cast<std::size_t>(i)].dim(ring, d);
    if (h == 0) return 0;
    if (i >= 1) h -= graded_matrix(ring, C.differentials[static_cast<std::size_t>(i - 1)], d).rank();
    if (i < C.length()) h -= graded_matrix(ring, C.differentials[static_cast<std::size_t>(i)], d).rank();
    return h;
}

ExactnessReport check_exact(const Ring& ring, const FreeComplex& C, const Window& w, int from) {
    ExactnessReport rep;
    for (int i = from; i <= C.length(); ++i)
        for (int k = w.k0; k <= w.k1; ++k)
            for (int kp = w.l0; kp <= w.l1; ++kp)
                if (homology_dim(ring, C, i, {k, kp}) != 0) {
                    rep.exact = false;
                    rep.position = i;
                    rep.where = {k, kp};
                    return rep;
                }
    return rep;
}

// ---------------------------------------------------------------- presentations

Presentation prune(const Presentation& M, ModuleMap* gens_map) {
    const Ring& ring = M.ring();
    std::vector<Bidegree> gens = M.f0().gens();
    std::vector<int> orig(gens.size());
    std::iota(orig.begin(), orig.end(), 0);
    std::vector<Vector> cols = nonzero(M.relations().columns());
    for (;;) {
        int bj = -1, ba = -1;
        for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
            for (const auto& t : cols[static_cast<std::size_t>(j)].terms()) {
                if (!t.mono.is_one()) continue;
                const int a = static_cast<int>(t.comp);
                if (ba < 0 || std::tie(gens[static_cast<std::size_t>(a)], a, j) <
                                  std::tie(gens[static_cast<std::size_t>(ba)], ba, bj)) {
                    ba = a;
                    bj = j;
                }
            }
        }
        if (bj < 0) break;
        const Vector pivot = cols[static_cast<std::size_t>(bj)];
        const Scalar uinv = constant_at(pivot, ba)->inverse();
        erase_at(cols, bj);
        for (auto& c : cols) {
            const Polynomial e = c.component(ba);
            if (!e.is_zero()) c -= pivot.times(e.scaled(uinv));
            c = drop_component(c, ba);
        }
        erase_at(gens, ba);
        erase_at(orig, ba);
        cols = nonzero(cols);
    }
    FreeModule F(gens);
    std::vector<Vector> rels;
    std::vector<Bidegree> rdeg;
    for (int idx : minimal_generating_subset(F, cols)) {
        rels.push_back(cols[static_cast<std::size_t>(idx)]);
        rdeg.push_back(rels.back().bidegree(F));
    }
    if (gens_map) {
        std::vector<Vector> g;
        for (int a : orig) g.push_back(unit(ring, M.f0(), a));
        *gens_map = ModuleMap(F, M.f0(), std::move(g));
    }
    return Presentation(ring, F, ModuleMap(FreeModule(std::move(rdeg)), F, std::move(rels)));
}

std::vector<std::pair<Vector, Bidegree>> minimal_generators(const Presentation& M) {
    ModuleMap g;
    Presentation P = prune(M, &g);
    std::vector<std::pair<Vector, Bidegree>> out;
    for (int a = 0; a < P.f0().rank(); ++a) out.emplace_back(g.column(a), P.f0().gen(a));
    return out;
}

Resolution minimal_free_resolution(const Presentation& M, int max_length) {
    const Ring& ring = M.ring();
    if (max_length < 0) max_length = ring.nvars();
    Resolution res;
    Presentation P = prune(M, &res.augmentation);
    res.minimal = true;
    res.terms.push_back(P.f0());
    ModuleMap cur = P.relations();
    while (cur.source().rank() > 0) {
        if (static_cast<int>(res.differentials.size()) >= max_length)
            throw ResolutionTooLong("resolution exceeds length " + std::to_string(max_length));
        res.terms.push_back(cur.source());
        res.differentials.push_back(cur);
        const std::vector<Vector> K = kernel(ring, cur);
        std::vector<Vector> sel;
        std::vector<Bidegree> deg;
        for (int idx : minimal_generating_subset(cur.source(), K)) {
            sel.push_back(K[static_cast<std::size_t>(idx)]);
            deg.push_back(sel.back().bidegree(cur.source()));
        }
        cur = ModuleMap(FreeModule(std::move(deg)), cur.source(), std::move(sel));
    }
    return res;
}

namespace {

struct Work {
    std::vector<std::vector<Bidegree>> gens;
    std::vector<std::vector<Vector>> cols; // cols[i]: images of gens[i+1] in gens[i]
    std::vector<std::vector<std::uint32_t>> support;
    std::vector<Vector>* aug = nullptr;
};

bool cancel_one(Work& w) {
    int bi = -1, ba = -1, bb = -1;
    for (int i = 0; i < static_cast<int>(w.cols.size()); ++i) {
        const auto& ci = w.cols[static_cast<std::size_t>(i)];
        for (int b = 0; b < static_cast<int>(ci.size()); ++b) {
            for (const auto& t : ci[static_cast<std::size_t>(b)].terms()) {
                if (!t.mono.is_one()) continue;
                const int a = static_cast<int>(t.comp);
                const Bidegree e = w.gens[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(b)];
                if (bi < 0 ||
                    std::tie(e, i, b, a) < std::tie(w.gens[static_cast<std::size_t>(bi) + 1][static_cast<std::size_t>(bb)], bi, bb, ba)) {
                    bi = i;
                    ba = a;
                    bb = b;
                }
            }
        }
    }
    if (bi < 0) return false;
    const auto i = static_cast<std::size_t>(bi);
    auto& D = w.cols[i];
    const Vector pivot = D[static_cast<std::size_t>(bb)];
    const Scalar uinv = constant_at(pivot, ba)->inverse();
    erase_at(D, bb);
    for (auto& c : D) {
        const Polynomial e = c.component(ba);
        if (!e.is_zero()) c -= pivot.times(e.scaled(uinv));
        c = drop_component(c, ba);
    }
    if (i + 1 < w.cols.size())
        for (auto& c : w.cols[i + 1]) c = drop_component(c, bb);
    if (i >= 1) erase_at(w.cols[i - 1], ba);
    else if (w.aug) erase_at(*w.aug, ba);
    erase_at(w.gens[i + 1], bb);
    erase_at(w.gens[i], ba);
    if (!w.support.empty()) {
        if (!w.support[i + 1].empty()) erase_at(w.support[i + 1], bb);
        if (!w.support[i].empty()) erase_at(w.support[i], ba);
    }
    return true;
}

FreeComplex assemble(const Work& w) {
    FreeComplex C;
    std::size_t top = w.gens.size();
    while (top > 1 && w.gens[top - 1].empty()) --top;
    for (std::size_t i = 0; i < top; ++i) C.terms.emplace_back(w.gens[i]);
    for (std::size_t i = 0; i + 1 < top; ++i) C.differentials.emplace_back(C.terms[i + 1], C.terms[i], w.cols[i]);
    if (!w.support.empty()) C.support.assign(w.support.begin(), w.support.begin() + static_cast<long>(top));
    return C;
}

Work load(const FreeComplex& C) {
    Work w;
    for (const auto& t : C.terms) w.gens.push_back(t.gens());
    for (const auto& d : C.differentials) w.cols.push_back(d.columns());
    w.support = C.support;
    return w;
}

} // namespace

FreeComplex minimize(const FreeComplex& C) {
    Work w = load(C);
    while (cancel_one(w)) {
    }
    return assemble(w);
}

Resolution minimize(const Resolution& C) {
    Work w = load(C);
    std::vector<Vector> aug = C.augmentation.columns();
    w.aug = &aug;
    while (cancel_one(w)) {
    }
    Resolution r;
    static_cast<FreeComplex&>(r) = assemble(w);
    r.augmentation = ModuleMap(r.terms[0], C.augmentation.target(), std::move(aug));
    r.minimal = true;
    return r;
}

// ---------------------------------------------------------------- Koszul-type complexes

Monomial support_monomial(const Ring& ring, std::uint32_t mask) {
    Monomial u = ring.one();
    for (int v = 0; v < ring.nvars(); ++v)
        if (mask >> v & 1U) u.set(v, 1);
    return u;
}

namespace {

// Subsets of vars of size p as variable bitmasks, in lexicographic order of their index lists.
std::vector<std::uint32_t> subsets(const std::vector<int>& vars, int p) {
    std::vector<std::uint32_t> out;
    const int t = static_cast<int>(vars.size());
    std::vector<int> idx(static_cast<std::size_t>(p));
    std::iota(idx.begin(), idx.end(), 0);
    if (p > t) return out;
    for (;;) {
        std::uint32_t m = 0;
        for (int i : idx) m |= 1U << vars[static_cast<std::size_t>(i)];
        out.push_back(m);
        int k = p - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == t - p + k) --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (int l = k + 1; l < p; ++l) idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l) - 1] + 1;
    }
    return out;
}

Bidegree mask_degree(const Ring& ring, std::uint32_t mask, int nu) {
    int a = 0, b = 0;
    for (int v = 0; v < ring.nvars(); ++v)
        if (mask >> v & 1U) (v < ring.nx() ? a : b) += nu;
    return {a, b};
}

Monomial power(const Ring& ring, int v, int nu) {
    Monomial u = ring.one();
    u.set(v, nu);
    return u;
}

// Koszul boundary of e_S: sum over k in S of (-1)^pos z_k^nu e_{S-k}.
template <class Emit>
void koszul_boundary(const Ring& ring, std::uint32_t S, int nu, Emit&& emit) {
    int pos = 0;
    for (int v = 0; v < ring.nvars(); ++v) {
        if (!(S >> v & 1U)) continue;
        const Scalar sign = ring.field().from_int(pos % 2 == 0 ? 1 : -1);
        emit(S & ~(1U << v), power(ring, v, nu), sign);
        ++pos;
    }
}

} // namespace

FreeComplex koszul_complex(const Ring& ring, const std::vector<int>& vars, int nu, bool truncated) {
    if (nu < 1) throw InvalidIndex("nu must be at least 1");
    std::vector<int> vs = vars;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs)
        if (v < 0 || v >= ring.nvars()) throw InvalidIndex("variable index out of range");
    const int t = static_cast<int>(vs.size());
    const int p0 = truncated ? 1 : 0;
    FreeComplex C;
    std::vector<std::unordered_map<std::uint32_t, int>> pos;
    for (int p = p0; p <= t; ++p) {
        std::vector<Bidegree> g;
        std::unordered_map<std::uint32_t, int> where;
        auto subs = subsets(vs, p);
        for (std::uint32_t S : subs) {
            where.emplace(S, static_cast<int>(g.size()));
            g.push_back(mask_degree(ring, S, nu));
        }
        C.terms.emplace_back(std::move(g));
        C.support.push_back(std::move(subs));
        pos.push_back(std::move(where));
    }
    for (int p = p0 + 1; p <= t; ++p) {
        const auto hi = static_cast<std::size_t>(p - p0);
        std::vector<Vector> cols;
        for (std::uint32_t S : C.support[hi]) {
            std::vector<Term> terms;
            koszul_boundary(ring, S, nu, [&](std::uint32_t T, const Monomial& z, const Scalar& s) {
                const int a = pos[hi - 1].at(T);
                terms.push_back(Term{z, static_cast<std::uint32_t>(a), z.degree() + C.terms[hi - 1].gen(a).total(), s});
            });
            cols.push_back(Vector::from_terms(std::move(terms)));
        }
        C.differentials.emplace_back(C.terms[hi], C.terms[hi - 1], std::move(cols));
    }
    return C;
}

FreeComplex irrelevant_resolution(const Ring& ring, int nu) {
    if (nu < 1) throw InvalidIndex("nu must be at least 1");
    if (ring.m() < 0 || ring.n() < 0) throw InvalidIndex("irrelevant resolution needs both variable blocks");
    std::vector<int> xs(static_cast<std::size_t>(ring.nx())), ys(static_cast<std::size_t>(ring.ny()));
    std::iota(xs.begin(), xs.end(), 0);
    std::iota(ys.begin(), ys.end(), ring.nx());
    const std::uint32_t xmask = (1U << ring.nx()) - 1U;

    FreeComplex C;
    C.terms.emplace_back(std::vector<Bidegree>{Bidegree{0, 0}});
    C.support.push_back({0U});
    std::vector<std::unordered_map<std::uint32_t, int>> pos(1);
    pos[0].emplace(0U, 0);
    const int top = ring.nx() + ring.ny() - 1;
    for (int r = 1; r <= top; ++r) {
        std::vector<Bidegree> g;
        std::vector<std::uint32_t> sup;
        std::unordered_map<std::uint32_t, int> where;
        for (int p = 1; p <= ring.nx(); ++p) {
            const int q = r + 1 - p;
            if (q < 1 || q > ring.ny()) continue;
            for (std::uint32_t S : subsets(xs, p))
                for (std::uint32_t T : subsets(ys, q)) {
                    where.emplace(S | T, static_cast<int>(g.size()));
                    g.push_back(mask_degree(ring, S | T, nu));
                    sup.push_back(S | T);
                }
        }
        C.terms.emplace_back(std::move(g));
        C.support.push_back(std::move(sup));
        pos.push_back(std::move(where));
    }
    for (int r = 1; r <= top; ++r) {
        const auto hi = static_cast<std::size_t>(r);
        const FreeModule& tgt = C.terms[hi - 1];
        std::vector<Vector> cols;
        for (std::uint32_t ST : C.support[hi]) {
            const std::uint32_t S = ST & xmask, T = ST & ~xmask;
            std::vector<Term> terms;
            auto push = [&](std::uint32_t key, const Monomial& z, const Scalar& s) {
                const int a = pos[hi - 1].at(key);
                terms.push_back(Term{z, static_cast<std::uint32_t>(a), z.degree() + tgt.gen(a).total(), s});
            };
            if (r == 1) {
                push(0U, power(ring, std::countr_zero(S), nu) * power(ring, std::countr_zero(T), nu), ring.field().one());
            } else {
                const int p = std::popcount(S);
                if (p >= 2)
                    koszul_boundary(ring, S, nu, [&](std::uint32_t S2, const Monomial& z, const Scalar& s) { push(S2 | T, z, s); });
                if (std::popcount(T) >= 2) {
                    const Scalar eps = ring.field().from_int(p % 2 == 0 ? 1 : -1);
                    int k = 0;
                    for (int v = 0; v < ring.nvars(); ++v) {
                        if (!(T >> v & 1U)) continue;
                        const Scalar s = ring.field().from_int(k % 2 == 0 ? 1 : -1) * eps;
                        push(S | (T & ~(1U << v)), power(ring, v, nu), s);
                        ++k;
                    }
                }
            }
            cols.push_back(Vector::from_terms(std::move(terms)));
        }
        C.differentials.emplace_back(C.terms[hi], tgt, std::move(cols));
    }
    return C;
}

} // namespace bireg
