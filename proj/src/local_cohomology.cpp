#include "bireg/local_cohomology.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <tuple>

#include "bireg/errors.hpp"
#include "bireg/linalg.hpp"
#include "bireg/sheaf.hpp"

namespace bireg {

std::string to_string(IdealKind k) {
    switch (k) {
    case IdealKind::X: return "x";
    case IdealKind::Y: return "y";
    case IdealKind::XY_SUM: return "sum";
    case IdealKind::IRRELEVANT: return "irr";
    }
    return "?";
}

IdealKind ideal_kind_from_string(const std::string& s) {
    if (s == "x" || s == "X") return IdealKind::X;
    if (s == "y" || s == "Y") return IdealKind::Y;
    if (s == "sum" || s == "xy" || s == "XY_SUM") return IdealKind::XY_SUM;
    if (s == "irr" || s == "m" || s == "IRRELEVANT") return IdealKind::IRRELEVANT;
    throw InvalidIndex("unknown ideal kind '" + s + "'");
}

bool ideal_is_zero(const Ring& ring, IdealKind kind) {
    switch (kind) {
    case IdealKind::X: return ring.m() < 0;
    case IdealKind::Y: return ring.n() < 0;
    case IdealKind::XY_SUM: return false;
    case IdealKind::IRRELEVANT: return ring.m() < 0 || ring.n() < 0;
    }
    return false;
}

namespace {

std::vector<int> kind_vars(const Ring& ring, IdealKind kind) {
    std::vector<int> v;
    if (kind == IdealKind::X || kind == IdealKind::XY_SUM)
        for (int i = 0; i < ring.nx(); ++i) v.push_back(i);
    if (kind == IdealKind::Y || kind == IdealKind::XY_SUM)
        for (int j = 0; j < ring.ny(); ++j) v.push_back(ring.nx() + j);
    return v;
}

} // namespace

std::vector<Polynomial> ideal_generators(const Ring& ring, IdealKind kind) {
    std::vector<Polynomial> g;
    if (ideal_is_zero(ring, kind)) return g;
    if (kind == IdealKind::IRRELEVANT) {
        for (int i = 0; i < ring.nx(); ++i)
            for (int j = 0; j < ring.ny(); ++j) g.push_back(ring.term(ring.x(i) * ring.y(j)));
        return g;
    }
    for (int v : kind_vars(ring, kind)) g.push_back(ring.variable(v));
    return g;
}

FreeComplex cofinal_resolution(const Ring& ring, IdealKind kind, int nu) {
    if (nu < 1) throw InvalidIndex("nu must be at least 1");
    if (ideal_is_zero(ring, kind)) {
        FreeComplex C;
        C.terms.emplace_back(std::vector<Bidegree>{Bidegree{0, 0}});
        C.support.push_back({0U});
        return C;
    }
    if (kind == IdealKind::IRRELEVANT) return irrelevant_resolution(ring, nu);
    return koszul_complex(ring, kind_vars(ring, kind), nu);
}

// ---------------------------------------------------------------- engine

namespace {

using CellKey = std::tuple<int, int, int, int, int>; // kind, nu, level, a, b

CellKey cell_key(IdealKind k, int nu, int r, Bidegree d) { return {static_cast<int>(k), nu, r, d.a, d.b}; }

template <class Map, class Key, class Make>
auto memo(std::mutex& mu, Map& map, const Key& key, Make&& make) -> typename Map::mapped_type {
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = map.find(key);
        if (it != map.end()) return it->second;
    }
    auto value = make();
    std::lock_guard<std::mutex> lock(mu);
    return map.emplace(key, std::move(value)).first->second;
}

struct Cochain {
    std::vector<const GradedPiece*> blocks;
    std::vector<int> offset;
    int dim = 0;
};

} // namespace

struct BigradedModule::Impl {
    Presentation M;
    int nu_max;
    GradedQuotient Q;

    std::once_flag res_once;
    std::optional<Resolution> res;
    BettiTable betti;

    std::mutex mu_torsion, mu_complex, mu_delta, mu_rank, mu_trans, mu_nf;
    std::map<int, std::shared_ptr<const Presentation>> torsion;
    std::map<int, std::shared_ptr<const GradedQuotient>> torsion_q;
    std::map<std::pair<int, int>, std::shared_ptr<const FreeComplex>> complexes;
    std::map<CellKey, std::shared_ptr<const Matrix>> deltas;
    std::map<CellKey, long> ranks;
    std::map<CellKey, std::shared_ptr<const Matrix>> transitions;
    std::unordered_map<ModKey, std::shared_ptr<const Vector>, ModKeyHash> nf;

    Impl(Presentation m, int nmax) : M(std::move(m)), nu_max(nmax), Q(M) {}

    const Resolution& resolution() {
        std::call_once(res_once, [&] {
            res = minimal_free_resolution(M);
            betti = res->betti();
        });
        return *res;
    }

    std::shared_ptr<const FreeComplex> complex(IdealKind kind, int nu) {
        return memo(mu_complex, complexes, std::pair<int, int>{static_cast<int>(kind), nu},
                    [&] { return std::make_shared<const FreeComplex>(cofinal_resolution(M.ring(), kind, nu)); });
    }

    Cochain cochain(const FreeComplex& C, int r, Bidegree d) {
        Cochain c;
        if (r < 0 || r > C.length()) return c;
        for (Bidegree e : C.terms[static_cast<std::size_t>(r)].gens()) {
            const GradedPiece& P = Q.piece(d + e);
            c.blocks.push_back(&P);
            c.offset.push_back(c.dim);
            c.dim += static_cast<int>(P.dim());
        }
        return c;
    }

    std::shared_ptr<const Vector> normal_form(const ModKey& k) {
        return memo(mu_nf, nf, k, [&] { return std::make_shared<const Vector>(Q.normal_form(Q.basis_vector(k))); });
    }

    // u * (basis element) reduced, scattered into column col of A at rows offset + index in tgt.
    void scatter(Matrix& A, int col, const Scalar& c, const Monomial& u, const ModKey& b, const GradedPiece& tgt,
                 int offset) {
        auto v = normal_form(ModKey{u * b.mono, b.comp});
        for (const Term& t : v->terms()) {
            const int row = tgt.index.at(ModKey{t.mono, static_cast<int>(t.comp)});
            A.add_to(offset + row, col, c * t.coef);
        }
    }

    // delta^r : Hom(F_r, M)_d -> Hom(F_{r+1}, M)_d.
    std::shared_ptr<const Matrix> delta(IdealKind kind, int nu, int r, Bidegree d) {
        return memo(mu_delta, deltas, cell_key(kind, nu, r, d), [&] {
            auto C = complex(kind, nu);
            const Cochain src = cochain(*C, r, d), dst = cochain(*C, r + 1, d);
            auto A = std::make_shared<Matrix>(M.ring().field(), dst.dim, src.dim);
            if (src.dim == 0 || dst.dim == 0) return std::shared_ptr<const Matrix>(A);
            const ModuleMap& D = C->differentials[static_cast<std::size_t>(r)];
            for (int beta = 0; beta < D.source().rank(); ++beta) {
                const GradedPiece& tgt = *dst.blocks[static_cast<std::size_t>(beta)];
                for (const Term& t : D.column(beta).terms()) {
                    const auto alpha = static_cast<std::size_t>(t.comp);
                    const GradedPiece& sp = *src.blocks[alpha];
                    for (int j = 0; j < static_cast<int>(sp.basis.size()); ++j)
                        scatter(*A, src.offset[alpha] + j, t.coef, t.mono, sp.basis[static_cast<std::size_t>(j)], tgt,
                                dst.offset[static_cast<std::size_t>(beta)]);
                }
            }
            return std::shared_ptr<const Matrix>(A);
        });
    }

    long rank(IdealKind kind, int nu, int r, Bidegree d) {
        return memo(mu_rank, ranks, cell_key(kind, nu, r, d), [&] { return delta(kind, nu, r, d)->rank(); });
    }

    // Hom(F^nu_r, M)_d -> Hom(F^{nu+1}_r, M)_d induced by the comparison map F^{nu+1} -> F^nu.
    std::shared_ptr<const Matrix> transition(IdealKind kind, int nu, int r, Bidegree d) {
        return memo(mu_trans, transitions, cell_key(kind, nu, r, d), [&] {
            auto C0 = complex(kind, nu);
            auto C1 = complex(kind, nu + 1);
            const Cochain src = cochain(*C0, r, d), dst = cochain(*C1, r, d);
            auto A = std::make_shared<Matrix>(M.ring().field(), dst.dim, src.dim);
            if (src.dim == 0 || dst.dim == 0) return std::shared_ptr<const Matrix>(A);
            const auto& sup = C0->support[static_cast<std::size_t>(r)];
            const Scalar one = M.ring().field().one();
            for (std::size_t a = 0; a < sup.size(); ++a) {
                const Monomial z = support_monomial(M.ring(), sup[a]);
                const GradedPiece& sp = *src.blocks[a];
                for (int j = 0; j < static_cast<int>(sp.basis.size()); ++j)
                    scatter(*A, src.offset[a] + j, one, z, sp.basis[static_cast<std::size_t>(j)], *dst.blocks[a],
                            dst.offset[a]);
            }
            return std::shared_ptr<const Matrix>(A);
        });
    }

    long long cochain_dim(IdealKind kind, int nu, int r, Bidegree d) {
        auto C = complex(kind, nu);
        return cochain(*C, r, d).dim;
    }

    ExtGradedDim ext(IdealKind kind, int i, Bidegree d, int nu) {
        ExtGradedDim e;
        for (int s = 0; s < 3; ++s) e.cochains[s] = cochain_dim(kind, nu, i - 1 + s, d);
        e.dim = e.cochains[1] - rank(kind, nu, i, d) - rank(kind, nu, i - 1, d);
        return e;
    }

    long long transition_image(IdealKind kind, int i, Bidegree d, int nu) {
        auto Dnu = delta(kind, nu, i, d);
        const auto Z = Dnu->nullspace();
        if (Z.empty()) return 0;
        const Matrix Zm = Matrix::from_columns(M.ring().field(), Dnu->cols(), Z);
        const Matrix TZ = *transition(kind, nu, i, d) * Zm;
        auto B = delta(kind, nu + 1, i - 1, d);
        return Matrix::hconcat(TZ, *B).rank() - rank(kind, nu + 1, i - 1, d);
    }
};

BigradedModule::BigradedModule(Presentation M, int nu_max) : impl_(std::make_shared<Impl>(std::move(M), nu_max)) {
    if (nu_max < 1) throw InvalidIndex("nu_max must be at least 1");
}

const Presentation& BigradedModule::presentation() const { return impl_->M; }
const Ring& BigradedModule::ring() const { return impl_->M.ring(); }
const GradedQuotient& BigradedModule::quotient() const { return impl_->Q; }
int BigradedModule::nu_max() const { return impl_->nu_max; }
const Resolution& BigradedModule::resolution() const { return impl_->resolution(); }
const BettiTable& BigradedModule::betti() const {
    impl_->resolution();
    return impl_->betti;
}

const Presentation& BigradedModule::torsion(IdealKind kind) const {
    return *memo(impl_->mu_torsion, impl_->torsion, static_cast<int>(kind), [&] {
        return std::make_shared<const Presentation>(h0_via_saturation(impl_->M, kind));
    });
}

const GradedQuotient& BigradedModule::torsion_quotient(IdealKind kind) const {
    const Presentation& T = torsion(kind);
    return *memo(impl_->mu_torsion, impl_->torsion_q, static_cast<int>(kind),
                 [&] { return std::make_shared<const GradedQuotient>(T); });
}

int BigradedModule::nu_floor(IdealKind kind, Bidegree d) const {
    const Ring& R = ring();
    int f = 1;
    for (const FreeModule& F : resolution().terms) {
        for (Bidegree e : F.gens()) {
            const Bidegree t = d - e;
            const int fx = -t.a - R.m(), fy = -t.b - R.n();
            if (kind != IdealKind::Y && R.m() >= 0) f = std::max(f, fx);
            if (kind != IdealKind::X && R.n() >= 0) f = std::max(f, fy);
        }
    }
    return f;
}

namespace {

void check_degree_index(const Ring& R, int i) {
    if (i < 0 || i > R.nvars())
        throw InvalidIndex("cohomological index " + std::to_string(i) + " outside [0, " + std::to_string(R.nvars()) + "]");
}

} // namespace

ExtGradedDim BigradedModule::ext(IdealKind kind, int i, Bidegree d, int nu) const {
    check_degree_index(ring(), i);
    if (nu < 1) throw InvalidIndex("nu must be at least 1");
    return impl_->ext(kind, i, d, nu);
}

long long BigradedModule::transition_image_dim(IdealKind kind, int i, Bidegree d, int nu) const {
    check_degree_index(ring(), i);
    if (nu < 1) throw InvalidIndex("nu must be at least 1");
    return impl_->transition_image(kind, i, d, nu);
}

LocalCohomologyValue BigradedModule::local_cohomology(IdealKind kind, int i, Bidegree d) const {
    check_degree_index(ring(), i);
    LocalCohomologyValue v;
    if (i == 0) {
        v.dim = torsion_quotient(kind).dim(d);
        v.certified = true;
        return v;
    }
    if (ideal_is_zero(ring(), kind)) {
        v.certified = true;
        return v;
    }
    const int nmax = nu_max();
    auto iso = [&](int nu) {
        const long long a = impl_->ext(kind, i, d, nu).dim, b = impl_->ext(kind, i, d, nu + 1).dim;
        return a == b && impl_->transition_image(kind, i, d, nu) == a;
    };
    const int floor = nu_floor(kind, d);
    if (floor <= nmax) {
        // Above the Betti floor Ext already equals the colimit; transitions inside nu_max are cross-checked.
        bool consistent = true;
        for (int nu = floor; nu + 1 <= nmax && nu <= floor + 1; ++nu) consistent = consistent && iso(nu);
        if (consistent) {
            v.dim = impl_->ext(kind, i, d, floor).dim;
            v.stabilized_at = floor;
            v.certified = true;
            return v;
        }
        v.diagnostics = "transition maps not isomorphisms above the Betti floor " + std::to_string(floor);
    } else {
        v.diagnostics = "Betti floor " + std::to_string(floor) + " exceeds nu_max = " + std::to_string(nmax);
    }
    // Heuristic: first pair of consecutive isomorphisms below nu_max.
    for (int nu = 1; nu + 2 <= nmax; ++nu) {
        if (iso(nu) && iso(nu + 1)) {
            v.dim = impl_->ext(kind, i, d, nu).dim;
            v.stabilized_at = nu;
            v.diagnostics += "; consecutive isomorphisms from nu = " + std::to_string(nu);
            return v;
        }
    }
    v.dim = impl_->ext(kind, i, d, nmax).dim;
    v.stabilized_at = -1;
    v.diagnostics += "; no consecutive isomorphisms up to nu_max";
    return v;
}

ExtGradedDim ext_graded_dim(const Presentation& M, IdealKind kind, int i, Bidegree d, int nu) {
    return BigradedModule(M).ext(kind, i, d, nu);
}

LocalCohomologyValue local_cohomology_dim(const BigradedModule& M, IdealKind kind, int i, Bidegree d) {
    return M.local_cohomology(kind, i, d);
}

LocalCohomologyValue local_cohomology_dim(const Presentation& M, IdealKind kind, int i, Bidegree d, int nu_max) {
    return BigradedModule(M, nu_max).local_cohomology(kind, i, d);
}

long long local_cohomology_dim_strict(const BigradedModule& M, IdealKind kind, int i, Bidegree d) {
    auto v = M.local_cohomology(kind, i, d);
    if (!v.certified) throw NoStabilization(v.diagnostics);
    return v.dim;
}

// ---------------------------------------------------------------- closed forms

long long free_lc_dim(IdealKind kind, int i, Bidegree twist, Bidegree d, int m, int n) {
    if (m < 0 || n < 0) throw InvalidIndex("free_lc_dim needs m, n >= 0");
    const int k = d.a + twist.a, kp = d.b + twist.b;
    auto h0 = [](int r, int c) -> long long { return c >= 0 ? binomial(c + r, r) : 0; };
    auto top = [](int r, int c) -> long long { return c <= -r - 1 ? binomial(-c - 1, r) : 0; };
    switch (kind) {
    case IdealKind::X: return i == m + 1 ? top(m, k) * h0(n, kp) : 0;
    case IdealKind::Y: return i == n + 1 ? h0(m, k) * top(n, kp) : 0;
    case IdealKind::XY_SUM: return i == m + n + 2 ? top(m, k) * top(n, kp) : 0;
    case IdealKind::IRRELEVANT: {
        if (i <= 0) return 0;
        const long long sheaf = kunneth_dim(m, n, k, kp, i - 1);
        if (i == 1) return sheaf - h0(m, k) * h0(n, kp);
        return sheaf;
    }
    }
    return 0;
}

// ---------------------------------------------------------------- tables

bool LcGrid::all_certified() const {
    for (const auto& row : cells)
        for (const auto& c : row)
            if (!c.certified) return false;
    return true;
}

LcGrid lc_table(const BigradedModule& M, IdealKind kind, int i, const Window& w) {
    LcGrid g;
    g.kind = kind;
    g.i = i;
    g.window = w;
    if (w.empty()) return g;
    for (int k = w.k0; k <= w.k1; ++k) {
        std::vector<LocalCohomologyValue> row;
        for (int kp = w.l0; kp <= w.l1; ++kp) row.push_back(M.local_cohomology(kind, i, {k, kp}));
        g.cells.push_back(std::move(row));
    }
    return g;
}

std::string render_lc_grid(const LcGrid& g) {
    if (g.window.empty()) return "";
    std::size_t width = 1;
    auto cell = [&](int k, int kp) {
        const auto& c = g.at(k, kp);
        return std::to_string(c.dim) + (c.certified ? "" : "?");
    };
    for (int k = g.window.k0; k <= g.window.k1; ++k)
        for (int kp = g.window.l0; kp <= g.window.l1; ++kp) width = std::max(width, cell(k, kp).size());
    std::ostringstream os;
    for (int kp = g.window.l1; kp >= g.window.l0; --kp) {
        for (int k = g.window.k0; k <= g.window.k1; ++k) {
            const std::string s = cell(k, kp);
            if (k > g.window.k0) os << ' ';
            os << std::string(width - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

Presentation h0_via_saturation(const Presentation& M, IdealKind kind) {
    return saturate(M, ideal_generators(M.ring(), kind));
}

// ---------------------------------------------------------------- total grading

namespace {

Polynomial flatten_poly(const Polynomial& f, const Ring& S) {
    std::vector<Polynomial::TermT> terms;
    for (const auto& [mono, c] : f.terms()) {
        std::vector<int> e(static_cast<std::size_t>(S.nvars()));
        for (int v = 0; v < S.nvars(); ++v) e[static_cast<std::size_t>(v)] = mono[v];
        terms.emplace_back(Monomial::from_exponents(S.nvars(), e), c);
    }
    return Polynomial::from_terms(std::move(terms));
}

} // namespace

Presentation flatten(const Presentation& M) {
    const Ring& R = M.ring();
    Ring S(R.nvars() - 1, -1, R.field());
    auto flat_module = [](const FreeModule& F) {
        std::vector<Bidegree> g;
        for (Bidegree e : F.gens()) g.push_back({e.total(), 0});
        return FreeModule(std::move(g));
    };
    const FreeModule F0 = flat_module(M.f0()), F1 = flat_module(M.relations().source());
    std::vector<Vector> cols;
    for (const Vector& v : M.relations().columns()) {
        std::vector<Polynomial> entries;
        for (int c = 0; c < F0.rank(); ++c) entries.push_back(flatten_poly(v.component(c), S));
        cols.push_back(Vector::from_entries(F0, entries));
    }
    return Presentation(S, F0, ModuleMap(F1, F0, std::move(cols)));
}

LocalCohomologyValue sharp_lc_dim(const BigradedModule& M, int i, int t) {
    LocalCohomologyValue v;
    v.certified = true;
    const Ring& R = M.ring();
    std::optional<int> ex, ey;
    for (const FreeModule& F : M.resolution().terms)
        for (Bidegree e : F.gens()) {
            ex = std::max(ex.value_or(e.a), e.a);
            ey = std::max(ey.value_or(e.b), e.b);
        }
    if (!ex) return v;
    // H^i_{(x,y)}(M)_{k,k'} vanishes unless k <= ex - m - 1 and k' <= ey - n - 1.
    const int khi = *ex - R.m() - 1;
    const int klo = t - (*ey - R.n() - 1);
    for (int k = klo; k <= khi; ++k) {
        auto c = M.local_cohomology(IdealKind::XY_SUM, i, {k, t - k});
        v.dim += c.dim;
        v.stabilized_at = std::max(v.stabilized_at, c.stabilized_at);
        if (!c.certified) {
            v.certified = false;
            v.diagnostics = c.diagnostics;
        }
    }
    return v;
}

} // namespace bireg
