#include "bireg/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "bireg/errors.hpp"

namespace bireg {

namespace {

Term unit_term(const Monomial& one, int comp, const FreeModule& F, const Scalar& c) {
    return Term{one, static_cast<std::uint32_t>(comp), F.gen(comp).total(), c};
}

Vector unit_vector(const Monomial& one, int comp, const FreeModule& F, const Scalar& c) {
    return Vector::from_terms({unit_term(one, comp, F, c)});
}

Monomial one_like(const Monomial& m) { return Monomial(m.nx(), m.nvars()); }

Scalar one_like(const Scalar& s) { return s * s.inverse(); }

std::vector<Vector> nonzero(const std::vector<Vector>& v) {
    std::vector<Vector> out;
    for (const auto& x : v)
        if (!x.is_zero()) out.push_back(x);
    return out;
}

} // namespace

// ---------------------------------------------------------------- GroebnerBasis

int GroebnerBasis::find_divisor(const Monomial& mono, std::uint32_t comp) const {
    if (comp >= by_comp_.size()) return -1;
    for (int k : by_comp_[comp])
        if (elements_[static_cast<std::size_t>(k)].lead().mono.divides(mono)) return k;
    return -1;
}

void GroebnerBasis::rebuild_index() {
    by_comp_.assign(static_cast<std::size_t>(ambient_.rank()), {});
    for (int k = 0; k < size(); ++k) by_comp_[element(k).lead().comp].push_back(k);
}

Vector GroebnerBasis::reduce_impl(Vector f, Vector* quotient, Vector* rep, int skip) const {
    std::vector<Term> rem;
    while (!f.is_zero()) {
        const Term t = f.lead();
        int k = -1;
        if (t.comp < by_comp_.size()) {
            for (int c : by_comp_[t.comp]) {
                if (c != skip && elements_[static_cast<std::size_t>(c)].lead().mono.divides(t.mono)) {
                    k = c;
                    break;
                }
            }
        }
        if (k < 0) {
            rem.push_back(t);
            f.drop_lead();
            continue;
        }
        const Vector& g = elements_[static_cast<std::size_t>(k)];
        const Monomial u = t.mono.quotient(g.lead().mono);
        if (quotient) quotient->sub_mul(-t.coef, u, unit_vector(one_like(u), k, element_module_, one_like(t.coef)));
        if (rep) rep->sub_mul(t.coef, u, reps_[static_cast<std::size_t>(k)]);
        f.sub_mul(t.coef, u, g);
    }
    return Vector::from_terms(std::move(rem));
}

Vector GroebnerBasis::reduce(const Vector& f) const { return reduce_impl(f, nullptr, nullptr, -1); }

Vector GroebnerBasis::reduce(const Vector& f, Vector& quotient) const {
    quotient = Vector();
    return reduce_impl(f, &quotient, nullptr, -1);
}

std::vector<std::vector<Monomial>> GroebnerBasis::lead_monomials() const {
    std::vector<std::vector<Monomial>> out(static_cast<std::size_t>(ambient_.rank()));
    for (const auto& g : elements_) out[g.lead().comp].push_back(g.lead().mono);
    return out;
}

GroebnerBasis buchberger(const FreeModule& F, const std::vector<Vector>& gens, GroebnerOptions opts,
                         const FreeModule* input_module) {
    GroebnerBasis G;
    G.ambient_ = F;
    G.tracked_ = opts.track;
    for (const auto& g : gens)
        if (!g.is_homogeneous(F)) throw NotBihomogeneous("generator is not bihomogeneous");
    if (input_module) {
        G.input_module_ = *input_module;
    } else {
        std::vector<Bidegree> d;
        for (const auto& g : gens) d.push_back(g.is_zero() ? Bidegree{} : g.bidegree(F));
        G.input_module_ = FreeModule(std::move(d));
    }
    G.by_comp_.assign(static_cast<std::size_t>(F.rank()), {});

    // (weight, kind, i, j): kind 0 is an S-pair, kind 1 an input generator. Pairs of a weight go
    // first so that inputs are tested against a basis complete up to their weight.
    using Key = std::tuple<int, int, int, int>;
    std::set<Key> queue;
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
        const auto& g = gens[static_cast<std::size_t>(i)];
        if (!g.is_zero()) queue.insert({g.lead().weight, 1, i, 0});
    }

    auto pair_lcm = [&](int i, int j) {
        return G.elements_[static_cast<std::size_t>(i)].lead().mono.lcm(G.elements_[static_cast<std::size_t>(j)].lead().mono);
    };

    auto add_element = [&](Vector h, Vector rep) {
        const int t = G.size();
        const std::uint32_t hc = h.lead().comp;
        const Monomial hm = h.lead().mono;
        if (opts.chain_criterion) {
            for (auto it = queue.begin(); it != queue.end();) {
                const auto [w, kind, i, j] = *it;
                if (kind == 0 && G.element(i).lead().comp == hc) {
                    const Monomial l = pair_lcm(i, j);
                    if (hm.divides(l) && !(G.element(i).lead().mono.lcm(hm) == l) &&
                        !(G.element(j).lead().mono.lcm(hm) == l)) {
                        it = queue.erase(it);
                        continue;
                    }
                }
                ++it;
            }
        }
        G.elements_.push_back(std::move(h));
        if (opts.track) G.reps_.push_back(std::move(rep));
        G.by_comp_[hc].push_back(t);
        for (int s : G.by_comp_[hc]) {
            if (s == t) continue;
            const Monomial& sm = G.element(s).lead().mono;
            if (opts.chain_criterion && F.rank() == 1 && sm.coprime(hm)) continue;
            const Monomial l = sm.lcm(hm);
            queue.insert({l.degree() + F.gen(static_cast<int>(hc)).total(), 0, s, t});
        }
    };

    while (!queue.empty()) {
        const auto [w, kind, i, j] = *queue.begin();
        queue.erase(queue.begin());
        Vector f, rep;
        if (kind == 1) {
            f = gens[static_cast<std::size_t>(i)];
            if (opts.track) {
                const Term& l = f.lead();
                rep = unit_vector(one_like(l.mono), i, G.input_module_, one_like(l.coef));
            }
        } else {
            const Vector& gi = G.element(i);
            const Vector& gj = G.element(j);
            const Monomial l = pair_lcm(i, j);
            const Monomial ui = l.quotient(gi.lead().mono), uj = l.quotient(gj.lead().mono);
            const Scalar one = one_like(gi.lead().coef);
            f = gi.shifted(ui);
            f.sub_mul(one, uj, gj);
            if (opts.track) {
                rep = G.reps_[static_cast<std::size_t>(i)].shifted(ui);
                rep.sub_mul(one, uj, G.reps_[static_cast<std::size_t>(j)]);
            }
        }
        f = G.reduce_impl(std::move(f), nullptr, opts.track ? &rep : nullptr, -1);
        if (f.is_zero()) continue;
        const Scalar c = f.lead().coef.inverse();
        f = f.scaled(c);
        if (opts.track) rep = rep.scaled(c);
        if (kind == 1) G.minimal_inputs_.push_back(i);
        add_element(std::move(f), std::move(rep));
    }

    // Drop elements whose lead is divisible by another lead (cannot happen for homogeneous input
    // processed by weight, kept as a guard), then inter-reduce tails.
    std::vector<bool> keep(static_cast<std::size_t>(G.size()), true);
    for (int a = 0; a < G.size(); ++a)
        for (int b = 0; b < G.size(); ++b)
            if (a != b && keep[static_cast<std::size_t>(b)] && G.element(a).lead().comp == G.element(b).lead().comp &&
                G.element(b).lead().mono.divides(G.element(a).lead().mono) &&
                !(a < b && G.element(a).lead().mono == G.element(b).lead().mono)) {
                keep[static_cast<std::size_t>(a)] = false;
                break;
            }
    {
        std::vector<Vector> el, rp;
        for (int a = 0; a < G.size(); ++a) {
            if (!keep[static_cast<std::size_t>(a)]) continue;
            el.push_back(G.elements_[static_cast<std::size_t>(a)]);
            if (opts.track) rp.push_back(G.reps_[static_cast<std::size_t>(a)]);
        }
        G.elements_ = std::move(el);
        G.reps_ = std::move(rp);
        G.rebuild_index();
    }
    for (int k = 0; k < G.size(); ++k) {
        Vector* rep = opts.track ? &G.reps_[static_cast<std::size_t>(k)] : nullptr;
        G.elements_[static_cast<std::size_t>(k)] =
            G.reduce_impl(G.elements_[static_cast<std::size_t>(k)], nullptr, rep, k);
    }

    std::vector<int> perm(static_cast<std::size_t>(G.size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        return compare_terms(G.element(a).lead(), G.element(b).lead()) < 0;
    });
    std::vector<Vector> el, rp;
    std::vector<Bidegree> degs;
    for (int a : perm) {
        el.push_back(G.elements_[static_cast<std::size_t>(a)]);
        degs.push_back(el.back().bidegree(F));
        if (opts.track) rp.push_back(G.reps_[static_cast<std::size_t>(a)]);
    }
    G.elements_ = std::move(el);
    G.reps_ = std::move(rp);
    G.element_module_ = FreeModule(std::move(degs));
    G.rebuild_index();
    std::sort(G.minimal_inputs_.begin(), G.minimal_inputs_.end());
    return G;
}

Vector normal_form(const Vector& f, const GroebnerBasis& G) { return G.reduce(f); }

bool is_groebner_basis(const GroebnerBasis& G) {
    for (int i = 0; i < G.size(); ++i) {
        for (int j = i + 1; j < G.size(); ++j) {
            const Term& a = G.element(i).lead();
            const Term& b = G.element(j).lead();
            if (a.comp != b.comp) continue;
            const Monomial l = a.mono.lcm(b.mono);
            Vector s = G.element(i).shifted(l.quotient(a.mono)).scaled(b.coef);
            s.sub_mul(a.coef, l.quotient(b.mono), G.element(j));
            if (!G.reduce(s).is_zero()) return false;
        }
    }
    return true;
}

ModuleMap syzygies(const GroebnerBasis& G) {
    const FreeModule& E = G.element_module();
    std::vector<Bidegree> degs;
    std::vector<Vector> cols;
    for (int i = 0; i < G.size(); ++i) {
        for (int j = i + 1; j < G.size(); ++j) {
            const Term& a = G.element(i).lead();
            const Term& b = G.element(j).lead();
            if (a.comp != b.comp) continue;
            const Monomial l = a.mono.lcm(b.mono);
            const Monomial ui = l.quotient(a.mono), uj = l.quotient(b.mono);
            const Scalar one = one_like(a.coef);
            Vector s = G.element(i).shifted(ui);
            s.sub_mul(one, uj, G.element(j));
            Vector q;
            G.reduce(s, q);
            Vector syz = unit_vector(one_like(l), i, E, one).shifted(ui);
            syz.sub_mul(one, uj, unit_vector(one_like(l), j, E, one));
            syz -= q;
            degs.push_back(l.bidegree() + G.ambient().gen(static_cast<int>(a.comp)));
            cols.push_back(std::move(syz));
        }
    }
    return ModuleMap(FreeModule(std::move(degs)), E, std::move(cols));
}

std::vector<Vector> kernel(const Ring& ring, const ModuleMap& phi) {
    GroebnerOptions opts;
    opts.track = true;
    GroebnerBasis G = buchberger(phi.target(), phi.columns(), opts, &phi.source());
    ModuleMap back(G.element_module(), phi.source(), G.representations());
    std::vector<Vector> out;
    const ModuleMap syz = syzygies(G);
    for (const auto& s : syz.columns()) {
        Vector v = back.apply(s);
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    const Scalar one = ring.field().one();
    for (int j = 0; j < phi.source().rank(); ++j) {
        Vector q;
        G.reduce(phi.column(j), q);
        Vector v = unit_vector(ring.one(), j, phi.source(), one) - back.apply(q);
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return out;
}

std::vector<int> minimal_generating_subset(const FreeModule& F, const std::vector<Vector>& gens) {
    GroebnerOptions opts;
    return buchberger(F, gens, opts).minimal_inputs();
}

// ---------------------------------------------------------------- graded pieces

GradedQuotient::GradedQuotient(Presentation M)
    : M_(std::move(M)), gb_(buchberger(M_.f0(), nonzero(M_.relations().columns()))) {}

const GradedPiece& GradedQuotient::piece(Bidegree d) const {
    const long long key = (static_cast<long long>(d.a) << 32) ^ static_cast<long long>(static_cast<std::uint32_t>(d.b));
    std::lock_guard<std::mutex> lock(mu_);
    auto it = pieces_.find(key);
    if (it != pieces_.end()) return *it->second;
    auto p = std::make_unique<GradedPiece>();
    for (int c = 0; c < f0().rank(); ++c) {
        const Bidegree e = d - f0().gen(c);
        if (!e.nonnegative()) continue;
        for (const auto& mono : ring().monomials(e)) {
            if (gb_.is_standard(mono, c)) {
                p->index.emplace(ModKey{mono, c}, static_cast<int>(p->basis.size()));
                p->basis.push_back(ModKey{mono, c});
            }
        }
    }
    const GradedPiece& ref = *p;
    pieces_.emplace(key, std::move(p));
    return ref;
}

std::vector<Scalar> GradedQuotient::coordinates(const Vector& v, Bidegree d) const {
    const GradedPiece& P = piece(d);
    std::vector<Scalar> out(static_cast<std::size_t>(P.dim()), ring().field().zero());
    for (const auto& t : gb_.reduce(v).terms()) {
        auto it = P.index.find(ModKey{t.mono, static_cast<int>(t.comp)});
        if (it == P.index.end()) throw DegreeMismatch("vector is not homogeneous of the requested bidegree");
        out[static_cast<std::size_t>(it->second)] = t.coef;
    }
    return out;
}

Vector GradedQuotient::basis_vector(const ModKey& k) const {
    return Vector::from_terms({Term{k.mono, static_cast<std::uint32_t>(k.comp),
                                    k.mono.degree() + f0().gen(k.comp).total(), ring().field().one()}});
}

GradedPiece graded_piece(const Presentation& M, Bidegree d) {
    GradedQuotient Q(M);
    return Q.piece(d);
}

// ---------------------------------------------------------------- quotients and saturation

std::vector<Vector> submodule_quotient(const Ring& ring, const FreeModule& F, const std::vector<Vector>& N_gens,
                                       const std::vector<Polynomial>& I) {
    std::vector<Polynomial> ideal;
    for (const auto& f : I)
        if (!f.is_zero()) ideal.push_back(f);
    const int r = F.rank();
    const Scalar one = ring.field().one();
    if (ideal.empty()) {
        std::vector<Vector> all;
        for (int a = 0; a < r; ++a) all.push_back(unit_vector(ring.one(), a, F, one));
        return all;
    }
    const std::vector<Vector> N = nonzero(N_gens);
    std::vector<Bidegree> tdeg, sdeg(F.gens());
    for (const auto& f : ideal)
        for (int a = 0; a < r; ++a) tdeg.push_back(F.gen(a) - f.bidegree());
    for (const auto& f : ideal)
        for (const auto& v : N) sdeg.push_back(v.bidegree(F) - f.bidegree());
    FreeModule T(std::move(tdeg)), S(std::move(sdeg));
    std::vector<Vector> cols;
    for (int a = 0; a < r; ++a) {
        Vector c;
        for (std::size_t k = 0; k < ideal.size(); ++k) c += Vector::single(T, static_cast<int>(k) * r + a, ideal[k]);
        cols.push_back(std::move(c));
    }
    for (std::size_t k = 0; k < ideal.size(); ++k)
        for (const auto& v : N) cols.push_back(-v.rebased(T, static_cast<int>(k) * r));
    std::vector<Vector> out;
    for (const auto& v : kernel(ring, ModuleMap(S, T, std::move(cols)))) {
        std::vector<Term> keep;
        for (const auto& t : v.terms())
            if (static_cast<int>(t.comp) < r) keep.push_back(t);
        Vector p = Vector::from_terms(std::move(keep));
        if (!p.is_zero()) out.push_back(std::move(p));
    }
    return out;
}

Presentation submodule_presentation(const Presentation& M, const std::vector<Vector>& gens) {
    const Ring& ring = M.ring();
    const FreeModule& F0 = M.f0();
    const std::vector<Vector> N = nonzero(M.relations().columns());
    std::vector<Vector> all = N;
    all.insert(all.end(), gens.begin(), gens.end());
    std::vector<Vector> kept;
    for (int idx : minimal_generating_subset(F0, all))
        if (idx >= static_cast<int>(N.size())) kept.push_back(all[static_cast<std::size_t>(idx)]);
    if (kept.empty()) return Presentation::free(ring, FreeModule());
    std::vector<Bidegree> udeg, sdeg;
    for (const auto& u : kept) udeg.push_back(u.bidegree(F0));
    sdeg = udeg;
    for (const auto& v : N) sdeg.push_back(v.bidegree(F0));
    std::vector<Vector> cols = kept;
    cols.insert(cols.end(), N.begin(), N.end());
    FreeModule U(udeg);
    const int t = U.rank();
    std::vector<Vector> rels;
    std::vector<Bidegree> rdeg;
    for (const auto& v : kernel(ring, ModuleMap(FreeModule(sdeg), F0, std::move(cols)))) {
        std::vector<Term> keep;
        for (const auto& term : v.terms())
            if (static_cast<int>(term.comp) < t) keep.push_back(term);
        Vector p = Vector::from_terms(std::move(keep));
        if (p.is_zero()) continue;
        rdeg.push_back(p.bidegree(U));
        rels.push_back(std::move(p));
    }
    return Presentation(ring, U, ModuleMap(FreeModule(std::move(rdeg)), U, std::move(rels)));
}

Presentation saturate(const Presentation& M, const std::vector<Polynomial>& I) {
    const FreeModule& F0 = M.f0();
    std::vector<Vector> cur = nonzero(M.relations().columns());
    for (;;) {
        std::vector<Vector> next = submodule_quotient(M.ring(), F0, cur, I);
        const GroebnerBasis G = buchberger(F0, cur);
        if (std::all_of(next.begin(), next.end(), [&](const Vector& v) { return G.contains(v); })) break;
        std::vector<Vector> sel;
        for (int idx : minimal_generating_subset(F0, next)) sel.push_back(next[static_cast<std::size_t>(idx)]);
        cur = std::move(sel);
    }
    return submodule_presentation(M, cur);
}

// ---------------------------------------------------------------- standard pairs

std::vector<StandardPair> standard_pairs(const std::vector<Monomial>& gens, int nx, int nvars) {
    std::vector<int> D(static_cast<std::size_t>(nvars), 0);
    for (const auto& g : gens)
        for (int v = 0; v < nvars; ++v) D[static_cast<std::size_t>(v)] = std::max(D[static_cast<std::size_t>(v)], g[v]);

    auto admissible = [&](const std::vector<int>& a, unsigned mask) {
        for (const auto& g : gens) {
            bool divides = true;
            for (int v = 0; v < nvars && divides; ++v)
                if (!(mask >> v & 1U) && g[v] > a[static_cast<std::size_t>(v)]) divides = false;
            if (divides) return false;
        }
        return true;
    };

    // A maximal pair (a, S) has a_j < D_j off S: otherwise (a with a_j = 0, S + j) dominates it.
    // It is maximal iff no single j outside S can be freed.
    std::vector<StandardPair> out;
    const unsigned full = nvars == 0 ? 0U : (1U << nvars) - 1U;
    for (unsigned mask = 0;; ++mask) {
        std::vector<int> comp;
        bool skip = false;
        for (int v = 0; v < nvars; ++v) {
            if (mask >> v & 1U) continue;
            if (D[static_cast<std::size_t>(v)] == 0) skip = true;
            comp.push_back(v);
        }
        if (!skip) {
            std::vector<int> a(static_cast<std::size_t>(nvars), 0);
            for (;;) {
                if (admissible(a, mask)) {
                    bool maximal = true;
                    for (int v : comp) {
                        std::vector<int> b = a;
                        b[static_cast<std::size_t>(v)] = 0;
                        if (admissible(b, mask | 1U << v)) {
                            maximal = false;
                            break;
                        }
                    }
                    if (maximal) {
                        StandardPair sp;
                        sp.base = Monomial::from_exponents(nx, a);
                        for (int v = 0; v < nvars; ++v)
                            if (mask >> v & 1U) sp.free_vars.push_back(v);
                        out.push_back(std::move(sp));
                    }
                }
                std::size_t pos = 0;
                while (pos < comp.size()) {
                    const auto v = static_cast<std::size_t>(comp[pos]);
                    if (++a[v] < D[v]) break;
                    a[v] = 0;
                    ++pos;
                }
                if (pos == comp.size()) break;
            }
        }
        if (mask == full) break;
    }
    return out;
}

std::vector<StandardPair> standard_pairs(const GroebnerBasis& G, int nx, int nvars) {
    std::vector<StandardPair> out;
    const auto leads = G.lead_monomials();
    for (int c = 0; c < G.ambient().rank(); ++c) {
        for (auto& sp : standard_pairs(leads[static_cast<std::size_t>(c)], nx, nvars)) {
            sp.comp = c;
            out.push_back(std::move(sp));
        }
    }
    return out;
}

bool vanishes_on_upset(const Presentation& M, const Region& U) {
    if (!U.is_upset()) throw InvalidRegion(U.name() + " is not an up-set");
    const UpsetBounds ub = U.upset_bounds();
    const Ring& ring = M.ring();
    const GroebnerBasis G = buchberger(M.f0(), nonzero(M.relations().columns()));
    // Each cone's bidegrees form a point, a horizontal or vertical ray, or a quadrant; an up-set
    // meets a ray iff the fixed coordinate clears the corresponding bound, and always meets a quadrant.
    for (const auto& sp : standard_pairs(G, ring.nx(), ring.nvars())) {
        const Bidegree b0 = sp.base.bidegree() + M.f0().gen(sp.comp);
        bool hx = false, hy = false;
        for (int v : sp.free_vars) (v < ring.nx() ? hx : hy) = true;
        bool meets;
        if (hx && hy) meets = true;
        else if (hx) meets = b0.b >= ub.b;
        else if (hy) meets = b0.a >= ub.a;
        else meets = ub.contains(b0.a, b0.b);
        if (meets) return false;
    }
    return true;
}

} // namespace bireg
