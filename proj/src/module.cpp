#include "bireg/module.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bireg/errors.hpp"

namespace bireg {

long long FreeModule::dim(const Ring& ring, Bidegree d) const {
    long long s = 0;
    for (const auto& g : gens_) s += ring.dim(d - g);
    return s;
}

FreeModule FreeModule::twisted(int a, int b) const {
    std::vector<Bidegree> g = gens_;
    for (auto& e : g) e = e - Bidegree{a, b};
    return FreeModule(std::move(g));
}

FreeModule FreeModule::direct_sum(const FreeModule& o) const {
    std::vector<Bidegree> g = gens_;
    g.insert(g.end(), o.gens_.begin(), o.gens_.end());
    return FreeModule(std::move(g));
}

int compare_terms(const Term& s, const Term& t) noexcept {
    if (s.weight != t.weight) return s.weight > t.weight ? 1 : -1;
    int c = compare_revlex(s.mono, t.mono);
    if (c != 0) return c;
    if (s.comp != t.comp) return s.comp < t.comp ? 1 : -1;
    return 0;
}

// ---------------------------------------------------------------- Vector

Vector Vector::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& s, const Term& t) { return compare_terms(s, t) > 0; });
    Vector v;
    for (auto& t : terms) {
        if (!v.terms_.empty() && same_module_monomial(v.terms_.back(), t)) {
            v.terms_.back().coef += t.coef;
            if (v.terms_.back().coef.is_zero()) v.terms_.pop_back();
        } else if (!t.coef.is_zero()) {
            v.terms_.push_back(std::move(t));
        }
    }
    return v;
}

Vector Vector::single(const FreeModule& F, int comp, const Polynomial& p) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    const int w = F.gen(comp).total();
    for (const auto& [mono, coef] : p.terms())
        terms.push_back(Term{mono, static_cast<std::uint32_t>(comp), mono.degree() + w, coef});
    return from_terms(std::move(terms));
}

Vector Vector::from_entries(const FreeModule& F, const std::vector<Polynomial>& entries) {
    if (static_cast<int>(entries.size()) != F.rank()) throw std::invalid_argument("bireg: entry count != rank");
    std::vector<Term> terms;
    for (int i = 0; i < F.rank(); ++i) {
        const int w = F.gen(i).total();
        for (const auto& [mono, coef] : entries[static_cast<std::size_t>(i)].terms())
            terms.push_back(Term{mono, static_cast<std::uint32_t>(i), mono.degree() + w, coef});
    }
    return from_terms(std::move(terms));
}

Polynomial Vector::component(int i) const {
    std::vector<Polynomial::TermT> t;
    for (const auto& term : terms_)
        if (static_cast<int>(term.comp) == i) t.emplace_back(term.mono, term.coef);
    return Polynomial::from_terms(std::move(t));
}

Bidegree Vector::bidegree(const FreeModule& F) const {
    if (terms_.empty()) throw ZeroPolynomial("the zero vector has no bidegree");
    const auto& t = terms_.front();
    Bidegree d = t.mono.bidegree() + F.gen(static_cast<int>(t.comp));
    if (!is_homogeneous(F)) throw NotBihomogeneous("vector mixes bidegrees");
    return d;
}

bool Vector::is_homogeneous(const FreeModule& F) const {
    if (terms_.empty()) return true;
    const auto& t0 = terms_.front();
    Bidegree d = t0.mono.bidegree() + F.gen(static_cast<int>(t0.comp));
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
        return t.mono.bidegree() + F.gen(static_cast<int>(t.comp)) == d;
    });
}

Vector Vector::operator-() const {
    Vector r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

namespace {

// b's terms pass through map_b (which must preserve their relative order) before merging.
template <class MapB>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, MapB&& map_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (j < b.size()) {
        Term t = map_b(b[j]);
        while (i < a.size() && compare_terms(a[i], t) > 0) out.push_back(a[i++]);
        if (i < a.size() && compare_terms(a[i], t) == 0) {
            t.coef += a[i].coef;
            ++i;
        }
        if (!t.coef.is_zero()) out.push_back(std::move(t));
        ++j;
    }
    while (i < a.size()) out.push_back(a[i++]);
    return out;
}

} // namespace

Vector& Vector::operator+=(const Vector& o) {
    terms_ = merge_terms(terms_, o.terms_, [](const Term& t) { return t; });
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    terms_ = merge_terms(terms_, o.terms_, [](const Term& t) {
        Term r = t;
        r.coef = -r.coef;
        return r;
    });
    return *this;
}

void Vector::sub_mul(const Scalar& c, const Monomial& u, const Vector& g) {
    const Scalar neg = -c;
    const int du = u.degree();
    terms_ = merge_terms(terms_, g.terms_, [&](const Term& t) {
        return Term{t.mono * u, t.comp, t.weight + du, t.coef * neg};
    });
}

Vector Vector::scaled(const Scalar& c) const {
    Vector r;
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

Vector Vector::shifted(const Monomial& u) const {
    Vector r;
    r.terms_ = terms_;
    const int du = u.degree();
    for (auto& t : r.terms_) {
        t.mono = t.mono * u;
        t.weight += du;
    }
    return r;
}

Vector Vector::times(const Polynomial& p) const {
    Vector r;
    for (const auto& [mono, coef] : p.terms()) r.sub_mul(-coef, mono, *this);
    return r;
}

Vector Vector::monic() const {
    if (terms_.empty()) return *this;
    if (terms_.front().coef.is_one()) return *this;
    return scaled(terms_.front().coef.inverse());
}

bool operator==(const Vector& a, const Vector& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!same_module_monomial(a.terms_[i], b.terms_[i]) || !(a.terms_[i].coef == b.terms_[i].coef))
            return false;
    }
    return true;
}

Vector Vector::rebased(const FreeModule& F, int comp_offset) const {
    std::vector<Term> terms = terms_;
    for (auto& t : terms) {
        t.comp = static_cast<std::uint32_t>(static_cast<int>(t.comp) + comp_offset);
        t.weight = t.mono.degree() + F.gen(static_cast<int>(t.comp)).total();
    }
    return from_terms(std::move(terms));
}

std::string Vector::to_string(const Ring& ring) const {
    if (terms_.empty()) return "0";
    int maxc = 0;
    for (const auto& t : terms_) maxc = std::max(maxc, static_cast<int>(t.comp));
    std::ostringstream os;
    bool first = true;
    for (int c = 0; c <= maxc; ++c) {
        Polynomial p = component(c);
        if (p.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << '(' << p.to_string(ring) << ")*e" << (c + 1);
    }
    return os.str();
}

// ---------------------------------------------------------------- ModuleMap

ModuleMap::ModuleMap(FreeModule source, FreeModule target, std::vector<Vector> columns)
    : source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
    if (static_cast<int>(columns_.size()) != source_.rank())
        throw std::invalid_argument("bireg: column count does not match source rank");
}

ModuleMap ModuleMap::from_matrix(const FreeModule& source, const FreeModule& target,
                                 const std::vector<std::vector<Polynomial>>& rows) {
    if (static_cast<int>(rows.size()) != target.rank()) throw std::invalid_argument("bireg: row count != target rank");
    std::vector<Vector> cols;
    for (int j = 0; j < source.rank(); ++j) {
        std::vector<Polynomial> entries;
        for (int i = 0; i < target.rank(); ++i) entries.push_back(rows[static_cast<std::size_t>(i)].at(static_cast<std::size_t>(j)));
        cols.push_back(Vector::from_entries(target, entries));
    }
    return ModuleMap(source, target, std::move(cols));
}

ModuleMap ModuleMap::zero(const FreeModule& source, const FreeModule& target) {
    return ModuleMap(source, target, std::vector<Vector>(static_cast<std::size_t>(source.rank())));
}

Vector ModuleMap::apply(const Vector& v) const {
    Vector r;
    for (const auto& t : v.terms()) r.sub_mul(-t.coef, t.mono, columns_[t.comp]);
    return r;
}

ModuleMap ModuleMap::compose(const ModuleMap& inner) const {
    if (!(inner.target() == source_)) throw std::invalid_argument("bireg: composing incompatible maps");
    std::vector<Vector> cols;
    cols.reserve(inner.columns().size());
    for (const auto& c : inner.columns()) cols.push_back(apply(c));
    return ModuleMap(inner.source(), target_, std::move(cols));
}

bool ModuleMap::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const Vector& v) { return v.is_zero(); });
}

bool ModuleMap::degree_compatible() const {
    for (int j = 0; j < source_.rank(); ++j) {
        for (const auto& t : column(j).terms()) {
            Bidegree need = source_.gen(j) - target_.gen(static_cast<int>(t.comp));
            if (!need.nonnegative() || t.mono.bidegree() != need) return false;
        }
    }
    return true;
}

ModuleMap ModuleMap::twisted(int a, int b) const {
    FreeModule s = source_.twisted(a, b), t = target_.twisted(a, b);
    std::vector<Vector> cols;
    for (const auto& c : columns_) cols.push_back(c.rebased(t));
    return ModuleMap(std::move(s), std::move(t), std::move(cols));
}

// ---------------------------------------------------------------- Presentation

Presentation::Presentation(Ring ring, FreeModule f0, ModuleMap relations)
    : ring_(std::move(ring)), f0_(std::move(f0)), relations_(std::move(relations)) {
    if (!(relations_.target() == f0_)) throw std::invalid_argument("bireg: relations must map into f0");
    if (!relations_.degree_compatible()) throw DegreeMismatch("relations are not degree compatible");
}

Presentation Presentation::free(Ring ring, FreeModule f0) {
    ModuleMap rel = ModuleMap::zero(FreeModule(), f0);
    return Presentation(std::move(ring), std::move(f0), std::move(rel));
}

Presentation Presentation::quotient_ring(Ring ring, const std::vector<Polynomial>& ideal_gens) {
    FreeModule f0({Bidegree{0, 0}});
    std::vector<Bidegree> src;
    std::vector<Vector> cols;
    for (const auto& g : ideal_gens) {
        if (g.is_zero()) continue;
        src.push_back(g.bidegree());
        cols.push_back(Vector::single(f0, 0, g));
    }
    return Presentation(ring, f0, ModuleMap(FreeModule(src), f0, std::move(cols)));
}

Presentation twist(const Presentation& M, int a, int b) {
    return Presentation(M.ring(), M.f0().twisted(a, b), M.relations().twisted(a, b));
}

Presentation direct_sum(const Presentation& M, const Presentation& N) {
    FreeModule f0 = M.f0().direct_sum(N.f0());
    FreeModule f1 = M.relations().source().direct_sum(N.relations().source());
    std::vector<Vector> cols;
    for (const auto& c : M.relations().columns()) cols.push_back(c.rebased(f0));
    for (const auto& c : N.relations().columns()) cols.push_back(c.rebased(f0, M.f0().rank()));
    ModuleMap rel(std::move(f1), f0, std::move(cols));
    return Presentation(M.ring(), f0, std::move(rel));
}

} // namespace bireg
