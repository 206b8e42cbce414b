#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bireg/ring.hpp"

namespace bireg {

// Free bigraded module  (+)_alpha R(-e_alpha): gens[alpha] is the bidegree of e_alpha.
class FreeModule {
public:
    FreeModule() = default;
    explicit FreeModule(std::vector<Bidegree> gens) : gens_(std::move(gens)) {}

    int rank() const noexcept { return static_cast<int>(gens_.size()); }
    Bidegree gen(int i) const { return gens_[static_cast<std::size_t>(i)]; }
    const std::vector<Bidegree>& gens() const noexcept { return gens_; }

    // dim of the (k,k') piece: sum over alpha of dim R_{d - e_alpha}.
    long long dim(const Ring& ring, Bidegree d) const;

    FreeModule twisted(int a, int b) const;
    FreeModule direct_sum(const FreeModule& o) const;

    friend bool operator==(const FreeModule&, const FreeModule&) = default;

private:
    std::vector<Bidegree> gens_;
};

// Module term coef * mono * e_comp. weight = deg(mono) + total degree of e_comp.
struct Term {
    Monomial mono;
    std::uint32_t comp;
    std::int32_t weight;
    Scalar coef;
};

// Module order: weight, then reverse lex on the monomial, then lower component index first.
// Returns >0 when s is larger.
int compare_terms(const Term& s, const Term& t) noexcept;
inline bool same_module_monomial(const Term& s, const Term& t) noexcept {
    return s.comp == t.comp && s.mono == t.mono;
}

// Element of a free module: sparse, terms sorted descending in the module order.
class Vector {
public:
    Vector() = default;
    static Vector from_terms(std::vector<Term> terms);
    // p * e_comp in F.
    static Vector single(const FreeModule& F, int comp, const Polynomial& p);
    // Vector with entries[i] in component i.
    static Vector from_entries(const FreeModule& F, const std::vector<Polynomial>& entries);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    const Term& lead() const { return terms_.front(); }
    void drop_lead() { terms_.erase(terms_.begin()); }

    Polynomial component(int i) const;
    // Bidegree of a homogeneous nonzero element.
    Bidegree bidegree(const FreeModule& F) const;
    bool is_homogeneous(const FreeModule& F) const;

    Vector operator-() const;
    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }

    Vector scaled(const Scalar& c) const;
    Vector shifted(const Monomial& u) const;
    // this -= c * u * g
    void sub_mul(const Scalar& c, const Monomial& u, const Vector& g);
    Vector times(const Polynomial& p) const;
    Vector monic() const;

    friend bool operator==(const Vector& a, const Vector& b);

    // Re-express the same entries over a different free module (weights recomputed).
    Vector rebased(const FreeModule& F, int comp_offset = 0) const;

    std::string to_string(const Ring& ring) const;

private:
    std::vector<Term> terms_;
};

// Degree-compatible map source -> target. columns[j] is the image of source generator j.
// Entry (i,j) has bidegree source.gen(j) - target.gen(i).
class ModuleMap {
public:
    ModuleMap() = default;
    ModuleMap(FreeModule source, FreeModule target, std::vector<Vector> columns);
    // Build from a row-major matrix of polynomials (rows index target generators).
    static ModuleMap from_matrix(const FreeModule& source, const FreeModule& target,
                                 const std::vector<std::vector<Polynomial>>& rows);
    static ModuleMap zero(const FreeModule& source, const FreeModule& target);

    const FreeModule& source() const noexcept { return source_; }
    const FreeModule& target() const noexcept { return target_; }
    const std::vector<Vector>& columns() const noexcept { return columns_; }
    const Vector& column(int j) const { return columns_[static_cast<std::size_t>(j)]; }

    Polynomial entry(int i, int j) const { return column(j).component(i); }
    Vector apply(const Vector& v) const;
    // (*this) o inner
    ModuleMap compose(const ModuleMap& inner) const;
    bool is_zero() const;

    // Every nonzero entry bihomogeneous of bidegree source.gen(j) - target.gen(i).
    bool degree_compatible() const;
    ModuleMap twisted(int a, int b) const;

private:
    FreeModule source_;
    FreeModule target_;
    std::vector<Vector> columns_;
};

// M = coker(relations : F1 -> F0).
class Presentation {
public:
    Presentation(Ring ring, FreeModule f0, ModuleMap relations);
    // The free module F itself (no relations).
    static Presentation free(Ring ring, FreeModule f0);
    // R/(I) for bihomogeneous generators of I.
    static Presentation quotient_ring(Ring ring, const std::vector<Polynomial>& ideal_gens);

    const Ring& ring() const noexcept { return ring_; }
    const FreeModule& f0() const noexcept { return f0_; }
    const ModuleMap& relations() const noexcept { return relations_; }

private:
    Ring ring_;
    FreeModule f0_;
    ModuleMap relations_;
};

// M(a,b): M(a,b)_{d,e} = M_{d+a,e+b}.
Presentation twist(const Presentation& M, int a, int b);
Presentation direct_sum(const Presentation& M, const Presentation& N);

} // namespace bireg
