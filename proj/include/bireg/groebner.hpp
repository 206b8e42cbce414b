#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bireg/module.hpp"
#include "bireg/regions.hpp"

namespace bireg {

struct GroebnerOptions {
    // Gebauer-Moeller chain criterion (plus the coprime criterion for ideals).
    bool chain_criterion = true;
    // Record every basis element as a combination of the input generators.
    bool track = false;
};

// Reduced Groebner basis of a submodule of a free module, elements sorted ascending by lead term.
class GroebnerBasis {
public:
    GroebnerBasis() = default;

    const FreeModule& ambient() const noexcept { return ambient_; }
    const std::vector<Vector>& elements() const noexcept { return elements_; }
    int size() const noexcept { return static_cast<int>(elements_.size()); }
    const Vector& element(int k) const { return elements_[static_cast<std::size_t>(k)]; }
    // Free module with one generator per element, in the element's bidegree.
    const FreeModule& element_module() const noexcept { return element_module_; }

    bool tracked() const noexcept { return tracked_; }
    // Free module on the input generators; representations()[k] lives there.
    const FreeModule& input_module() const noexcept { return input_module_; }
    const std::vector<Vector>& representations() const noexcept { return reps_; }
    // Inputs that were not in the span of earlier-weight inputs; a minimal generating subset.
    const std::vector<int>& minimal_inputs() const noexcept { return minimal_inputs_; }

    // Index of an element whose lead term divides mono*e_comp, or -1.
    int find_divisor(const Monomial& mono, std::uint32_t comp) const;
    bool is_standard(const Monomial& mono, int comp) const { return find_divisor(mono, static_cast<std::uint32_t>(comp)) < 0; }

    Vector reduce(const Vector& f) const;
    // f = sum_k quotient_k * g_k + remainder; quotient lives in element_module().
    Vector reduce(const Vector& f, Vector& quotient) const;
    bool contains(const Vector& f) const { return reduce(f).is_zero(); }

    // Lead monomials grouped by component of the ambient module.
    std::vector<std::vector<Monomial>> lead_monomials() const;

private:
    friend GroebnerBasis buchberger(const FreeModule&, const std::vector<Vector>&, GroebnerOptions,
                                    const FreeModule*);
    Vector reduce_impl(Vector f, Vector* quotient, Vector* rep, int skip) const;
    void rebuild_index();

    FreeModule ambient_;
    FreeModule element_module_;
    FreeModule input_module_;
    std::vector<Vector> elements_;
    std::vector<Vector> reps_;
    std::vector<int> minimal_inputs_;
    bool tracked_ = false;
    std::vector<std::vector<int>> by_comp_;
};

// Homogeneous Buchberger. input_module (for tracking) defaults to the generators' own bidegrees.
GroebnerBasis buchberger(const FreeModule& F, const std::vector<Vector>& gens, GroebnerOptions opts = {},
                         const FreeModule* input_module = nullptr);

Vector normal_form(const Vector& f, const GroebnerBasis& G);

// Buchberger criterion: every S-vector of a same-component pair reduces to zero.
bool is_groebner_basis(const GroebnerBasis& G);

// Schreyer syzygies: a map onto ker(element_module -> ambient).
ModuleMap syzygies(const GroebnerBasis& G);

// Generators of the kernel of phi, as vectors in phi.source().
std::vector<Vector> kernel(const Ring& ring, const ModuleMap& phi);

// Indices of a minimal generating subset of the submodule of F spanned by gens.
std::vector<int> minimal_generating_subset(const FreeModule& F, const std::vector<Vector>& gens);

struct ModKey {
    Monomial mono;
    int comp;
    friend bool operator==(const ModKey&, const ModKey&) = default;
};

struct ModKeyHash {
    std::size_t operator()(const ModKey& k) const noexcept {
        return k.mono.hash() * 0x9e3779b97f4a7c15ULL ^ static_cast<std::size_t>(k.comp);
    }
};

// Standard-monomial basis of M_d.
struct GradedPiece {
    std::vector<ModKey> basis;
    std::unordered_map<ModKey, int, ModKeyHash> index;
    long long dim() const noexcept { return static_cast<long long>(basis.size()); }
};

// M = F0 / N with a Groebner basis of N and memoized graded pieces.
class GradedQuotient {
public:
    explicit GradedQuotient(Presentation M);

    const Presentation& presentation() const noexcept { return M_; }
    const Ring& ring() const noexcept { return M_.ring(); }
    const FreeModule& f0() const noexcept { return M_.f0(); }
    const GroebnerBasis& gb() const noexcept { return gb_; }

    const GradedPiece& piece(Bidegree d) const;
    long long dim(Bidegree d) const { return piece(d).dim(); }
    Vector normal_form(const Vector& v) const { return gb_.reduce(v); }
    // Coordinates of the class of v (homogeneous of bidegree d) in piece(d).basis.
    std::vector<Scalar> coordinates(const Vector& v, Bidegree d) const;
    // Standard monomial mono*e_comp as a vector.
    Vector basis_vector(const ModKey& k) const;

private:
    Presentation M_;
    GroebnerBasis gb_;
    mutable std::mutex mu_;
    mutable std::unordered_map<long long, std::unique_ptr<GradedPiece>> pieces_;
};

GradedPiece graded_piece(const Presentation& M, Bidegree d);

// Generators of (N :_F I) for N = span(N_gens) in F.
std::vector<Vector> submodule_quotient(const Ring& ring, const FreeModule& F, const std::vector<Vector>& N_gens,
                                       const std::vector<Polynomial>& I);

// Presentation of the submodule of M generated by the classes of gens (vectors in M.f0()).
Presentation submodule_presentation(const Presentation& M, const std::vector<Vector>& gens);

// (0 :_M I^infinity).
Presentation saturate(const Presentation& M, const std::vector<Polynomial>& I);

struct StandardPair {
    Monomial base;
    int comp = 0;
    std::vector<int> free_vars;
};

// Standard pairs of the monomial ideal generated by gens in a ring with nvars variables.
std::vector<StandardPair> standard_pairs(const std::vector<Monomial>& gens, int nx, int nvars);
// Standard pairs of the lead-term module of G, per component.
std::vector<StandardPair> standard_pairs(const GroebnerBasis& G, int nx, int nvars);

bool vanishes_on_upset(const Presentation& M, const Region& U);

} // namespace bireg
