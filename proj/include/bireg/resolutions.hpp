#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bireg/groebner.hpp"
#include "bireg/linalg.hpp"
#include "bireg/regions.hpp"

namespace bireg {

// Homological degree -> sorted (bidegree, multiplicity) list.
class BettiTable {
public:
    using Row = std::vector<std::pair<Bidegree, int>>;

    BettiTable() = default;
    static BettiTable from_terms(const std::vector<FreeModule>& terms);

    const std::map<int, Row>& rows() const noexcept { return rows_; }
    void add(int d, Bidegree e, int mult = 1);
    // Largest homological degree with a nonzero entry, -1 for the zero module.
    int length() const;
    int rank(int d) const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
    std::string to_string() const;

private:
    std::map<int, Row> rows_;
};

// terms[0..s]; differentials[i] : terms[i+1] -> terms[i]. support[i][a], when present, is the
// variable bitmask of the exterior generator a of terms[i] (Koszul-type complexes only).
struct FreeComplex {
    std::vector<FreeModule> terms;
    std::vector<ModuleMap> differentials;
    std::vector<std::vector<std::uint32_t>> support;

    int length() const noexcept { return static_cast<int>(terms.size()) - 1; }
    bool d_squared_zero() const;
    BettiTable betti() const { return BettiTable::from_terms(terms); }
};

// A free resolution of a presented module; augmentation maps terms[0] to the presentation's f0.
struct Resolution : FreeComplex {
    ModuleMap augmentation;
    bool minimal = false;
};

// Matrix of phi on the (d) graded pieces: columns index monomial*e_j of source_d, rows target_d.
Matrix graded_matrix(const Ring& ring, const ModuleMap& phi, Bidegree d);

// Homology dimension of the complex at terms[i] in bidegree d.
long long homology_dim(const Ring& ring, const FreeComplex& C, int i, Bidegree d);

// First bidegree of the window where homology at some terms[i], i >= from, is nonzero.
struct ExactnessReport {
    bool exact = true;
    int position = -1;
    Bidegree where{};
};
ExactnessReport check_exact(const Ring& ring, const FreeComplex& C, const Window& w, int from = 1);

// Presentation without unit entries and with a minimal set of relations. gens_map, if given,
// receives the map from the new f0 to the old f0.
Presentation prune(const Presentation& M, ModuleMap* gens_map = nullptr);

// Minimal homogeneous generators of M as elements of M.f0(), with their bidegrees.
std::vector<std::pair<Vector, Bidegree>> minimal_generators(const Presentation& M);

// max_length < 0 means the number of variables.
Resolution minimal_free_resolution(const Presentation& M, int max_length = -1);

// Cancel unit entries, smallest bidegree first, then by position.
FreeComplex minimize(const FreeComplex& C);
Resolution minimize(const Resolution& C);

// Koszul complex on {z^nu : z in vars}; truncated drops the exterior power 0.
FreeComplex koszul_complex(const Ring& ring, const std::vector<int>& vars, int nu, bool truncated = false);

// R <- K_{>=1}(x^nu) (x) K_{>=1}(y^nu), resolving R/m^(nu).
FreeComplex irrelevant_resolution(const Ring& ring, int nu);

// Product of the variables in mask.
Monomial support_monomial(const Ring& ring, std::uint32_t mask);

} // namespace bireg
