#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bireg/groebner.hpp"
#include "bireg/resolutions.hpp"

namespace bireg {

// (x), (y), (x,y), and the irrelevant ideal (x_i y_j).
enum class IdealKind { X, Y, XY_SUM, IRRELEVANT };

std::string to_string(IdealKind k);
// Accepts x|y|sum|irr and the enumerator names.
IdealKind ideal_kind_from_string(const std::string& s);

std::vector<Polynomial> ideal_generators(const Ring& ring, IdealKind kind);
// The ideal is zero when its variable block is missing.
bool ideal_is_zero(const Ring& ring, IdealKind kind);

// Free resolution of R/I^(nu) with F_0 = R; support masks give the comparison maps nu+1 -> nu.
FreeComplex cofinal_resolution(const Ring& ring, IdealKind kind, int nu);

struct LocalCohomologyValue {
    long long dim = 0;
    int stabilized_at = 0;
    bool certified = false;
    std::string diagnostics;
};

struct ExtGradedDim {
    long long dim = 0;
    // dim Hom(F_{i-1}, M)_d, dim Hom(F_i, M)_d, dim Hom(F_{i+1}, M)_d
    long long cochains[3] = {0, 0, 0};
};

// Analysis object for one module: Groebner basis, minimal resolution, torsion submodules and
// the Ext cochain machinery, all memoized. Safe to share between threads.
class BigradedModule {
public:
    explicit BigradedModule(Presentation M, int nu_max = 8);

    const Presentation& presentation() const;
    const Ring& ring() const;
    const GradedQuotient& quotient() const;
    int nu_max() const;

    const Resolution& resolution() const;
    const BettiTable& betti() const;

    // H^0_I(M) = (0 :_M I^infinity).
    const Presentation& torsion(IdealKind kind) const;
    const GradedQuotient& torsion_quotient(IdealKind kind) const;

    // Smallest nu from which Ext^i(R/I^(nu), M)_d -> H^i_I(M)_d is an isomorphism for every i,
    // read off the Betti degrees of M.
    int nu_floor(IdealKind kind, Bidegree d) const;

    ExtGradedDim ext(IdealKind kind, int i, Bidegree d, int nu) const;
    // dim of the image of Ext^i_nu -> Ext^i_{nu+1} in bidegree d.
    long long transition_image_dim(IdealKind kind, int i, Bidegree d, int nu) const;

    LocalCohomologyValue local_cohomology(IdealKind kind, int i, Bidegree d) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

ExtGradedDim ext_graded_dim(const Presentation& M, IdealKind kind, int i, Bidegree d, int nu);

LocalCohomologyValue local_cohomology_dim(const BigradedModule& M, IdealKind kind, int i, Bidegree d);
LocalCohomologyValue local_cohomology_dim(const Presentation& M, IdealKind kind, int i, Bidegree d, int nu_max = 8);
// Throws NoStabilization instead of returning an uncertified value.
long long local_cohomology_dim_strict(const BigradedModule& M, IdealKind kind, int i, Bidegree d);

// Closed form for M = R(twist.a, twist.b) on P^m x P^n (m, n >= 0).
long long free_lc_dim(IdealKind kind, int i, Bidegree twist, Bidegree d, int m, int n);

// cells[k - k0][k' - l0].
struct LcGrid {
    IdealKind kind = IdealKind::IRRELEVANT;
    int i = 0;
    Window window{0, -1, 0, -1};
    std::vector<std::vector<LocalCohomologyValue>> cells;

    bool all_certified() const;
    const LocalCohomologyValue& at(int k, int kp) const {
        return cells[static_cast<std::size_t>(k - window.k0)][static_cast<std::size_t>(kp - window.l0)];
    }
};

LcGrid lc_table(const BigradedModule& M, IdealKind kind, int i, const Window& w);

// Rows k' descending; uncertified cells carry a trailing '?'.
std::string render_lc_grid(const LcGrid& g);

Presentation h0_via_saturation(const Presentation& M, IdealKind kind);

// The same module over K[x_0..x_m, y_0..y_n] with the total grading: every variable in one block,
// generator of bidegree (a,b) placed in degree (a+b, 0).
Presentation flatten(const Presentation& M);

// sum over k + k' = t of dim H^i_{(x,y)}(M)_{k,k'}; only finitely many terms are nonzero.
LocalCohomologyValue sharp_lc_dim(const BigradedModule& M, int i, int t);

} // namespace bireg
