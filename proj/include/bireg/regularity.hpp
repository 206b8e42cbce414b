#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bireg/local_cohomology.hpp"

namespace bireg {

enum class RegularityMethod { ResolutionCriterion, LocalCohomologyCheck };
enum class HypothesisVariant { DefinitionOnly, TheoremThreeFiveThree };

std::string to_string(RegularityMethod m);
std::string to_string(HypothesisVariant v);

// Strong verdicts: i is the homological degree, at the offending generator bidegree, dim its multiplicity.
// Weak verdicts: i is the cohomological degree and dim the local cohomology dimension at `at`.
struct RegularityWitness {
    int i = 0;
    Bidegree at{};
    long long dim = 0;
};

struct RegularityVerdict {
    bool value = false;
    // False when some required cell could not be certified.
    bool decided = true;
    RegularityMethod method = RegularityMethod::ResolutionCriterion;
    std::vector<RegularityWitness> witnesses;
    std::vector<std::string> diagnostics;
};

struct Frontier {
    std::vector<Bidegree> minimal_points;
    // Zero module: every (p,p') is regular.
    bool everything = false;

    bool contains(int p, int pp) const;
};

RegularityVerdict strong_regularity_check(const BigradedModule& M, int p, int pp);
Frontier strong_regularity_frontier(const BigradedModule& M);
// Minimal points of {p >= A, p' >= B, p + p' >= S} from (homological degree, bidegree) pairs.
Frontier frontier_from_betti(const BettiTable& betti);

RegularityVerdict weak_regularity_check(const BigradedModule& M, int p, int pp,
                                        HypothesisVariant variant = HypothesisVariant::TheoremThreeFiveThree);

struct VcCell {
    IdealKind kind;
    int i;
    // For the (x,y) family only at.a + at.b (the total degree) is meaningful.
    Bidegree at;
    long long dim;
    bool certified;
};

struct VcReport {
    bool ok = true;
    bool decided = true;
    std::vector<VcCell> violations;
    std::vector<VcCell> undecided;
    long long cells_checked = 0;
};

VcReport vc_window_verify(const BigradedModule& M, int d, int p, int pp, const Window& w);

// R_step * M_from == M_{from+step}.
bool multiplication_surjectivity(const BigradedModule& M, Bidegree from, Bidegree step);

struct ClassicalReductionReport {
    // Which block carries the grading: 'x' or 'y'.
    char block = 'y';
    std::optional<int> classical;
    std::optional<int> frontier_coordinate;
    bool agree = false;
    BettiTable single_graded;
    std::string detail;
};

// Castelnuovo-Mumford regularity from a singly graded Betti table: max(deg - i).
std::optional<int> classical_regularity(const BettiTable& single_graded);

// For rings with a missing block (m or n = -1) or a one-variable block (m or n = 0): compares the
// frontier coordinate of the other block with the classical regularity of the module obtained by
// dropping the trivial block (setting its variable to 1).
ClassicalReductionReport classical_reduction_check(const BigradedModule& M);

} // namespace bireg
