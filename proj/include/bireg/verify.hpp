#pragma once

#include <string>
#include <vector>

#include "bireg/regularity.hpp"

namespace bireg {

enum class CheckStatus { Pass, Fail, Undecided };
std::string to_string(CheckStatus s);

struct CheckOutcome {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

// Cross-validation of independent code paths on one module: resolution sanity, frontier sharpness,
// strong => weak at the frontier, windowed vanishing conditions, the Mayer-Vietoris rank bound and
// multiplication surjectivity.
std::vector<CheckOutcome> cross_validate(const BigradedModule& M, const Window& w);

// Mayer-Vietoris bound dim H^i_m <= dim H^i_x + dim H^i_y + dim H^{i+1}_{(x,y)} on the window.
CheckOutcome mayer_vietoris_check(const BigradedModule& M, const Window& w);

} // namespace bireg
