#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bireg/local_cohomology.hpp"
#include "bireg/regularity.hpp"

namespace bireg {

struct InputDocument {
    Ring ring;
    Presentation module;
    // "ideal" or "module"
    std::string kind;
    std::vector<Polynomial> ideal_gens;
};

// Line-oriented input:
//   ring field=<q|prime> m=<int> n=<int>
//   ideal: f1; f2; ...
//   module: gens=(a1,b1),(a2,b2),... rels: <poly>*e1 + <poly>*e2; ...
// '#' starts a comment; statements may continue on following lines.
InputDocument parse_input(const std::string& text);

Polynomial parse_polynomial(const Ring& ring, const std::string& text);

// The ideal as a module: generators the f_i, relations their syzygies.
Presentation ideal_presentation(const Ring& ring, const std::vector<Polynomial>& gens);

nlohmann::json ring_json(const Ring& ring);
nlohmann::json betti_json(const BettiTable& b);
BettiTable betti_from_json(const nlohmann::json& j);
nlohmann::json frontier_json(const Frontier& f);
nlohmann::json verdict_json(const RegularityVerdict& v);
nlohmann::json grid_json(const LcGrid& g);

std::string render_frontier(const Frontier& f);
std::string render_verdict(const RegularityVerdict& v);

} // namespace bireg
