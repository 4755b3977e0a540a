#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "origami/origami.hpp"

namespace origami {

// Insertion-ordered JSON so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// JSON form: {"n": 8, "h": [...0-based images...], "v": [...], "name": "..."}.
// "name" is optional on input and omitted on output when empty.
Json origami_to_json(const Origami& o);
Origami origami_from_json(const Json& j);

// Text form, cycles with 1-based labels:  h=(1,2)(3); v=(1,3)(2)
// Fixed squares are written as singleton cycles, so the largest label
// always appears and the square count round-trips exactly.
std::string origami_to_text(const Origami& o);
Origami origami_from_text(const std::string& text);

std::string permutation_to_cycle_text(const Permutation& p);
Permutation permutation_from_cycle_text(const std::string& text, int n_hint = 0);

} // namespace origami
