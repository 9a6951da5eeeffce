#pragma once

#include <json.hpp>

#include "ratcycle/enumeration.hpp"
#include "ratcycle/integrality.hpp"

namespace ratcycle {

using json = nlohmann::json;

// Big integers travel as decimal strings so 64-bit consumers never truncate;
// structural smalls (n, b, i) stay plain JSON numbers.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

// {"num": "<decimal>", "den": "<decimal>"}
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

// {"q": ..., "steps": [{"p": ..., "k": ...}, ...]}
json composition_to_json(const Composition& c);
Composition composition_from_json(const json& j);

// {"q", "n", "steps", "prodP", "D", "U", "x", "commonDen"}
json solution_to_json(const Composition& c, const CycleSolution& sol);

// {"alpha", "beta", "b", "certificate": {"D", "value"}}
json witness_to_json(const Composition& c, const Witness& w);

json record_to_json(const CycleRecord& rec);
std::string record_csv_header();
std::string record_to_csv(const CycleRecord& rec);

}  // namespace ratcycle
