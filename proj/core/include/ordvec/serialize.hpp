#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordvec/coherence.hpp"
#include "ordvec/functionals.hpp"
#include "ordvec/majorize.hpp"

namespace ordvec::json {

using nlohmann::json;

// Rationals are written as strings ("3", "-3/7"); strings and bare integers
// are accepted on input. Every parse failure throws InvalidInput.

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const RVector& v);
/// `dim` of 0 accepts any length.
RVector vector_from_json(const json& j, std::size_t dim = 0);

json to_json(const Cone& k);
Cone cone_from_json(const json& j, std::size_t dim);

struct Instance {
  MajorizedSpace space;
  std::vector<RVector> vectors;
  std::vector<Functional> functionals;
  std::optional<RVector> order_unit;

  friend bool operator==(const Instance&, const Instance&) = default;
};

json to_json(const Instance& inst);
Instance instance_from_json(const json& j);
Instance parse_instance(const std::string& text);

json to_json(const NormResult& r, bool with_witness);

/// Incoherent: {"verdict":"incoherent","witness":[...]}.
/// Coherent: {"verdict":"coherent","phi":[...]} plus "multipliers" when
/// requested and available.
json to_json(const CoherenceVerdict& v, bool with_multipliers);
CoherenceVerdict verdict_from_json(const json& j);

}  // namespace ordvec::json
