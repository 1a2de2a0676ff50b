#include "ordvec/serialize.hpp"

#include "ordvec/error.hpp"

namespace ordvec::json {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<RVector> vectors_from_json(const json& j, std::size_t dim) {
  if (!j.is_array()) throw InvalidInput("expected an array of vectors");
  std::vector<RVector> out;
  for (const auto& v : j) out.push_back(vector_from_json(v, dim));
  return out;
}

json vectors_to_json(const std::vector<RVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

}  // namespace

json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(j.get<unsigned long long>());
    return Rational(j.get<long long>());
  }
  throw InvalidInput("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

json to_json(const RVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

RVector vector_from_json(const json& j, std::size_t dim) {
  if (!j.is_array()) throw InvalidInput("vector must be a JSON array, got " + j.dump());
  if (dim != 0) require_dim(j.size(), dim, "vector");
  std::vector<Rational> entries;
  entries.reserve(j.size());
  for (const auto& x : j) entries.push_back(rational_from_json(x));
  return RVector(std::move(entries));
}

json to_json(const Cone& k) {
  switch (k.kind()) {
    case Cone::Kind::Halfspace: {
      json rows = json::array();
      for (std::size_t r = 0; r < k.matrix().rows(); ++r) rows.push_back(to_json(k.matrix().row(r)));
      return {{"kind", "halfspace"}, {"matrix", rows}};
    }
    case Cone::Kind::Generators: return {{"kind", "generators"}, {"vectors", vectors_to_json(k.generator_list())}};
    case Cone::Kind::Lex2: return {{"kind", "lex2"}};
  }
  throw std::logic_error("unknown cone kind");
}

Cone cone_from_json(const json& j, std::size_t dim) {
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw InvalidInput("cone kind must be a string");
  const std::string name = kind.get<std::string>();
  if (name == "halfspace") {
    std::vector<RVector> rows = vectors_from_json(field(j, "matrix"), dim);
    return Cone::halfspace(RMatrix::from_rows(rows, dim), dim);
  }
  if (name == "generators") return Cone::generators(vectors_from_json(field(j, "vectors"), dim), dim);
  if (name == "lex2") {
    require_dim(dim, 2, "lexicographic cone dimension");
    return Cone::lex2();
  }
  throw InvalidInput("unknown cone kind \"" + name + "\"");
}

json to_json(const Instance& inst) {
  json out = {{"dimension", inst.space.dim()},
              {"cone", to_json(inst.space.cone())},
              {"M", vectors_to_json(inst.space.positive_set().vectors)}};
  if (!inst.vectors.empty()) out["vectors"] = vectors_to_json(inst.vectors);
  if (!inst.functionals.empty()) out["functionals"] = vectors_to_json(inst.functionals);
  if (inst.order_unit) out["order_unit"] = to_json(*inst.order_unit);
  return out;
}

Instance instance_from_json(const json& j) {
  const json& d = field(j, "dimension");
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) throw InvalidInput("dimension must be a positive integer");
  const std::size_t dim = d.get<std::size_t>();
  Cone cone = cone_from_json(field(j, "cone"), dim);
  PositiveSet m{vectors_from_json(field(j, "M"), dim)};
  Instance inst{MajorizedSpace(std::move(cone), std::move(m)), {}, {}, std::nullopt};
  if (j.contains("vectors")) inst.vectors = vectors_from_json(j["vectors"], dim);
  if (j.contains("functionals")) inst.functionals = vectors_from_json(j["functionals"], dim);
  if (j.contains("order_unit")) inst.order_unit = vector_from_json(j["order_unit"], dim);
  return inst;
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(j);
}

json to_json(const NormResult& r, bool with_witness) {
  json out = {{"value", r.value ? to_json(*r.value) : json("infinite")}, {"attained", r.attained}};
  if (with_witness && r.attained) out["witness"] = to_json(r.witness);
  return out;
}

json to_json(const CoherenceVerdict& v, bool with_multipliers) {
  if (!v.coherent) return {{"verdict", "incoherent"}, {"witness", to_json(v.witness)}};
  json out = {{"verdict", "coherent"}, {"phi", to_json(v.phi)}};
  if (with_multipliers && !v.multipliers.empty()) out["multipliers"] = to_json(v.multipliers);
  return out;
}

CoherenceVerdict verdict_from_json(const json& j) {
  const json& verdict = field(j, "verdict");
  CoherenceVerdict v;
  if (verdict == "incoherent") {
    v.witness = vector_from_json(field(j, "witness"));
  } else if (verdict == "coherent") {
    v.coherent = true;
    v.phi = vector_from_json(field(j, "phi"));
    if (j.contains("multipliers")) v.multipliers = vector_from_json(j["multipliers"]);
  } else {
    throw InvalidInput("verdict must be \"coherent\" or \"incoherent\"");
  }
  return v;
}

}  // namespace ordvec::json
