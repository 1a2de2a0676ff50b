#pragma once

#include <optional>
#include <vector>

#include "ordvec/majorize.hpp"

namespace ordvec {

/// A linear functional, acting on the ambient space by inner product.
using Functional = RVector;

/// max psi . v over the p_M unit ball { v : +-v <= sum t_j m_j, t >= 0, sum t <= 1 }.
/// Requires a closed polyhedral cone.
Rational op_norm(const MajorizedSpace& s, const Functional& psi);

/// max_j psi . m_j
Rational sup_over_m(const Functional& psi, const PositiveSet& m);

/// min psi . v over { v in K : p_M(v) <= 1 } is nonnegative.
bool is_positive_on_ideal(const MajorizedSpace& s, const Functional& psi);

struct ContinuityRow {
  bool in_ideal = true;
  Rational lhs;  // |psi . v|
  Rational rhs;  // sup_over_m(psi) * p_M(v)
  [[nodiscard]] bool ok() const { return in_ideal && lhs <= rhs; }
};

struct ContinuityReport {
  bool positive = false;  // precondition
  Rational bound;         // sup_over_m(psi)
  std::vector<ContinuityRow> rows;
  std::optional<std::size_t> first_outside;
  [[nodiscard]] bool pass() const;
};

/// |psi . v| <= sup_over_m(psi) p_M(v) on each sample. Samples outside E_M
/// are reported, not thrown.
ContinuityReport continuity_bound_check(const MajorizedSpace& s, const Functional& psi,
                                        const std::vector<RVector>& samples);

struct ModulusBound {
  Rational op;       // op_norm(psi)
  Rational modulus;  // max_j |psi| . m_j
  [[nodiscard]] bool holds() const { return op <= modulus; }
};

/// op_norm(psi) <= max_j |psi|(m_j), where |psi| is the componentwise
/// absolute value. Empty unless the cone is a coordinate cone.
std::optional<ModulusBound> modulus_bound_check(const MajorizedSpace& s, const Functional& psi);

}  // namespace ordvec
