#pragma once

#include <optional>
#include <vector>

#include "ordvec/cone.hpp"
#include "ordvec/linalg.hpp"

namespace ordvec {

/// An ambient proper cone together with a finite positive set M: the space
/// E_M of vectors majorized by the cone C_M generated by M, with p_M.
class MajorizedSpace {
 public:
  /// Throws InvalidInput if the cone is not proper or M is not a valid
  /// positive set for it.
  MajorizedSpace(Cone cone, PositiveSet m);

  [[nodiscard]] const Cone& cone() const { return cone_; }
  [[nodiscard]] const PositiveSet& positive_set() const { return m_; }
  [[nodiscard]] std::size_t dim() const { return cone_.dim(); }
  [[nodiscard]] std::size_t size() const { return m_.size(); }

  /// sum_j t_j m_j
  [[nodiscard]] RVector combination(const RVector& t) const;
  /// u = sum_j m_j, an order unit of E_M.
  [[nodiscard]] RVector sum_of_m() const;

  friend bool operator==(const MajorizedSpace&, const MajorizedSpace&) = default;

 private:
  Cone cone_;
  PositiveSet m_;
};

/// Value of p_M (or of an order-unit norm). `value` is empty for +infinity.
/// For closed cones the value is always attained and `witness` holds the
/// coefficients t >= 0 over M realizing it; for the lexicographic plane the
/// infimum may be unattained, in which case `witness` is empty.
struct NormResult {
  std::optional<Rational> value;
  bool attained = false;
  RVector witness;

  [[nodiscard]] bool finite() const { return value.has_value(); }
};

/// Is v in E_M, i.e. +-v <= c for some c in C_M?
bool in_ideal(const MajorizedSpace& s, const RVector& v);

/// p_M(v) = inf { sum t_j : t >= 0, +-v <= sum t_j m_j }.
/// Lexicographic spaces are routed to norm_p_lex2.
NormResult norm_p(const MajorizedSpace& s, const RVector& v);

/// Exact infimum in the lexicographic plane by case analysis on first
/// coordinates; reports whether the infimum is attained.
NormResult norm_p_lex2(const PositiveSet& m, const RVector& v);

/// t >= 0, sum t = value and +-v <= sum t_j m_j, all exact.
bool verify_norm_witness(const MajorizedSpace& s, const RVector& v, const NormResult& r);

/// ||v||_u = min { t >= 0 : -t u <= v <= t u }; empty when no such t exists.
std::optional<Rational> order_unit_norm(const Cone& k, const RVector& u, const RVector& v);

/// max_j ||m_j||_u; empty if some m_j is not dominated by a multiple of u.
std::optional<Rational> domination_constant(const MajorizedSpace& s, const RVector& u);

struct ChainRow {
  enum class Outcome { Holds, Violated, OutsideIdeal };
  Outcome outcome = Outcome::Holds;
  std::optional<Rational> pm;         // p_M(v)
  std::optional<Rational> unit_norm;  // ||v||_u
};

/// Checks ||v||_u <= p_M(v) <= p_M(u) ||v||_u with u = sum_j m_j on every sample.
struct ChainReport {
  RVector unit;
  Rational pm_unit;
  std::vector<ChainRow> rows;
  std::optional<std::size_t> first_violation;
  std::optional<std::size_t> first_outside;

  [[nodiscard]] bool pass() const { return !first_violation && !first_outside; }
};

ChainReport principal_ideal_identity_check(const MajorizedSpace& s, const std::vector<RVector>& samples);

/// Some t >= 0 with c = sum_j t_j m_j, or empty when c is not in C_M.
std::optional<RVector> base_representation(const MajorizedSpace& s, const RVector& c);

}  // namespace ordvec
