#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ordvec/linalg.hpp"

namespace ordvec::lp {

enum class Bound { Free, NonNegative };

/// minimize objective . x  subject to  A x >= b, with per-variable bounds.
struct LinearProgram {
  RVector objective;
  RMatrix a;
  RVector b;
  std::vector<Bound> bounds;

  [[nodiscard]] std::size_t num_vars() const { return objective.dim(); }
  [[nodiscard]] std::size_t num_rows() const { return a.rows(); }
  /// Throws DimensionMismatch unless all four parts agree.
  void check() const;
};

enum class Status { Optimal, Infeasible, Unbounded };
std::string to_string(Status s);

/// Result of a solve. Which fields are populated depends on `status`:
///  - Optimal: point, value, duals (y >= 0 with y^T A = c on free variables,
///    y^T A <= c on nonnegative ones, and y^T b = value).
///  - Infeasible: farkas (y >= 0, y^T A = 0 on free, <= 0 on nonnegative
///    variables, y^T b > 0), scaled so that y^T b = 1.
///  - Unbounded: point (feasible) and ray (A d >= 0, d >= 0 on nonnegative
///    variables, objective . d < 0).
struct LpSolution {
  Status status = Status::Infeasible;
  RVector point;
  Rational value;
  RVector duals;
  RVector farkas;
  RVector ray;
};

/// Two-phase primal simplex over exact rationals with Bland's rule.
///
/// With a closed polyhedral feasible region the minimum, when finite, is
/// attained at a basic solution, so every infimum that reduces to such an LP
/// is returned as an exact minimum.
LpSolution solve(const LinearProgram& lp);

/// Exhaustive oracle: enumerates every subset of active constraints of full
/// rank, keeps the feasible basic points and returns the best one. Detects
/// unboundedness through the extreme directions of the recession cone.
/// Reports status, point and value only (no certificates).
/// Limited to at most 8 variables and 12 rows.
LpSolution brute_force_solve(const LinearProgram& lp);

/// Re-checks every invariant of `sol` against `lp` by direct substitution.
bool verify_solution(const LinearProgram& lp, const LpSolution& sol);

/// Incremental construction of LinearPrograms. Variables can be added after
/// rows; earlier rows are zero-padded.
class Builder {
 public:
  std::size_t add_var(Bound bound, const Rational& cost = 0);
  std::size_t add_vars(std::size_t count, Bound bound, const Rational& cost = 0);
  [[nodiscard]] std::size_t num_vars() const { return bounds_.size(); }

  void set_cost(std::size_t var, const Rational& cost);

  /// sum_k coeffs[k] * x[vars[k]] >= rhs
  void add_geq(const std::vector<std::pair<std::size_t, Rational>>& terms, const Rational& rhs);
  /// Dense form over the first `coeffs.dim()` variables.
  void add_geq(const RVector& coeffs, const Rational& rhs);
  void add_eq(const RVector& coeffs, const Rational& rhs);
  void add_eq(const std::vector<std::pair<std::size_t, Rational>>& terms, const Rational& rhs);

  [[nodiscard]] std::size_t num_rows() const { return rows_.size(); }
  [[nodiscard]] LinearProgram build() const;

 private:
  std::vector<Bound> bounds_;
  std::vector<Rational> costs_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows_;
  std::vector<Rational> rhs_;
};

}  // namespace ordvec::lp
