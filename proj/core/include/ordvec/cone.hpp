#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ordvec/linalg.hpp"
#include "ordvec/lp.hpp"

namespace ordvec {

/// Ordering cone on R^dim.
///
/// Three representations are supported and each query uses the native one:
///  - halfspace:  { x : A x >= 0 }
///  - generators: all nonnegative combinations of a finite list
///  - lex2:       the lexicographic cone of R^2, {0} u { x : first nonzero coordinate > 0 }
class Cone {
 public:
  enum class Kind { Halfspace, Generators, Lex2 };

  static Cone halfspace(RMatrix a);
  /// An empty row set is allowed when `dim` is given (the whole space).
  static Cone halfspace(RMatrix a, std::size_t dim);
  static Cone generators(std::vector<RVector> gens, std::size_t dim);
  static Cone lex2();
  static Cone orthant(std::size_t dim);

  [[nodiscard]] Kind kind() const;
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] bool is_closed_polyhedral() const { return kind() != Kind::Lex2; }

  /// Throws PreconditionViolation unless kind() == Halfspace.
  [[nodiscard]] const RMatrix& matrix() const;
  /// Throws PreconditionViolation unless kind() == Generators.
  [[nodiscard]] const std::vector<RVector>& generator_list() const;

  friend bool operator==(const Cone&, const Cone&) = default;

 private:
  struct Halfspace { RMatrix a; bool operator==(const Halfspace&) const = default; };
  struct Generators { std::vector<RVector> g; bool operator==(const Generators&) const = default; };
  struct Lexicographic { bool operator==(const Lexicographic&) const = default; };

  Cone(std::variant<Halfspace, Generators, Lexicographic> rep, std::size_t dim)
      : rep_(std::move(rep)), dim_(dim) {}

  std::variant<Halfspace, Generators, Lexicographic> rep_;
  std::size_t dim_ = 0;
};

std::string to_string(Cone::Kind k);

/// The finite positive set M.
struct PositiveSet {
  std::vector<RVector> vectors;

  [[nodiscard]] std::size_t size() const { return vectors.size(); }
  const RVector& operator[](std::size_t j) const { return vectors[j]; }
  friend bool operator==(const PositiveSet&, const PositiveSet&) = default;
};

/// x = 0, or its first nonzero coordinate is positive.
bool lex_nonnegative(const RVector& x);

bool cone_contains(const Cone& k, const RVector& x);
/// x <= y in the order induced by k.
bool leq(const Cone& k, const RVector& x, const RVector& y);
/// k n (-k) = {0}.
bool is_proper(const Cone& k);

/// Membership of a covector in the dual cone K* = { phi : phi . x >= 0 for x in K }.
/// For halfspace cones `multipliers` (if given) receives lambda >= 0 with
/// phi = A^T lambda.
bool in_dual_cone(const Cone& k, const RVector& phi, RVector* multipliers = nullptr);

/// True for cones that are literally a coordinate orthant: halfspace rows
/// that are positive multiples of distinct unit vectors covering every
/// coordinate, or generators of that form.
bool is_coordinate_cone(const Cone& k);

struct PositiveSetReport {
  enum class Issue { None, Empty, DimensionMismatch, NotInCone, ZeroInHull };
  Issue issue = Issue::None;
  /// Offending vector for DimensionMismatch / NotInCone.
  std::size_t index = 0;
  /// Convex weights with sum_j w_j m_j = 0 for ZeroInHull.
  RVector weights;

  [[nodiscard]] bool ok() const { return issue == Issue::None; }
  [[nodiscard]] std::string message() const;
};

/// Checks that every m in M lies in K and that 0 is not a convex combination of M.
PositiveSetReport validate_positive_set(const Cone& k, const PositiveSet& m);

/// Ambient-valued affine expression in LP variables: coordinate i equals
/// sum of terms[i] plus constant[i].
struct AffineExpr {
  std::vector<std::vector<std::pair<std::size_t, Rational>>> terms;
  RVector constant;

  explicit AffineExpr(std::size_t dim) : terms(dim), constant(dim) {}
  [[nodiscard]] std::size_t dim() const { return constant.dim(); }
};

/// Adds constraints forcing `expr` into K: A expr >= 0 rows for halfspace
/// cones, auxiliary generator multipliers for generator cones. Lex2 is not
/// expressible and throws PreconditionViolation.
void add_cone_constraint(lp::Builder& builder, const Cone& k, const AffineExpr& expr);

}  // namespace ordvec
