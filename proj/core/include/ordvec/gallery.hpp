#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordvec/coherence.hpp"
#include "ordvec/functionals.hpp"
#include "ordvec/majorize.hpp"

namespace ordvec {

/// How an expected value was obtained.
enum class Basis { published_example, by_inspection, cross_checked };

std::string to_string(Basis b);

struct Expectation {
  std::string claim;
  Basis basis = Basis::by_inspection;
  std::function<bool(const MajorizedSpace&)> check;
};

struct GalleryInstance {
  std::string name;
  MajorizedSpace space;
  std::vector<Expectation> expectations;
  /// Optional coordinate names (free-group words for the ball instances).
  std::vector<std::string> labels;
  std::vector<RVector> vectors;
  std::vector<Functional> functionals;

  /// Indices of failing expectations.
  [[nodiscard]] std::vector<std::size_t> failing() const;
};

/// Orthant in dimension n with M the unit vectors; p_M is the l1 norm.
GalleryInstance make_delta_instance(std::size_t n);

/// Reduced words of the free group on {a, b} of length <= radius, in
/// canonical order (length, then a < a^-1 < b < b^-1). Inverses are written
/// upper case, the identity as "e".
std::vector<std::string> free_group_ball(std::size_t radius);

/// Pointwise-ordered functions on the ball with M the restrictions of the
/// indicators of a^-1 A, b A and A, where A is the set of words starting
/// with a. Requires radius >= 2.
GalleryInstance make_f2_ball_instance(std::size_t radius);

/// The coefficients (1, -1, -1) certifying incoherence of the ball instance.
RVector f2_witness();

/// Lexicographic plane: "lex-single" with M = {(1,0)} and "lex-pair" with
/// M = {(1,1),(0,1)}.
std::vector<GalleryInstance> make_lex_instances();

std::vector<std::string> gallery_names();

/// Accepts every name in gallery_names() and also "delta-<n>" and
/// "f2-ball-<radius>" for other sizes. Throws InvalidInput on unknown names.
GalleryInstance make_gallery_instance(const std::string& name);

/// m_k for k = 1, 2, ...
using TruncationRule = std::function<RVector(std::size_t k)>;

/// m_k = e_k in the given dimension.
TruncationRule delta_rule(std::size_t dim);
/// m_k = e_1 + (1/k) e_2 in the plane.
TruncationRule tilted_rule();
/// m_k = e_1 + (k/(k+1)) e_2 in the plane.
TruncationRule approaching_rule();

struct TruncationResult {
  /// p_{M_k}(v) for k = 1..K; empty entries are infinite.
  std::vector<std::optional<Rational>> values;
  bool nonincreasing = true;
  /// First k (1-based) from which the sequence is constant, if it ends finite.
  std::optional<std::size_t> stable_from;
};

/// p_{M_k}(v) for M_k = {m_1, ..., m_k} in the orthant of dimension v.dim().
TruncationResult truncation_sequence(const TruncationRule& rule, std::size_t count, const RVector& v);

}  // namespace ordvec
