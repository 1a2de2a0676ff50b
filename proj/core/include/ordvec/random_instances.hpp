#pragma once

#include <cstdint>
#include <random>

#include "ordvec/functionals.hpp"
#include "ordvec/lp.hpp"
#include "ordvec/majorize.hpp"

namespace ordvec {

/// Platform-independent sampler: draws are taken straight from mt19937_64
/// so that a seed reproduces the same instances everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  Sampler(std::uint64_t seed, std::uint64_t stream);

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  /// p/q with p uniform in [lo*q, hi*q] and q uniform in [1, max_den].
  Rational rational(long lo, long hi, long max_den = 1);
  bool coin() { return integer(0, 1) == 1; }
  RVector vector(std::size_t dim, long lo, long hi, long max_den = 1);

 private:
  std::mt19937_64 engine_;
};

struct InstanceBounds {
  std::size_t max_dim = 6;
  std::size_t max_m = 5;
  long entry = 4;
};

struct RandomInstance {
  MajorizedSpace space;
  /// Interior point of K, hence an order unit of the ambient space.
  RVector order_unit;
  /// A covector strictly positive on K \ {0}.
  Functional strictly_positive;
  bool coherent_by_construction = false;
};

/// Proper, full-dimensional closed polyhedral cone in the given dimension,
/// either as halfspaces or as generators. Also returns an interior point and
/// a strictly positive covector.
struct RandomCone {
  Cone cone;
  RVector interior;
  Functional strictly_positive;
};
RandomCone random_cone(Sampler& rng, std::size_t dim, long entry = 4);

/// Nonzero element of K.
RVector random_cone_element(Sampler& rng, const RandomCone& k, long entry = 4);

/// Random closed-cone instance within the bounds. With `coherent` the
/// elements of M are normalised to strictly_positive . m = 1.
RandomInstance random_instance(Sampler& rng, const InstanceBounds& bounds = {}, bool coherent = false);
/// Same, with |M| fixed.
RandomInstance random_instance_of_size(Sampler& rng, std::size_t m_size, const InstanceBounds& bounds = {},
                                       bool coherent = false);

/// Positive set in the lexicographic plane.
MajorizedSpace random_lex_instance(Sampler& rng, std::size_t max_m = 4, long entry = 4);

/// sum t_j m_j with random signed t, so always in E_M.
RVector random_in_ideal(Sampler& rng, const MajorizedSpace& s, long entry = 4);

/// A functional positive on E_M.
Functional random_positive_functional(Sampler& rng, const RandomInstance& inst);

/// <= 5 variables, <= 8 rows, entries in [-3, 3].
lp::LinearProgram random_lp(Sampler& rng);

}  // namespace ordvec
