#include "ordvec/random_instances.hpp"

#include <algorithm>

#include "ordvec/error.hpp"

namespace ordvec {

Sampler::Sampler(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

long Sampler::integer(long lo, long hi) {
  if (hi < lo) throw InvalidInput("Sampler::integer: empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational Sampler::rational(long lo, long hi, long max_den) {
  long q = integer(1, std::max(1L, max_den));
  return Rational(integer(lo * q, hi * q), q);
}

RVector Sampler::vector(std::size_t dim, long lo, long hi, long max_den) {
  RVector v(dim);
  for (auto& x : v) x = rational(lo, hi, max_den);
  return v;
}

namespace {

RVector nonzero_vector(Sampler& rng, std::size_t dim, long entry) {
  for (;;) {
    RVector v = rng.vector(dim, -entry, entry);
    if (!v.is_zero()) return v;
  }
}

// Vector whose inner product with `dir` is strictly positive.
RVector positive_against(Sampler& rng, const RVector& dir, long entry) {
  for (;;) {
    RVector v = rng.vector(dir.dim(), -entry, entry);
    if (dot(v, dir).sign() > 0) return v;
  }
}

}  // namespace

RandomCone random_cone(Sampler& rng, std::size_t dim, long entry) {
  if (dim == 0) throw InvalidInput("random_cone: dimension must be positive");
  const std::size_t count = dim + static_cast<std::size_t>(rng.integer(0, 2));
  RVector c = nonzero_vector(rng, dim, entry);
  std::vector<RVector> rows;
  do {
    rows.clear();
    for (std::size_t r = 0; r < count; ++r) rows.push_back(positive_against(rng, c, entry));
  } while (rank(RMatrix::from_rows(rows, dim)) != dim);

  RVector sum(dim);
  for (const auto& r : rows) sum += r;
  if (rng.coin()) {
    // { x : A x >= 0 } with A c > 0: c is interior, A^T 1 is positive on K \ {0}.
    return {Cone::halfspace(RMatrix::from_rows(rows, dim), dim), c, sum};
  }
  // Generators all strictly positive against c: c is positive on K \ {0},
  // and the generator sum is interior since the generators span.
  return {Cone::generators(rows, dim), sum, c};
}

RVector random_cone_element(Sampler& rng, const RandomCone& k, long entry) {
  const std::size_t dim = k.cone.dim();
  if (k.cone.kind() == Cone::Kind::Generators) {
    const auto& g = k.cone.generator_list();
    RVector x(dim);
    std::size_t picks = static_cast<std::size_t>(rng.integer(1, 2));
    for (std::size_t p = 0; p < picks; ++p) {
      x += g[static_cast<std::size_t>(rng.integer(0, static_cast<long>(g.size()) - 1))] * Rational(rng.integer(1, 3));
    }
    return x;
  }
  // Push a random point along the interior direction until it enters K;
  // stopping exactly at the boundary half of the time.
  const RMatrix& a = k.cone.matrix();
  for (;;) {
    RVector x = rng.vector(dim, -entry, entry);
    RVector ax = a * x;
    RVector ac = a * k.interior;
    Rational shift;
    for (std::size_t r = 0; r < a.rows(); ++r) shift = std::max(shift, -ax[r] / ac[r]);
    if (rng.coin()) shift += Rational(rng.integer(1, 2));
    RVector y = x + k.interior * shift;
    if (!y.is_zero()) return y;
  }
}

RandomInstance random_instance_of_size(Sampler& rng, std::size_t m_size, const InstanceBounds& bounds, bool coherent) {
  const auto dim = static_cast<std::size_t>(rng.integer(1, static_cast<long>(bounds.max_dim)));
  RandomCone k = random_cone(rng, dim, bounds.entry);
  PositiveSet m;
  for (std::size_t j = 0; j < m_size; ++j) {
    RVector x = random_cone_element(rng, k, bounds.entry);
    if (coherent) x *= inverse(dot(k.strictly_positive, x));
    m.vectors.push_back(std::move(x));
  }
  return {MajorizedSpace(k.cone, std::move(m)), k.interior, k.strictly_positive, coherent};
}

RandomInstance random_instance(Sampler& rng, const InstanceBounds& bounds, bool coherent) {
  auto m_size = static_cast<std::size_t>(rng.integer(1, static_cast<long>(bounds.max_m)));
  return random_instance_of_size(rng, m_size, bounds, coherent);
}

MajorizedSpace random_lex_instance(Sampler& rng, std::size_t max_m, long entry) {
  auto size = static_cast<std::size_t>(rng.integer(1, static_cast<long>(max_m)));
  PositiveSet m;
  // First coordinates drawn from a small range so that ties, and the
  // all-zero case, come up often.
  bool flat = rng.integer(0, 3) == 0;
  while (m.vectors.size() < size) {
    RVector x{flat ? 0 : rng.integer(0, 2), rng.integer(-entry, entry)};
    if (lex_nonnegative(x) && !x.is_zero()) m.vectors.push_back(std::move(x));
  }
  return MajorizedSpace(Cone::lex2(), std::move(m));
}

RVector random_in_ideal(Sampler& rng, const MajorizedSpace& s, long entry) {
  return s.combination(rng.vector(s.size(), -entry, entry, 3));
}

Functional random_positive_functional(Sampler& rng, const RandomInstance& inst) {
  const Cone& k = inst.space.cone();
  if (k.kind() == Cone::Kind::Halfspace) {
    // A^T lambda with lambda >= 0, never all zero.
    const RMatrix& a = k.matrix();
    RVector lambda = rng.vector(a.rows(), 0, 3);
    lambda[static_cast<std::size_t>(rng.integer(0, static_cast<long>(a.rows()) - 1))] += 1;
    return a.transpose() * lambda;
  }
  // Perturb the known positive covector and keep the perturbation when it
  // stays nonnegative on every generator.
  for (int attempt = 0; attempt < 8; ++attempt) {
    RVector psi = inst.strictly_positive * Rational(rng.integer(1, 3)) + rng.vector(k.dim(), -1, 1, 2);
    if (in_dual_cone(k, psi)) return psi;
  }
  return inst.strictly_positive;
}

lp::LinearProgram random_lp(Sampler& rng) {
  lp::LinearProgram prog;
  auto n = static_cast<std::size_t>(rng.integer(1, 5));
  auto m = static_cast<std::size_t>(rng.integer(0, 8));
  prog.objective = rng.vector(n, -3, 3);
  for (std::size_t j = 0; j < n; ++j) prog.bounds.push_back(rng.coin() ? lp::Bound::NonNegative : lp::Bound::Free);
  prog.a = RMatrix(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) prog.a(i, j) = Rational(rng.integer(-3, 3));
  }
  prog.b = rng.vector(m, -3, 3);
  return prog;
}

}  // namespace ordvec
