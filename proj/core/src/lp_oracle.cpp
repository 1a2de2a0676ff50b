#include <optional>

#include "ordvec/error.hpp"
#include "ordvec/lp.hpp"

namespace ordvec::lp {

namespace {

constexpr std::size_t kMaxOracleVars = 8;
constexpr std::size_t kMaxOracleRows = 12;

// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

RMatrix select_rows(const RMatrix& c, const std::vector<std::size_t>& idx) {
  RMatrix s(idx.size(), c.cols());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) s(i, j) = c(idx[i], j);
  return s;
}

bool satisfies(const RMatrix& c, const RVector& d, const RVector& x) {
  RVector cx = c * x;
  for (std::size_t i = 0; i < d.dim(); ++i) {
    if (cx[i] < d[i]) return false;
  }
  return true;
}

}  // namespace

LpSolution brute_force_solve(const LinearProgram& lp) {
  lp.check();
  const std::size_t n = lp.num_vars();
  if (n > kMaxOracleVars || lp.num_rows() > kMaxOracleRows) {
    throw InvalidInput("brute_force_solve: instance exceeds 8 variables or 12 rows");
  }

  // All inequalities, bounds included, as C x >= d.
  RMatrix c(0, n);
  std::vector<Rational> d;
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    c.append_row(lp.a.row(i));
    d.push_back(lp.b[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.bounds[j] == Bound::NonNegative) {
      c.append_row(RVector::unit(n, j));
      d.push_back(0);
    }
  }
  const RVector rhs(d);
  const std::size_t r = rank(c);

  LpSolution sol;
  std::optional<Rational> best;
  // Every nonempty polyhedron has a minimal face cut out by r independent
  // active constraints; with the objective orthogonal to the lineality space
  // the objective is constant on such a face.
  for_each_subset(c.rows(), r, [&](const std::vector<std::size_t>& idx) {
    RMatrix cs = select_rows(c, idx);
    RVector ds(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) ds[i] = rhs[idx[i]];
    LinearSolveResult res = solve_linear(cs, ds);
    if (res.status == LinearSolveResult::Status::NoSolution || res.rank != r) return;
    if (!satisfies(c, rhs, res.solution)) return;
    Rational v = dot(lp.objective, res.solution);
    if (!best || v < *best) {
      best = v;
      sol.point = res.solution;
    }
  });

  if (!best) {
    sol.status = Status::Infeasible;
    sol.point = RVector();
    return sol;
  }

  for (const RVector& l : null_space(c)) {
    if (!dot(lp.objective, l).is_zero()) {
      sol.status = Status::Unbounded;
      sol.ray = dot(lp.objective, l).sign() < 0 ? l : -l;
      return sol;
    }
  }

  if (r > 0) {
    bool unbounded = false;
    for_each_subset(c.rows(), r - 1, [&](const std::vector<std::size_t>& idx) {
      if (unbounded) return;
      RMatrix cs = select_rows(c, idx);
      if (rank(cs) != r - 1) return;
      for (const RVector& v : null_space(cs)) {
        RVector cv = c * v;
        if (cv.is_zero()) continue;
        for (const RVector& dir : {v, -v}) {
          if ((c * dir).nonnegative() && dot(lp.objective, dir).sign() < 0) {
            unbounded = true;
            sol.ray = dir;
            return;
          }
        }
        break;
      }
    });
    if (unbounded) {
      sol.status = Status::Unbounded;
      return sol;
    }
  }

  sol.status = Status::Optimal;
  sol.value = *best;
  return sol;
}

}  // namespace ordvec::lp
