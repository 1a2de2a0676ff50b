#include "ordvec/functionals.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordvec/error.hpp"

namespace ordvec {

namespace {

struct BallLp {
  lp::Builder builder;
  std::size_t v0 = 0;
};

// Variables (v free, t >= 0) with sum t <= 1 and sum t m -+ v in K.
BallLp unit_ball(const MajorizedSpace& s) {
  if (!s.cone().is_closed_polyhedral()) {
    throw PreconditionViolation("unit-ball LPs require a closed polyhedral cone");
  }
  BallLp ball;
  auto& b = ball.builder;
  ball.v0 = b.add_vars(s.dim(), lp::Bound::Free);
  std::size_t t0 = b.add_vars(s.size(), lp::Bound::NonNegative);
  std::vector<std::pair<std::size_t, Rational>> budget;
  for (std::size_t j = 0; j < s.size(); ++j) budget.emplace_back(t0 + j, -1);
  b.add_geq(budget, -1);
  for (int sign : {-1, 1}) {
    AffineExpr e(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
      e.terms[i].emplace_back(ball.v0 + i, sign);
      for (std::size_t j = 0; j < s.size(); ++j) {
        const Rational& mij = s.positive_set()[j][i];
        if (!mij.is_zero()) e.terms[i].emplace_back(t0 + j, mij);
      }
    }
    add_cone_constraint(b, s.cone(), e);
  }
  return ball;
}

Rational minimize_over_ball(BallLp& ball, const Functional& psi) {
  for (std::size_t i = 0; i < psi.dim(); ++i) ball.builder.set_cost(ball.v0 + i, psi[i]);
  lp::LinearProgram prog = ball.builder.build();
  lp::LpSolution sol = lp::solve(prog);
  if (sol.status != lp::Status::Optimal) {
    throw std::logic_error("unit-ball LP not optimal: " + lp::to_string(sol.status));
  }
  if (!lp::verify_solution(prog, sol)) throw std::logic_error("unit-ball LP certificate failed verification");
  return sol.value;
}

}  // namespace

Rational op_norm(const MajorizedSpace& s, const Functional& psi) {
  require_dim(psi.dim(), s.dim(), "functional");
  BallLp ball = unit_ball(s);
  return -minimize_over_ball(ball, -psi);
}

Rational sup_over_m(const Functional& psi, const PositiveSet& m) {
  if (m.size() == 0) throw InvalidInput("sup_over_m: empty positive set");
  Rational best = dot(psi, m[0]);
  for (std::size_t j = 1; j < m.size(); ++j) best = std::max(best, dot(psi, m[j]));
  return best;
}

bool is_positive_on_ideal(const MajorizedSpace& s, const Functional& psi) {
  require_dim(psi.dim(), s.dim(), "functional");
  BallLp ball = unit_ball(s);
  AffineExpr v(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) v.terms[i].emplace_back(ball.v0 + i, 1);
  add_cone_constraint(ball.builder, s.cone(), v);
  return minimize_over_ball(ball, psi).sign() >= 0;
}

bool ContinuityReport::pass() const {
  return positive && std::all_of(rows.begin(), rows.end(), [](const ContinuityRow& r) { return r.ok(); });
}

ContinuityReport continuity_bound_check(const MajorizedSpace& s, const Functional& psi,
                                        const std::vector<RVector>& samples) {
  ContinuityReport rep;
  rep.positive = is_positive_on_ideal(s, psi);
  rep.bound = sup_over_m(psi, s.positive_set());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    ContinuityRow row;
    NormResult n = norm_p(s, samples[i]);
    row.lhs = abs(dot(psi, samples[i]));
    if (!n.finite()) {
      row.in_ideal = false;
      if (!rep.first_outside) rep.first_outside = i;
    } else {
      row.rhs = rep.bound * *n.value;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

std::optional<ModulusBound> modulus_bound_check(const MajorizedSpace& s, const Functional& psi) {
  if (!is_coordinate_cone(s.cone())) return std::nullopt;
  RVector mod(psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i) mod[i] = abs(psi[i]);
  return ModulusBound{op_norm(s, psi), sup_over_m(mod, s.positive_set())};
}

}  // namespace ordvec
