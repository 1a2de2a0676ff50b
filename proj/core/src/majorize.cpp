#include "ordvec/majorize.hpp"

#include <stdexcept>

#include "ordvec/error.hpp"

namespace ordvec {

MajorizedSpace::MajorizedSpace(Cone cone, PositiveSet m) : cone_(std::move(cone)), m_(std::move(m)) {
  if (!is_proper(cone_)) throw InvalidInput("ambient cone is not proper");
  PositiveSetReport rep = validate_positive_set(cone_, m_);
  if (!rep.ok()) throw InvalidInput("invalid positive set: " + rep.message());
}

RVector MajorizedSpace::combination(const RVector& t) const { return combine(m_.vectors, t, dim()); }

RVector MajorizedSpace::sum_of_m() const { return combination(RVector::constant(size(), 1)); }

namespace {

// sum_j t_j m_j + sign * v over LP variables t0 .. t0+|M|-1.
AffineExpr combination_expr(const MajorizedSpace& s, std::size_t t0, int sign, const RVector& v) {
  AffineExpr e(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      const Rational& mij = s.positive_set()[j][i];
      if (!mij.is_zero()) e.terms[i].emplace_back(t0 + j, mij);
    }
    e.constant[i] = sign < 0 ? -v[i] : v[i];
  }
  return e;
}

RVector head(const RVector& x, std::size_t n) {
  return RVector(std::vector<Rational>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n)));
}

lp::Builder norm_program(const MajorizedSpace& s, const RVector& v) {
  lp::Builder b;
  std::size_t t0 = b.add_vars(s.size(), lp::Bound::NonNegative, 1);
  add_cone_constraint(b, s.cone(), combination_expr(s, t0, -1, v));
  add_cone_constraint(b, s.cone(), combination_expr(s, t0, +1, v));
  return b;
}

}  // namespace

bool in_ideal(const MajorizedSpace& s, const RVector& v) {
  require_dim(v.dim(), s.dim(), "in_ideal");
  if (!s.cone().is_closed_polyhedral()) return norm_p_lex2(s.positive_set(), v).finite();
  if (v.is_zero()) return true;
  return lp::solve(norm_program(s, v).build()).status != lp::Status::Infeasible;
}

NormResult norm_p(const MajorizedSpace& s, const RVector& v) {
  require_dim(v.dim(), s.dim(), "norm_p");
  if (!s.cone().is_closed_polyhedral()) return norm_p_lex2(s.positive_set(), v);
  lp::LpSolution sol = lp::solve(norm_program(s, v).build());
  NormResult r;
  if (sol.status == lp::Status::Infeasible) return r;
  if (sol.status == lp::Status::Unbounded) {
    throw std::logic_error("norm LP unbounded below; objective sum t_j with t >= 0 cannot be");
  }
  r.value = sol.value;
  r.attained = true;
  r.witness = head(sol.point, s.size());
  if (!verify_norm_witness(s, v, r)) throw std::logic_error("norm_p witness failed re-verification");
  return r;
}

NormResult norm_p_lex2(const PositiveSet& m, const RVector& v) {
  require_dim(v.dim(), 2, "norm_p_lex2");
  for (const auto& mj : m.vectors) {
    require_dim(mj.dim(), 2, "norm_p_lex2 positive set");
    if (mj.is_zero() || !lex_nonnegative(mj)) {
      throw PreconditionViolation("norm_p_lex2: every element of M must be lex-positive");
    }
  }
  const Rational& v1 = v[0];
  const Rational& v2 = v[1];
  NormResult r;
  r.witness = RVector();

  Rational amax;
  for (const auto& mj : m.vectors) amax = std::max(amax, mj[0]);

  if (amax.is_zero()) {
    // Every m_j = (0, b_j) with b_j > 0: C_M is the upper half of the
    // second axis, so only v with v1 = 0 are majorized.
    if (!v1.is_zero()) return r;
    std::size_t best = 0;
    for (std::size_t j = 1; j < m.size(); ++j) {
      if (m[j][1] > m[best][1]) best = j;
    }
    r.value = abs(v2) / m[best][1];
    r.attained = true;
    r.witness = RVector(m.size());
    r.witness[best] = *r.value;
    return r;
  }

  // Some first coordinate is positive. Any t with sum_j t_j a_j > |v1| is
  // feasible, so the infimum is |v1| / amax; attainment needs the boundary
  // case sum_j t_j a_j = |v1| to satisfy the second-coordinate condition.
  const Rational tau = abs(v1) / amax;
  r.value = tau;
  if (v1.is_zero()) {
    r.attained = v2.is_zero();
    if (r.attained) r.witness = RVector(m.size());
    return r;
  }
  std::size_t best = m.size();
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j][0] != amax) continue;
    if (best == m.size() || m[j][1] > m[best][1]) best = j;
  }
  const Rational need = v1.sign() > 0 ? v2 : -v2;
  if (tau * m[best][1] >= need) {
    r.attained = true;
    r.witness = RVector(m.size());
    r.witness[best] = tau;
  }
  return r;
}

bool verify_norm_witness(const MajorizedSpace& s, const RVector& v, const NormResult& r) {
  if (!r.finite() || !r.attained) return false;
  if (r.witness.dim() != s.size() || !r.witness.nonnegative()) return false;
  if (r.witness.sum() != *r.value) return false;
  RVector c = s.combination(r.witness);
  return leq(s.cone(), v, c) && leq(s.cone(), -v, c);
}

std::optional<Rational> order_unit_norm(const Cone& k, const RVector& u, const RVector& v) {
  require_dim(u.dim(), k.dim(), "order_unit_norm unit");
  require_dim(v.dim(), k.dim(), "order_unit_norm vector");
  if (!k.is_closed_polyhedral()) throw PreconditionViolation("order_unit_norm needs a closed polyhedral cone");
  if (u.is_zero() || !cone_contains(k, u)) throw PreconditionViolation("order unit must be a nonzero element of the cone");
  lp::Builder b;
  std::size_t t = b.add_var(lp::Bound::NonNegative, 1);
  for (int sign : {-1, 1}) {
    AffineExpr e(k.dim());
    for (std::size_t i = 0; i < k.dim(); ++i) {
      if (!u[i].is_zero()) e.terms[i].emplace_back(t, u[i]);
      e.constant[i] = sign < 0 ? -v[i] : v[i];
    }
    add_cone_constraint(b, k, e);
  }
  lp::LpSolution sol = lp::solve(b.build());
  if (sol.status != lp::Status::Optimal) return std::nullopt;
  return sol.value;
}

std::optional<Rational> domination_constant(const MajorizedSpace& s, const RVector& u) {
  Rational c;
  for (const auto& m : s.positive_set().vectors) {
    auto n = order_unit_norm(s.cone(), u, m);
    if (!n) return std::nullopt;
    c = std::max(c, *n);
  }
  return c;
}

ChainReport principal_ideal_identity_check(const MajorizedSpace& s, const std::vector<RVector>& samples) {
  if (!s.cone().is_closed_polyhedral()) {
    throw PreconditionViolation("principal ideal chain needs an Archimedean (closed polyhedral) cone");
  }
  ChainReport rep;
  rep.unit = s.sum_of_m();
  rep.pm_unit = *norm_p(s, rep.unit).value;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    ChainRow row;
    NormResult pm = norm_p(s, samples[i]);
    row.pm = pm.value;
    if (!pm.finite()) {
      row.outcome = ChainRow::Outcome::OutsideIdeal;
      if (!rep.first_outside) rep.first_outside = i;
    } else {
      row.unit_norm = order_unit_norm(s.cone(), rep.unit, samples[i]);
      bool holds = row.unit_norm && *row.unit_norm <= *row.pm && *row.pm <= rep.pm_unit * *row.unit_norm;
      row.outcome = holds ? ChainRow::Outcome::Holds : ChainRow::Outcome::Violated;
      if (!holds && !rep.first_violation) rep.first_violation = i;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::optional<RVector> base_representation(const MajorizedSpace& s, const RVector& c) {
  require_dim(c.dim(), s.dim(), "base_representation");
  lp::Builder b;
  std::size_t t0 = b.add_vars(s.size(), lp::Bound::NonNegative);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    std::vector<std::pair<std::size_t, Rational>> row;
    for (std::size_t j = 0; j < s.size(); ++j) row.emplace_back(t0 + j, s.positive_set()[j][i]);
    b.add_eq(row, c[i]);
  }
  lp::LpSolution sol = lp::solve(b.build());
  if (sol.status == lp::Status::Infeasible) return std::nullopt;
  return head(sol.point, s.size());
}

}  // namespace ordvec
