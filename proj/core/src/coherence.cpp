#include "ordvec/coherence.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordvec/error.hpp"

namespace ordvec {

namespace {

// t with t_hi = s, t_lo = -(s + 1): sum t = -1 and
// s * c_hi - (s + 1) * c_lo = c_hi - c_lo > 0 for the chosen s.
RVector spread_witness(std::size_t n, std::size_t hi, std::size_t lo, const Rational& c_hi, const Rational& c_lo) {
  Rational s = c_lo / (c_hi - c_lo) + 1;
  RVector t(n);
  t[hi] = s;
  t[lo] = -(s + 1);
  return t;
}

CoherenceVerdict check_coherent_lex2(const MajorizedSpace& s) {
  const auto& m = s.positive_set();
  CoherenceVerdict v;
  // Decide on the first coordinates, or on the second ones when every
  // first coordinate vanishes.
  std::size_t axis = 0;
  bool all_zero = std::all_of(m.vectors.begin(), m.vectors.end(), [](const RVector& x) { return x[0].is_zero(); });
  if (all_zero) axis = 1;
  std::size_t hi = 0, lo = 0;
  for (std::size_t j = 1; j < m.size(); ++j) {
    if (m[j][axis] > m[hi][axis]) hi = j;
    if (m[j][axis] < m[lo][axis]) lo = j;
  }
  if (m[hi][axis] != m[lo][axis]) {
    v.coherent = false;
    v.witness = spread_witness(m.size(), hi, lo, m[hi][axis], m[lo][axis]);
    return v;
  }
  v.coherent = true;
  v.phi = RVector(2);
  v.phi[axis] = inverse(m[0][axis]);
  return v;
}

CoherenceVerdict check_coherent_polyhedral(const MajorizedSpace& s) {
  const Cone& k = s.cone();
  lp::Builder b;
  std::size_t t0 = b.add_vars(s.size(), lp::Bound::Free);
  AffineExpr e(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      const Rational& mij = s.positive_set()[j][i];
      if (!mij.is_zero()) e.terms[i].emplace_back(t0 + j, mij);
    }
  }
  add_cone_constraint(b, k, e);
  const std::size_t sum_row = b.num_rows();
  b.add_geq(-RVector::constant(s.size(), 1), 1);  // sum t <= -1
  lp::LpSolution sol = lp::solve(b.build());

  CoherenceVerdict v;
  if (sol.status != lp::Status::Infeasible) {
    v.coherent = false;
    v.witness = RVector(std::vector<Rational>(sol.point.begin(), sol.point.begin() + static_cast<std::ptrdiff_t>(s.size())));
    return v;
  }

  // Farkas multipliers y >= 0 with y^T b = 1; b is zero except on the sum
  // row, so its multiplier mu equals 1 and phi needs no rescaling.
  const RVector& y = sol.farkas;
  const Rational& mu = y[sum_row];
  v.coherent = true;
  v.phi = RVector(s.dim());
  if (k.kind() == Cone::Kind::Halfspace) {
    const RMatrix& a = k.matrix();
    v.multipliers = RVector(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) v.multipliers[r] = y[r] / mu;
    v.phi = a.transpose() * v.multipliers;
  } else {
    // Equality rows come in (+, -) pairs per coordinate.
    for (std::size_t i = 0; i < s.dim(); ++i) v.phi[i] = (y[2 * i] - y[2 * i + 1]) / mu;
  }
  return v;
}

}  // namespace

CoherenceVerdict check_coherent(const MajorizedSpace& s) {
  CoherenceVerdict v = s.cone().is_closed_polyhedral() ? check_coherent_polyhedral(s) : check_coherent_lex2(s);
  if (!verify_verdict(s, v)) throw std::logic_error("coherence certificate failed re-verification");
  return v;
}

bool verify_incoherence_witness(const MajorizedSpace& s, const RVector& t) {
  require_dim(t.dim(), s.size(), "incoherence witness");
  return t.sum().sign() < 0 && cone_contains(s.cone(), s.combination(t));
}

namespace {

bool constant_one_on_m(const MajorizedSpace& s, const RVector& phi) {
  if (phi.dim() != s.dim()) return false;
  return std::all_of(s.positive_set().vectors.begin(), s.positive_set().vectors.end(),
                     [&](const RVector& m) { return dot(phi, m) == Rational(1); });
}

}  // namespace

bool verify_coherence_certificate(const MajorizedSpace& s, const RVector& phi) {
  if (!constant_one_on_m(s, phi)) return false;
  if (s.cone().kind() == Cone::Kind::Lex2) {
    const auto& m = s.positive_set().vectors;
    bool full = std::any_of(m.begin(), m.end(), [](const RVector& x) { return x[0].sign() > 0; });
    // E_M is the whole plane when some m has a positive first coordinate,
    // otherwise the second axis.
    return full ? in_dual_cone(s.cone(), phi) : phi[1].sign() >= 0;
  }
  return in_dual_cone(s.cone(), phi);
}

bool verify_coherence_certificate(const MajorizedSpace& s, const RVector& phi, const RVector& multipliers) {
  if (s.cone().kind() != Cone::Kind::Halfspace) return verify_coherence_certificate(s, phi);
  if (!constant_one_on_m(s, phi)) return false;
  const RMatrix& a = s.cone().matrix();
  if (multipliers.dim() != a.rows() || !multipliers.nonnegative()) return false;
  return a.transpose() * multipliers == phi;
}

bool verify_verdict(const MajorizedSpace& s, const CoherenceVerdict& v) {
  if (!v.coherent) return verify_incoherence_witness(s, v.witness);
  if (!v.multipliers.empty()) return verify_coherence_certificate(s, v.phi, v.multipliers);
  return verify_coherence_certificate(s, v.phi);
}

bool AdditivityReport::pass() const {
  if (coherent) return std::all_of(rows.begin(), rows.end(), [](const AdditivityRow& r) { return r.additive(); });
  return std::any_of(rows.begin(), rows.end(), [](const AdditivityRow& r) { return r.pm < r.sum; });
}

AdditivityReport additivity_check(const MajorizedSpace& s, const std::vector<RVector>& samples) {
  CoherenceVerdict verdict = check_coherent(s);
  AdditivityReport rep;
  rep.coherent = verdict.coherent;
  auto probe = [&](const RVector& t, bool from_witness) {
    require_dim(t.dim(), s.size(), "additivity probe");
    if (!t.nonnegative()) throw InvalidInput("additivity probes must be nonnegative");
    AdditivityRow row;
    row.t = t;
    row.sum = t.sum();
    row.pm = *norm_p(s, s.combination(t)).value;
    row.from_witness = from_witness;
    rep.rows.push_back(std::move(row));
  };
  for (const auto& t : samples) probe(t, false);
  if (!verdict.coherent) {
    // sum t+ m >= sum t- m with sum t- > sum t+, hence
    // p_M(sum t- m) <= sum t+ < sum t-.
    RVector neg(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (verdict.witness[j].sign() < 0) neg[j] = -verdict.witness[j];
    }
    probe(neg, true);
  }
  return rep;
}

bool EmbeddingReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const EmbeddingRow& r) { return r.ok(); });
}

EmbeddingReport embedding_check(const MajorizedSpace& s, const std::vector<std::pair<RVector, RVector>>& pairs) {
  CoherenceVerdict verdict = check_coherent(s);
  if (!verdict.coherent) throw PreconditionViolation("embedding_check requires a coherent positive set");
  EmbeddingReport rep;
  rep.phi = verdict.phi;
  for (const auto& [t, u] : pairs) {
    require_dim(t.dim(), s.size(), "embedding coefficients");
    require_dim(u.dim(), s.size(), "embedding coefficients");
    if (!t.nonnegative() || !u.nonnegative()) throw InvalidInput("embedding coefficients must be nonnegative");
    RVector it = s.combination(t);
    RVector iu = s.combination(u);
    EmbeddingRow row;
    row.images_equal = it == iu;
    row.sums_equal = t.sum() == u.sum() && dot(verdict.phi, it) == t.sum() && dot(verdict.phi, iu) == u.sum();
    row.isometric = *norm_p(s, it).value == t.l1() && *norm_p(s, iu).value == u.l1();
    rep.rows.push_back(row);
  }
  return rep;
}

PairScanReport pair_coherence_scan(const Cone& k, const std::vector<std::pair<RVector, RVector>>& pairs,
                                   bool normalize) {
  PairScanReport rep;
  rep.archimedean = k.is_closed_polyhedral();
  if (normalize && !rep.archimedean) throw PreconditionViolation("pair normalization needs a closed cone");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    RVector v = pairs[i].first;
    RVector w = pairs[i].second;
    if (v.is_zero() || w.is_zero()) throw InvalidInput("pair_coherence_scan: vectors must be nonzero");
    if (normalize) {
      RVector u = v + w;
      v *= inverse(*order_unit_norm(k, u, v));
      w *= inverse(*order_unit_norm(k, u, w));
    }
    MajorizedSpace s(k, PositiveSet{{v, w}});
    rep.verdicts.push_back(check_coherent(s));
    if (!rep.verdicts.back().coherent) rep.incoherent.push_back(i);
  }
  return rep;
}

}  // namespace ordvec
