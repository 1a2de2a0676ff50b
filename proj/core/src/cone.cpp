#include "ordvec/cone.hpp"

#include <map>

#include "ordvec/error.hpp"

namespace ordvec {

Cone Cone::halfspace(RMatrix a) {
  std::size_t d = a.cols();
  return Cone(Halfspace{std::move(a)}, d);
}

Cone Cone::halfspace(RMatrix a, std::size_t dim) {
  if (a.rows() == 0) return Cone(Halfspace{RMatrix(0, dim)}, dim);
  require_dim(a.cols(), dim, "halfspace cone matrix");
  return Cone(Halfspace{std::move(a)}, dim);
}

Cone Cone::generators(std::vector<RVector> gens, std::size_t dim) {
  for (const auto& g : gens) {
    require_dim(g.dim(), dim, "cone generator");
    if (g.is_zero()) throw InvalidInput("cone generators must be nonzero");
  }
  return Cone(Generators{std::move(gens)}, dim);
}

Cone Cone::lex2() { return Cone(Lexicographic{}, 2); }

Cone Cone::orthant(std::size_t dim) { return halfspace(RMatrix::identity(dim), dim); }

Cone::Kind Cone::kind() const {
  switch (rep_.index()) {
    case 0: return Kind::Halfspace;
    case 1: return Kind::Generators;
    default: return Kind::Lex2;
  }
}

const RMatrix& Cone::matrix() const {
  if (const auto* h = std::get_if<Halfspace>(&rep_)) return h->a;
  throw PreconditionViolation("cone is not in halfspace representation");
}

const std::vector<RVector>& Cone::generator_list() const {
  if (const auto* g = std::get_if<Generators>(&rep_)) return g->g;
  throw PreconditionViolation("cone is not in generator representation");
}

std::string to_string(Cone::Kind k) {
  switch (k) {
    case Cone::Kind::Halfspace: return "halfspace";
    case Cone::Kind::Generators: return "generators";
    case Cone::Kind::Lex2: return "lex2";
  }
  return "unknown";
}

bool lex_nonnegative(const RVector& x) {
  for (const auto& c : x) {
    if (!c.is_zero()) return c.sign() > 0;
  }
  return true;
}

bool cone_contains(const Cone& k, const RVector& x) {
  require_dim(x.dim(), k.dim(), "cone membership");
  switch (k.kind()) {
    case Cone::Kind::Halfspace:
      return (k.matrix() * x).nonnegative();
    case Cone::Kind::Lex2:
      return lex_nonnegative(x);
    case Cone::Kind::Generators: {
      if (x.is_zero()) return true;
      lp::Builder b;
      AffineExpr e(k.dim());
      e.constant = x;
      add_cone_constraint(b, k, e);
      return lp::solve(b.build()).status != lp::Status::Infeasible;
    }
  }
  return false;
}

bool leq(const Cone& k, const RVector& x, const RVector& y) {
  require_dim(x.dim(), k.dim(), "order comparison");
  return cone_contains(k, y - x);
}

bool is_proper(const Cone& k) {
  switch (k.kind()) {
    case Cone::Kind::Halfspace:
      return rank(k.matrix()) == k.dim();
    case Cone::Kind::Lex2:
      return true;
    case Cone::Kind::Generators: {
      // Not proper iff some w >= 0, w != 0 has G w = 0.
      const auto& gens = k.generator_list();
      if (gens.empty()) return true;
      lp::Builder b;
      std::size_t w0 = b.add_vars(gens.size(), lp::Bound::NonNegative);
      for (std::size_t i = 0; i < k.dim(); ++i) {
        std::vector<std::pair<std::size_t, Rational>> row;
        for (std::size_t j = 0; j < gens.size(); ++j) row.emplace_back(w0 + j, gens[j][i]);
        b.add_eq(row, 0);
      }
      b.add_geq(RVector::constant(gens.size(), 1), 1);
      return lp::solve(b.build()).status == lp::Status::Infeasible;
    }
  }
  return false;
}

bool in_dual_cone(const Cone& k, const RVector& phi, RVector* multipliers) {
  require_dim(phi.dim(), k.dim(), "dual cone membership");
  switch (k.kind()) {
    case Cone::Kind::Lex2:
      return phi[1].is_zero() && phi[0].sign() >= 0;
    case Cone::Kind::Generators:
      for (const auto& g : k.generator_list()) {
        if (dot(phi, g).sign() < 0) return false;
      }
      return true;
    case Cone::Kind::Halfspace: {
      const RMatrix& a = k.matrix();
      lp::Builder b;
      std::size_t l0 = b.add_vars(a.rows(), lp::Bound::NonNegative);
      for (std::size_t i = 0; i < k.dim(); ++i) {
        std::vector<std::pair<std::size_t, Rational>> row;
        for (std::size_t r = 0; r < a.rows(); ++r) row.emplace_back(l0 + r, a(r, i));
        b.add_eq(row, phi[i]);
      }
      lp::LpSolution sol = lp::solve(b.build());
      if (sol.status == lp::Status::Infeasible) return false;
      if (multipliers) *multipliers = sol.point;
      return true;
    }
  }
  return false;
}

namespace {

// Index of the single nonzero entry of v if it is positive.
std::optional<std::size_t> positive_unit_axis(std::span<const Rational> v) {
  std::optional<std::size_t> axis;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (axis || v[i].sign() < 0) return std::nullopt;
    axis = i;
  }
  return axis;
}

}  // namespace

bool is_coordinate_cone(const Cone& k) {
  std::vector<bool> seen(k.dim(), false);
  auto mark = [&](std::span<const Rational> v) {
    auto axis = positive_unit_axis(v);
    if (!axis) return false;
    seen[*axis] = true;
    return true;
  };
  switch (k.kind()) {
    case Cone::Kind::Lex2:
      return false;
    case Cone::Kind::Halfspace:
      for (std::size_t r = 0; r < k.matrix().rows(); ++r) {
        if (!mark(k.matrix().row_view(r))) return false;
      }
      break;
    case Cone::Kind::Generators:
      for (const auto& g : k.generator_list()) {
        if (!mark(g.view())) return false;
      }
      break;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string PositiveSetReport::message() const {
  switch (issue) {
    case Issue::None: return "ok";
    case Issue::Empty: return "positive set is empty";
    case Issue::DimensionMismatch: return "vector " + std::to_string(index) + " has the wrong dimension";
    case Issue::NotInCone: return "vector " + std::to_string(index) + " is not in the cone";
    case Issue::ZeroInHull: return "0 lies in the convex hull, weights " + weights.str();
  }
  return "unknown";
}

PositiveSetReport validate_positive_set(const Cone& k, const PositiveSet& m) {
  PositiveSetReport rep;
  if (m.size() == 0) {
    rep.issue = PositiveSetReport::Issue::Empty;
    return rep;
  }
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j].dim() != k.dim()) {
      rep.issue = PositiveSetReport::Issue::DimensionMismatch;
      rep.index = j;
      return rep;
    }
  }
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (!cone_contains(k, m[j])) {
      rep.issue = PositiveSetReport::Issue::NotInCone;
      rep.index = j;
      return rep;
    }
  }
  lp::Builder b;
  std::size_t w0 = b.add_vars(m.size(), lp::Bound::NonNegative);
  for (std::size_t i = 0; i < k.dim(); ++i) {
    std::vector<std::pair<std::size_t, Rational>> row;
    for (std::size_t j = 0; j < m.size(); ++j) row.emplace_back(w0 + j, m[j][i]);
    b.add_eq(row, 0);
  }
  b.add_eq(RVector::constant(m.size(), 1), 1);
  lp::LpSolution sol = lp::solve(b.build());
  if (sol.status != lp::Status::Infeasible) {
    rep.issue = PositiveSetReport::Issue::ZeroInHull;
    rep.weights = sol.point;
  }
  return rep;
}

void add_cone_constraint(lp::Builder& builder, const Cone& k, const AffineExpr& expr) {
  require_dim(expr.dim(), k.dim(), "cone constraint expression");
  switch (k.kind()) {
    case Cone::Kind::Lex2:
      throw PreconditionViolation("the lexicographic cone is not closed and cannot be posed as LP constraints");
    case Cone::Kind::Halfspace: {
      const RMatrix& a = k.matrix();
      for (std::size_t r = 0; r < a.rows(); ++r) {
        std::map<std::size_t, Rational> acc;
        Rational constant;
        for (std::size_t i = 0; i < k.dim(); ++i) {
          const Rational& air = a(r, i);
          if (air.is_zero()) continue;
          for (const auto& [v, c] : expr.terms[i]) acc[v] += air * c;
          constant += air * expr.constant[i];
        }
        std::vector<std::pair<std::size_t, Rational>> row(acc.begin(), acc.end());
        builder.add_geq(row, -constant);
      }
      return;
    }
    case Cone::Kind::Generators: {
      const auto& gens = k.generator_list();
      std::size_t s0 = builder.add_vars(gens.size(), lp::Bound::NonNegative);
      for (std::size_t i = 0; i < k.dim(); ++i) {
        std::vector<std::pair<std::size_t, Rational>> row = expr.terms[i];
        for (std::size_t g = 0; g < gens.size(); ++g) {
          if (!gens[g][i].is_zero()) row.emplace_back(s0 + g, -gens[g][i]);
        }
        builder.add_eq(row, -expr.constant[i]);
      }
      return;
    }
  }
}

}  // namespace ordvec
