#include "ordvec/lp.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "ordvec/error.hpp"

namespace ordvec::lp {

void LinearProgram::check() const {
  require_dim(a.cols(), objective.dim(), "LP constraint matrix columns");
  require_dim(b.dim(), a.rows(), "LP right-hand side");
  require_dim(bounds.size(), objective.dim(), "LP variable bounds");
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

// Rows after merging duplicates and dropping empty rows.
struct Presolved {
  std::vector<std::size_t> kept;             // original row index per kept row
  std::optional<std::size_t> empty_conflict;  // 0 >= b_i with b_i > 0
};

Presolved presolve(const LinearProgram& lp) {
  Presolved p;
  std::map<std::vector<Rational>, std::size_t, std::less<>> by_coeffs;
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    auto row = lp.a.row_view(i);
    bool zero = std::all_of(row.begin(), row.end(), [](const Rational& r) { return r.is_zero(); });
    if (zero) {
      if (lp.b[i].sign() > 0 && !p.empty_conflict) p.empty_conflict = i;
      continue;
    }
    std::vector<Rational> key(row.begin(), row.end());
    auto [it, inserted] = by_coeffs.emplace(std::move(key), p.kept.size());
    if (inserted) {
      p.kept.push_back(i);
    } else if (lp.b[i] > lp.b[p.kept[it->second]]) {
      // Same left-hand side; the larger right-hand side dominates.
      p.kept[it->second] = i;
    }
  }
  std::sort(p.kept.begin(), p.kept.end());
  return p;
}

class Tableau {
 public:
  Tableau(const LinearProgram& lp, const std::vector<std::size_t>& rows) : lp_(lp), rows_(rows) {
    const std::size_t m = rows.size();
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
      col_var_.push_back(j);
      col_sign_.push_back(1);
      if (lp.bounds[j] == Bound::Free) {
        col_var_.push_back(j);
        col_sign_.push_back(-1);
      }
    }
    nstruct_ = col_var_.size();
    flipped_.assign(m, false);
    std::size_t nart = 0;
    for (std::size_t i = 0; i < m; ++i) {
      flipped_[i] = lp.b[rows[i]].sign() <= 0;
      if (!flipped_[i]) ++nart;
    }
    art_begin_ = nstruct_ + m;
    ncols_ = art_begin_ + nart;
    t_.assign(m + 1, std::vector<Rational>(ncols_ + 1));
    basis_.assign(m, 0);
    init_basis_.assign(m, 0);
    std::size_t next_art = art_begin_;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational sigma = flipped_[i] ? Rational(-1) : Rational(1);
      auto src = lp.a.row_view(rows[i]);
      for (std::size_t c = 0; c < nstruct_; ++c) {
        const Rational& v = src[col_var_[c]];
        if (!v.is_zero()) t_[i][c] = sigma * Rational(col_sign_[c]) * v;
      }
      t_[i][nstruct_ + i] = -sigma;
      t_[i][ncols_] = sigma * lp.b[rows[i]];
      if (flipped_[i]) {
        basis_[i] = nstruct_ + i;
      } else {
        t_[i][next_art] = 1;
        basis_[i] = next_art++;
      }
      init_basis_[i] = basis_[i];
    }
  }

  [[nodiscard]] std::size_t rows() const { return basis_.size(); }
  [[nodiscard]] bool is_art(std::size_t c) const { return c >= art_begin_; }

  // Loads the objective row for the given column costs: reduced costs and the
  // negated objective value in the rhs cell.
  void load_costs(const std::vector<Rational>& cost) {
    cost_ = cost;
    auto& obj = t_.back();
    for (std::size_t c = 0; c <= ncols_; ++c) obj[c] = c < ncols_ ? cost[c] : Rational(0);
    for (std::size_t i = 0; i < rows(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t c = 0; c <= ncols_; ++c) {
        if (!t_[i][c].is_zero()) obj[c] -= cb * t_[i][c];
      }
    }
  }

  std::vector<Rational> phase1_costs() const {
    std::vector<Rational> c(ncols_);
    for (std::size_t k = art_begin_; k < ncols_; ++k) c[k] = 1;
    return c;
  }

  std::vector<Rational> phase2_costs() const {
    std::vector<Rational> c(ncols_);
    for (std::size_t k = 0; k < nstruct_; ++k) c[k] = Rational(col_sign_[k]) * lp_.objective[col_var_[k]];
    return c;
  }

  // Runs Bland's rule to optimality. Returns the entering column when an
  // unbounded direction is found.
  std::optional<std::size_t> run(bool allow_art) {
    for (;;) {
      const auto& obj = t_.back();
      std::optional<std::size_t> enter;
      for (std::size_t c = 0; c < ncols_; ++c) {
        if (!allow_art && is_art(c)) continue;
        if (obj[c].sign() < 0) {
          enter = c;
          break;
        }
      }
      if (!enter) return std::nullopt;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        const Rational& a = t_[i][*enter];
        if (a.sign() <= 0) continue;
        Rational ratio = t_[i][ncols_] / a;
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (!leave) return enter;
      pivot(*leave, *enter);
    }
  }

  // After a phase 1 with zero optimum, pivots remaining artificial variables
  // out of the basis wherever the row allows it.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows(); ++i) {
      if (!is_art(basis_[i])) continue;
      for (std::size_t c = 0; c < art_begin_; ++c) {
        if (!t_[i][c].is_zero()) {
          pivot(i, c);
          break;
        }
      }
    }
  }

  [[nodiscard]] Rational objective_value() const { return -t_.back()[ncols_]; }

  // Row multipliers y = c_B^T B^{-1}, mapped back to the original row
  // orientation (index = kept row).
  [[nodiscard]] RVector multipliers() const {
    RVector y(rows());
    const auto& obj = t_.back();
    for (std::size_t i = 0; i < rows(); ++i) {
      std::size_t k = init_basis_[i];
      Rational yi = cost_[k] - obj[k];
      y[i] = flipped_[i] ? -yi : yi;
    }
    return y;
  }

  [[nodiscard]] RVector point() const {
    RVector x(lp_.num_vars());
    for (std::size_t i = 0; i < rows(); ++i) {
      std::size_t c = basis_[i];
      if (c < nstruct_) x[col_var_[c]] += Rational(col_sign_[c]) * t_[i][ncols_];
    }
    return x;
  }

  [[nodiscard]] RVector ray(std::size_t enter) const {
    RVector d(lp_.num_vars());
    if (enter < nstruct_) d[col_var_[enter]] += Rational(col_sign_[enter]);
    for (std::size_t i = 0; i < rows(); ++i) {
      std::size_t c = basis_[i];
      if (c < nstruct_ && !t_[i][enter].is_zero()) {
        d[col_var_[c]] -= Rational(col_sign_[c]) * t_[i][enter];
      }
    }
    return d;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    auto& prow = t_[r];
    const Rational inv = inverse(prow[c]);
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= ncols_; ++j) {
      if (prow[j].is_zero()) continue;
      prow[j] *= inv;
      nz.push_back(j);
    }
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r) continue;
      auto& row = t_[i];
      if (row[c].is_zero()) continue;
      const Rational f = row[c];
      for (std::size_t j : nz) row[j] -= f * prow[j];
    }
    basis_[r] = c;
  }

  const LinearProgram& lp_;
  const std::vector<std::size_t>& rows_;
  std::vector<std::size_t> col_var_;
  std::vector<int> col_sign_;
  std::vector<bool> flipped_;
  std::size_t nstruct_ = 0;
  std::size_t art_begin_ = 0;
  std::size_t ncols_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> init_basis_;
  std::vector<Rational> cost_;
};

RVector scatter(const RVector& kept_values, const std::vector<std::size_t>& kept, std::size_t m) {
  RVector y(m);
  for (std::size_t i = 0; i < kept.size(); ++i) y[kept[i]] = kept_values[i];
  return y;
}

}  // namespace

LpSolution solve(const LinearProgram& lp) {
  lp.check();
  LpSolution sol;
  const std::size_t m = lp.num_rows();
  Presolved pre = presolve(lp);
  if (pre.empty_conflict) {
    sol.status = Status::Infeasible;
    sol.farkas = RVector(m);
    sol.farkas[*pre.empty_conflict] = inverse(lp.b[*pre.empty_conflict]);
    return sol;
  }

  Tableau tab(lp, pre.kept);
  tab.load_costs(tab.phase1_costs());
  tab.run(true);
  Rational infeasibility = tab.objective_value();
  if (infeasibility.sign() > 0) {
    sol.status = Status::Infeasible;
    RVector y = tab.multipliers();
    y *= inverse(infeasibility);
    sol.farkas = scatter(y, pre.kept, m);
    return sol;
  }
  tab.drive_out_artificials();
  tab.load_costs(tab.phase2_costs());
  if (auto enter = tab.run(false)) {
    sol.status = Status::Unbounded;
    sol.point = tab.point();
    sol.ray = tab.ray(*enter);
    return sol;
  }
  sol.status = Status::Optimal;
  sol.point = tab.point();
  sol.value = dot(lp.objective, sol.point);
  sol.duals = scatter(tab.multipliers(), pre.kept, m);
  return sol;
}

namespace {

bool primal_feasible(const LinearProgram& lp, const RVector& x) {
  if (x.dim() != lp.num_vars()) return false;
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    if (lp.bounds[j] == Bound::NonNegative && x[j].sign() < 0) return false;
  }
  RVector ax = lp.a * x;
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    if (ax[i] < lp.b[i]) return false;
  }
  return true;
}

// y^T A compared against `target` per variable: equality on free variables,
// `<=` on nonnegative ones.
bool dual_row_condition(const LinearProgram& lp, const RVector& y, const RVector& target) {
  if (y.dim() != lp.num_rows() || !y.nonnegative()) return false;
  RVector yta = lp.a.transpose() * y;
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    if (lp.bounds[j] == Bound::Free ? yta[j] != target[j] : yta[j] > target[j]) return false;
  }
  return true;
}

}  // namespace

bool verify_solution(const LinearProgram& lp, const LpSolution& sol) {
  try {
    lp.check();
  } catch (const InvalidInput&) {
    return false;
  }
  switch (sol.status) {
    case Status::Optimal:
      if (!primal_feasible(lp, sol.point)) return false;
      if (dot(lp.objective, sol.point) != sol.value) return false;
      if (!dual_row_condition(lp, sol.duals, lp.objective)) return false;
      return dot(sol.duals, lp.b) == sol.value;
    case Status::Infeasible:
      if (!dual_row_condition(lp, sol.farkas, RVector(lp.num_vars()))) return false;
      return dot(sol.farkas, lp.b).sign() > 0;
    case Status::Unbounded: {
      if (!primal_feasible(lp, sol.point)) return false;
      if (sol.ray.dim() != lp.num_vars()) return false;
      for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        if (lp.bounds[j] == Bound::NonNegative && sol.ray[j].sign() < 0) return false;
      }
      RVector ad = lp.a * sol.ray;
      if (!ad.nonnegative()) return false;
      return dot(lp.objective, sol.ray).sign() < 0;
    }
  }
  return false;
}

std::size_t Builder::add_var(Bound bound, const Rational& cost) {
  bounds_.push_back(bound);
  costs_.push_back(cost);
  return bounds_.size() - 1;
}

std::size_t Builder::add_vars(std::size_t count, Bound bound, const Rational& cost) {
  std::size_t first = bounds_.size();
  for (std::size_t k = 0; k < count; ++k) add_var(bound, cost);
  return first;
}

void Builder::set_cost(std::size_t var, const Rational& cost) { costs_.at(var) = cost; }

void Builder::add_geq(const std::vector<std::pair<std::size_t, Rational>>& terms, const Rational& rhs) {
  std::vector<std::pair<std::size_t, Rational>> row;
  for (const auto& [v, c] : terms) {
    if (v >= bounds_.size()) throw InvalidInput("LP builder: unknown variable index");
    if (!c.is_zero()) row.emplace_back(v, c);
  }
  rows_.push_back(std::move(row));
  rhs_.push_back(rhs);
}

void Builder::add_geq(const RVector& coeffs, const Rational& rhs) {
  std::vector<std::pair<std::size_t, Rational>> terms;
  for (std::size_t j = 0; j < coeffs.dim(); ++j) {
    if (!coeffs[j].is_zero()) terms.emplace_back(j, coeffs[j]);
  }
  add_geq(terms, rhs);
}

void Builder::add_eq(const RVector& coeffs, const Rational& rhs) {
  add_geq(coeffs, rhs);
  add_geq(-coeffs, -rhs);
}

void Builder::add_eq(const std::vector<std::pair<std::size_t, Rational>>& terms, const Rational& rhs) {
  add_geq(terms, rhs);
  std::vector<std::pair<std::size_t, Rational>> neg;
  for (const auto& [v, c] : terms) neg.emplace_back(v, -c);
  add_geq(neg, -rhs);
}

LinearProgram Builder::build() const {
  LinearProgram lp;
  const std::size_t n = bounds_.size();
  lp.objective = RVector(costs_);
  lp.bounds = bounds_;
  lp.a = RMatrix(rows_.size(), n);
  lp.b = RVector(rhs_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& [v, c] : rows_[i]) lp.a(i, v) += c;
  }
  return lp;
}

}  // namespace ordvec::lp
