#include "ordvec/linalg.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ordvec/error.hpp"

namespace ordvec {

RVector RVector::unit(std::size_t dim, std::size_t index) {
  RVector v(dim);
  v[index] = 1;
  return v;
}

RVector RVector::constant(std::size_t dim, const Rational& value) {
  return RVector(std::vector<Rational>(dim, value));
}

bool RVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

Rational RVector::sum() const {
  Rational s;
  for (const auto& r : entries_) s += r;
  return s;
}

Rational RVector::l1() const {
  Rational s;
  for (const auto& r : entries_) s += abs(r);
  return s;
}

bool RVector::nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.sign() >= 0; });
}

RVector& RVector::operator+=(const RVector& o) {
  require_dim(o.dim(), dim(), "vector addition");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

RVector& RVector::operator-=(const RVector& o) {
  require_dim(o.dim(), dim(), "vector subtraction");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

RVector& RVector::operator*=(const Rational& s) {
  for (auto& r : entries_) r *= s;
  return *this;
}

std::string RVector::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  return os << ')';
}

Rational dot(const RVector& a, const RVector& b) {
  require_dim(b.dim(), a.dim(), "dot product");
  Rational s;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

RVector combine(std::span<const RVector> vectors, const RVector& coeffs, std::size_t dim) {
  require_dim(coeffs.dim(), vectors.size(), "linear combination coefficients");
  RVector out(dim);
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    require_dim(vectors[j].dim(), dim, "linear combination term");
    if (coeffs[j].is_zero()) continue;
    for (std::size_t i = 0; i < dim; ++i) out[i] += coeffs[j] * vectors[j][i];
  }
  return out;
}

RMatrix::RMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  for (const auto& r : rows) append_row(RVector(std::vector<Rational>(r)));
}

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RMatrix RMatrix::from_rows(std::span<const RVector> rows, std::size_t cols) {
  RMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RMatrix RMatrix::from_columns(std::span<const RVector> columns, std::size_t rows) {
  RMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require_dim(columns[j].dim(), rows, "matrix column");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

RVector RMatrix::row(std::size_t r) const {
  auto v = row_view(r);
  return RVector(std::vector<Rational>(v.begin(), v.end()));
}

RVector RMatrix::col(std::size_t c) const {
  RVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

RMatrix RMatrix::transpose() const {
  RMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void RMatrix::append_row(const RVector& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.dim();
  require_dim(row.dim(), cols_, "matrix row");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RVector operator*(const RMatrix& a, const RVector& x) {
  require_dim(x.dim(), a.cols(), "matrix-vector product");
  RVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational s;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero() && !x[j].is_zero()) s += a(i, j) * x[j];
    }
    out[i] = std::move(s);
  }
  return out;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  require_dim(b.rows(), a.cols(), "matrix product");
  RMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

namespace {

// Integer row-echelon form of [A | extra columns], eliminating only over the
// first `coef_cols` columns.
struct Echelon {
  std::vector<std::vector<mpz_class>> m;
  std::vector<std::size_t> pivot_cols;
  std::size_t coef_cols = 0;
};

std::vector<mpz_class> integer_row(std::span<const Rational> row, const Rational* extra) {
  mpz_class scale = 1;
  auto fold = [&](const Rational& r) { mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), r.raw().get_den_mpz_t()); };
  for (const auto& r : row) fold(r);
  if (extra) fold(*extra);
  std::vector<mpz_class> out;
  out.reserve(row.size() + (extra ? 1 : 0));
  auto push = [&](const Rational& r) {
    mpz_class v = r.raw().get_num() * (scale / r.raw().get_den());
    out.push_back(std::move(v));
  };
  for (const auto& r : row) push(r);
  if (extra) push(*extra);
  return out;
}

Echelon bareiss(const RMatrix& a, const RVector* rhs) {
  Echelon e;
  e.coef_cols = a.cols();
  e.m.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) e.m.push_back(integer_row(a.row_view(i), rhs ? &(*rhs)[i] : nullptr));
  const std::size_t rows = e.m.size();
  const std::size_t width = a.cols() + (rhs ? 1 : 0);
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && e.m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(e.m[p], e.m[r]);
    const mpz_class& piv = e.m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class lead = e.m[i][c];
      for (std::size_t j = c + 1; j < width; ++j) {
        mpz_class v = piv * e.m[i][j] - lead * e.m[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        e.m[i][j] = std::move(v);
      }
      e.m[i][c] = 0;
    }
    prev = piv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

// Back substitution on the echelon rows; non-pivot columns take the values in
// `x` on entry.
void back_substitute(const Echelon& e, bool has_rhs, RVector& x) {
  for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
    const auto& row = e.m[k];
    const std::size_t pc = e.pivot_cols[k];
    Rational s = has_rhs ? Rational(mpq_class(row[e.coef_cols])) : Rational(0);
    for (std::size_t j = pc + 1; j < e.coef_cols; ++j) {
      if (row[j] != 0 && !x[j].is_zero()) s -= Rational(mpq_class(row[j])) * x[j];
    }
    x[pc] = s / Rational(mpq_class(row[pc]));
  }
}

}  // namespace

LinearSolveResult solve_linear(const RMatrix& a, const RVector& b) {
  require_dim(b.dim(), a.rows(), "solve_linear right-hand side");
  Echelon e = bareiss(a, &b);
  LinearSolveResult res;
  res.rank = e.pivot_cols.size();
  for (std::size_t i = res.rank; i < e.m.size(); ++i) {
    if (e.m[i][a.cols()] != 0) {
      res.status = LinearSolveResult::Status::NoSolution;
      return res;
    }
  }
  RVector x(a.cols());
  back_substitute(e, true, x);
  res.solution = std::move(x);
  res.status = res.rank == a.cols() ? LinearSolveResult::Status::Unique
                                    : LinearSolveResult::Status::Underdetermined;
  return res;
}

std::size_t rank(const RMatrix& a) { return bareiss(a, nullptr).pivot_cols.size(); }

std::vector<RVector> null_space(const RMatrix& a) {
  Echelon e = bareiss(a, nullptr);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<RVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RVector x(a.cols());
    x[f] = 1;
    back_substitute(e, false, x);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace ordvec
