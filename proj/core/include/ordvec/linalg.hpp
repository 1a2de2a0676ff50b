#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ordvec/rational.hpp"

namespace ordvec {

/// Dense vector of exact rationals.
class RVector {
 public:
  RVector() = default;
  explicit RVector(std::size_t dim) : entries_(dim) {}
  RVector(std::initializer_list<Rational> values) : entries_(values) {}
  explicit RVector(std::vector<Rational> values) : entries_(std::move(values)) {}

  static RVector unit(std::size_t dim, std::size_t index);
  static RVector constant(std::size_t dim, const Rational& value);

  [[nodiscard]] std::size_t dim() const { return entries_.size(); }
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }

  [[nodiscard]] auto begin() const { return entries_.begin(); }
  [[nodiscard]] auto end() const { return entries_.end(); }
  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }

  [[nodiscard]] std::span<const Rational> view() const { return entries_; }
  [[nodiscard]] const std::vector<Rational>& entries() const { return entries_; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Rational sum() const;
  /// Sum of absolute values.
  [[nodiscard]] Rational l1() const;
  [[nodiscard]] bool nonnegative() const;

  RVector& operator+=(const RVector& o);
  RVector& operator-=(const RVector& o);
  RVector& operator*=(const Rational& s);

  friend RVector operator+(RVector a, const RVector& b) { return a += b; }
  friend RVector operator-(RVector a, const RVector& b) { return a -= b; }
  friend RVector operator-(RVector a) { return a *= Rational(-1); }
  friend RVector operator*(RVector a, const Rational& s) { return a *= s; }
  friend RVector operator*(const Rational& s, RVector a) { return a *= s; }
  friend bool operator==(const RVector&, const RVector&) = default;

  [[nodiscard]] std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const RVector& v);

 private:
  std::vector<Rational> entries_;
};

Rational dot(const RVector& a, const RVector& b);

/// Sum_j coeffs[j] * vectors[j]; every vector must have dimension `dim`.
RVector combine(std::span<const RVector> vectors, const RVector& coeffs, std::size_t dim);

/// Row-major dense matrix of exact rationals. Zero rows are allowed.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RMatrix identity(std::size_t n);
  static RMatrix from_rows(std::span<const RVector> rows, std::size_t cols);
  /// Matrix whose j-th column is columns[j].
  static RMatrix from_columns(std::span<const RVector> columns, std::size_t rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Rational> row_view(std::size_t r) const {
    return std::span<const Rational>(data_).subspan(r * cols_, cols_);
  }
  [[nodiscard]] RVector row(std::size_t r) const;
  [[nodiscard]] RVector col(std::size_t c) const;
  [[nodiscard]] RMatrix transpose() const;

  /// Appends a row; the first row appended to an empty 0x0 matrix fixes cols.
  void append_row(const RVector& row);

  friend bool operator==(const RMatrix&, const RMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RVector operator*(const RMatrix& a, const RVector& x);
RMatrix operator*(const RMatrix& a, const RMatrix& b);

struct LinearSolveResult {
  enum class Status { Unique, NoSolution, Underdetermined };
  Status status = Status::NoSolution;
  /// The solution when Unique; one particular solution (free variables set
  /// to zero) when Underdetermined; empty when NoSolution.
  RVector solution;
  std::size_t rank = 0;
};

/// Exact solve of A x = b by fraction-free (Bareiss) elimination.
LinearSolveResult solve_linear(const RMatrix& a, const RVector& b);

std::size_t rank(const RMatrix& a);

/// Basis of { x : A x = 0 }, one vector per free column of the reduced form.
std::vector<RVector> null_space(const RMatrix& a);

}  // namespace ordvec
