#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ordvec {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I value)  // NOLINT(google-explicit-constructor)
      : q_(widen(value)) {}
  Rational(long num, long den);
  explicit Rational(mpq_class q);

  /// Parses "p", "p/q" or "-p/q" (surrounding whitespace allowed).
  static Rational parse(std::string_view text);

  [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return q_; }

  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }

  /// "p/q", or "p" when the denominator is 1.
  [[nodiscard]] std::string str() const;
  [[nodiscard]] double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  template <std::integral I>
  static auto widen(I v) {
    if constexpr (std::is_signed_v<I>) {
      return static_cast<long>(v);
    } else {
      return static_cast<unsigned long>(v);
    }
  }

  mpq_class q_;
};

Rational abs(const Rational& r);
Rational inverse(const Rational& r);

}  // namespace ordvec
