#include "ordvec/rational.hpp"

#include <cctype>
#include <ostream>

#include "ordvec/error.hpp"

namespace ordvec {

Rational::Rational(long num, long den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!valid_integer_text(s)) {
    throw InvalidInput("not a rational number: \"" + std::string(whole) + "\"");
  }
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    return Rational(mpq_class(parse_integer(s, text)));
  }
  mpz_class num = parse_integer(trim(s.substr(0, slash)), text);
  std::string_view den_text = trim(s.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw InvalidInput("denominator must be unsigned: \"" + std::string(text) + "\"");
  }
  mpz_class den = parse_integer(den_text, text);
  if (den == 0) throw InvalidInput("rational with zero denominator: \"" + std::string(text) + "\"");
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidInput("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational inverse(const Rational& r) { return Rational(1) / r; }

}  // namespace ordvec
