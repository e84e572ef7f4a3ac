#include "effres/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace effres {

std::size_t bit_length(const BigInt& v) {
  if (sgn(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  const BigInt num = parse_integer(t.substr(0, slash), text);
  const std::string_view den_text = t.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  const BigInt den = parse_integer(den_text, text);
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return out;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return Rational(den(), num());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational max_of(std::initializer_list<Rational> values) {
  if (values.size() == 0) throw std::invalid_argument("max_of: empty list");
  return *std::max_element(values.begin(), values.end());
}

}  // namespace effres
