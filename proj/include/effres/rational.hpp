#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace effres {

using BigInt = mpz_class;

/// Number of bits in |v|; bit_length(0) == 0.
std::size_t bit_length(const BigInt& v);

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Accepts "p/q" or "p", optional leading '-'. Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return q_.get_num(); }
  const BigInt& den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  BigInt floor() const;
  /// Fractional part in [0, 1).
  Rational frac() const;
  Rational abs() const;
  /// Throws std::domain_error on zero.
  Rational reciprocal() const;

  double to_double() const { return q_.get_d(); }
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// max of an initializer list of rationals.
Rational max_of(std::initializer_list<Rational> values);

}  // namespace effres
