#pragma once

#include <string>
#include <vector>

#include "effres/rational.hpp"

namespace effres {

/// Finite continued fraction [a0; a1, ..., al] with a0 >= 0 and ai >= 1.
/// The partial-quotient sum S = a0 + ... + al is computed once on construction.
class ContinuedFraction {
 public:
  /// Throws std::invalid_argument if a0 < 0 or any ai < 1.
  ContinuedFraction(BigInt a0, std::vector<BigInt> quotients = {});

  const BigInt& a0() const { return a0_; }
  /// a1..al (empty when l == 0).
  const std::vector<BigInt>& quotients() const { return quotients_; }
  std::size_t length() const { return quotients_.size(); }
  /// Partial quotient at position i, where position 0 is a0.
  const BigInt& at(std::size_t i) const { return i == 0 ? a0_ : quotients_.at(i - 1); }
  const BigInt& partial_sum() const { return sum_; }

  Rational value() const;
  /// "[a0;a1,...,al]", or "[a0]" when l == 0.
  std::string to_string() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  BigInt a0_;
  std::vector<BigInt> quotients_;
  BigInt sum_;
};

/// Canonical (Euclidean) expansion of q >= 0. Throws std::domain_error for q < 0.
ContinuedFraction cf_from_rational(const Rational& q);

Rational cf_to_rational(const ContinuedFraction& cf);

/// Switches between [.., al] and [.., al - 1, 1] so that the number of
/// quotients after a0 is even (even_length) or odd. Value and S are unchanged.
/// Throws std::domain_error when the value is 0.
ContinuedFraction cf_normalize_parity(const ContinuedFraction& cf, bool even_length);

/// Expansion of 1 - q for q = [a1, ..., al] in (0,1):
/// [1, a1 - 1, a2, ..., al] if a1 > 1, [a2 + 1, a3, ..., al] if a1 == 1.
ContinuedFraction cf_complement(const Rational& q);

/// Expansion of 1 + q for q in (-1,1), with S(1 + q) <= 1 + S(|q|).
ContinuedFraction cf_one_plus(const Rational& q);

/// S(q) for q >= 0, with S(0) = 0.
BigInt partial_quotient_sum(const Rational& q);

}  // namespace effres
