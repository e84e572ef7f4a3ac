#include "effres/continued_fraction.hpp"

#include <stdexcept>

namespace effres {

ContinuedFraction::ContinuedFraction(BigInt a0, std::vector<BigInt> quotients)
    : a0_(std::move(a0)), quotients_(std::move(quotients)), sum_(a0_) {
  if (sgn(a0_) < 0) throw std::invalid_argument("continued fraction: a0 must be >= 0");
  for (const BigInt& a : quotients_) {
    if (a < 1) throw std::invalid_argument("continued fraction: partial quotients must be >= 1");
    sum_ += a;
  }
}

Rational ContinuedFraction::value() const {
  if (quotients_.empty()) return Rational(a0_);
  // Evaluate from the tail as num/den to avoid repeated reductions.
  BigInt num = quotients_.back();
  BigInt den = 1;
  for (std::size_t i = quotients_.size() - 1; i-- > 0;) {
    BigInt next = quotients_[i] * num + den;
    den = num;
    num = std::move(next);
  }
  return Rational(a0_ * num + den, num);
}

std::string ContinuedFraction::to_string() const {
  std::string out = "[" + a0_.get_str();
  for (std::size_t i = 0; i < quotients_.size(); ++i) {
    out += (i == 0 ? ";" : ",");
    out += quotients_[i].get_str();
  }
  return out + "]";
}

ContinuedFraction cf_from_rational(const Rational& q) {
  if (q.sign() < 0) throw std::domain_error("continued fraction of a negative rational");
  BigInt p = q.num();
  BigInt d = q.den();
  BigInt a0;
  BigInt r;
  mpz_fdiv_qr(a0.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), d.get_mpz_t());
  std::vector<BigInt> quotients;
  p = d;
  d = r;
  while (sgn(d) != 0) {
    BigInt a;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), d.get_mpz_t());
    quotients.push_back(std::move(a));
    p = d;
    d = r;
  }
  return ContinuedFraction(std::move(a0), std::move(quotients));
}

Rational cf_to_rational(const ContinuedFraction& cf) { return cf.value(); }

ContinuedFraction cf_normalize_parity(const ContinuedFraction& cf, bool even_length) {
  if (cf.length() == 0 && sgn(cf.a0()) == 0) {
    throw std::domain_error("the continued fraction of 0 has a single representation");
  }
  if ((cf.length() % 2 == 0) == even_length) return cf;

  std::vector<BigInt> quotients = cf.quotients();
  BigInt a0 = cf.a0();
  if (quotients.empty()) {
    // [a0] -> [a0 - 1; 1]
    a0 -= 1;
    quotients.emplace_back(1);
  } else if (quotients.back() > 1) {
    quotients.back() -= 1;
    quotients.emplace_back(1);
  } else {
    // [.., a, 1] -> [.., a + 1]
    quotients.pop_back();
    if (quotients.empty()) {
      a0 += 1;
    } else {
      quotients.back() += 1;
    }
  }
  return ContinuedFraction(std::move(a0), std::move(quotients));
}

ContinuedFraction cf_complement(const Rational& q) {
  if (q.sign() <= 0 || q >= Rational(1)) {
    throw std::domain_error("cf_complement requires 0 < q < 1, got " + q.to_string());
  }
  const ContinuedFraction cf = cf_from_rational(q);
  const std::vector<BigInt>& a = cf.quotients();
  std::vector<BigInt> out;
  if (a.front() > 1) {
    out.reserve(a.size() + 1);
    out.emplace_back(1);
    out.push_back(a.front() - 1);
    out.insert(out.end(), a.begin() + 1, a.end());
  } else {
    // a1 == 1 and q < 1 force l >= 2 in the canonical expansion.
    out.assign(a.begin() + 1, a.end());
    out.front() += 1;
  }
  return ContinuedFraction(0, std::move(out));
}

ContinuedFraction cf_one_plus(const Rational& q) {
  if (q.abs() >= Rational(1)) {
    throw std::domain_error("cf_one_plus requires |q| < 1, got " + q.to_string());
  }
  if (q.is_zero()) return ContinuedFraction(1);
  if (q.sign() > 0) return ContinuedFraction(1, cf_from_rational(q).quotients());
  return cf_complement(q.abs());
}

BigInt partial_quotient_sum(const Rational& q) {
  if (q.sign() < 0) throw std::domain_error("S(q) requires q >= 0");
  BigInt sum = 0;
  BigInt p = q.num();
  BigInt d = q.den();
  BigInt a;
  BigInt r;
  while (sgn(d) != 0) {
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), d.get_mpz_t());
    sum += a;
    p.swap(d);
    d.swap(r);
  }
  return sum;
}

}  // namespace effres
