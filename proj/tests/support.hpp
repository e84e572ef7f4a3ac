#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "effres/rational.hpp"
#include "effres/sp_term.hpp"

namespace effres::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Random proper term with exactly `leaves` leaves (>= 1).
inline MarkedSP random_term(Rng& rng, std::size_t leaves) {
  if (leaves == 1) return MarkedSP::leaf();
  const std::size_t parts = static_cast<std::size_t>(uniform(rng, 2, std::min<std::int64_t>(4, leaves)));
  // Split `leaves` into `parts` positive sizes.
  std::vector<std::size_t> cuts;
  for (std::size_t i = 0; i + 1 < parts; ++i) cuts.push_back(static_cast<std::size_t>(uniform(rng, 1, leaves - 1)));
  cuts.push_back(0);
  cuts.push_back(leaves);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<MarkedSP> children;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) children.push_back(random_term(rng, cuts[i + 1] - cuts[i]));
  if (children.size() == 1) return children.front();
  return uniform(rng, 0, 1) == 0 ? MarkedSP::series(std::move(children)) : MarkedSP::parallel(std::move(children));
}

inline MarkedSP random_term(Rng& rng, std::size_t min_leaves, std::size_t max_leaves) {
  return random_term(rng, static_cast<std::size_t>(uniform(rng, min_leaves, max_leaves)));
}

/// Random reduced p/q with 1 <= q <= max_den and lo <= p/q < hi (integers lo < hi).
inline Rational random_rational(Rng& rng, std::int64_t max_den, std::int64_t lo, std::int64_t hi) {
  const std::int64_t q = uniform(rng, 1, max_den);
  const std::int64_t p = uniform(rng, lo * q, hi * q - 1);
  return Rational(static_cast<long>(p), static_cast<long>(q));
}

/// Independent S(p/q) for p/q >= 0 on machine integers.
inline std::int64_t euclid_sum(std::int64_t p, std::int64_t q) {
  std::int64_t s = 0;
  while (q != 0) {
    s += p / q;
    const std::int64_t r = p % q;
    p = q;
    q = r;
  }
  return s;
}

inline std::int64_t totient_sum(std::int64_t max_t) {
  std::int64_t n = 0;
  for (std::int64_t t = 2; t <= max_t; ++t) {
    for (std::int64_t c = 1; c < t; ++c) n += std::gcd(c, t) == 1;
  }
  return n;
}

}  // namespace effres::testing
