#include "effres/decomposer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "effres/continued_fraction.hpp"

namespace effres {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMaxPoolDen = std::int64_t{1} << 20;
constexpr int kMaxTerms = 4;
// Target denominators must stay below this for the 128-bit residual path.
constexpr std::int64_t kMaxTargetDen = std::int64_t{1} << 40;

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

struct Frac {
  i128 num = 0;
  i128 den = 1;
};

// Not reduced: S(p/q) is the same for any scaling of p/q, so only remainders
// that are kept or recursed on pay for a gcd.
Frac subtract(const Frac& a, const PoolEntry& e) {
  const i128 num = a.num * e.den - static_cast<i128>(e.num) * a.den;
  if (num == 0) return Frac{0, 1};
  return Frac{num, a.den * e.den};
}

Frac reduce(const Frac& f) {
  const i128 num = f.num;
  const i128 den = f.den;
  if (num == 0) return Frac{0, 1};
  const u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g == 1) return Frac{num, den};
  if ((abs128(num) >> 63) == 0 && (den >> 63) == 0) {
    const auto g64 = static_cast<std::int64_t>(g);
    return Frac{static_cast<std::int64_t>(num) / g64, static_cast<std::int64_t>(den) / g64};
  }
  return Frac{num / static_cast<i128>(g), den / static_cast<i128>(g)};
}

// S(p/q) for p/q >= 0, or limit + 1 as soon as the running sum exceeds limit.
std::int64_t bounded_partial_sum_64(std::uint64_t p, std::uint64_t q, std::int64_t limit) {
  std::int64_t sum = 0;
  while (q != 0) {
    const std::uint64_t a = p / q;
    if (a > static_cast<std::uint64_t>(limit - sum)) return limit + 1;
    sum += static_cast<std::int64_t>(a);
    const std::uint64_t r = p % q;
    p = q;
    q = r;
  }
  return sum;
}

std::int64_t bounded_partial_sum(u128 p, u128 q, std::int64_t limit) {
  if ((p >> 64) == 0 && (q >> 64) == 0) {
    return bounded_partial_sum_64(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(q), limit);
  }
  std::int64_t sum = 0;
  while (q != 0) {
    const u128 a = p / q;
    if (a > static_cast<u128>(limit - sum)) return limit + 1;
    sum += static_cast<std::int64_t>(a);
    const u128 r = p % q;
    p = q;
    q = r;
  }
  return sum;
}

struct Candidate {
  std::int64_t cost = 0;
  // (den, num) sorted ascending
  std::vector<std::pair<i128, i128>> parts;
};

// Strict total order used for selection: cost, term count, denominators, numerators.
bool better(const Candidate& a, const Candidate& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.parts.size() != b.parts.size()) return a.parts.size() < b.parts.size();
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    if (a.parts[i].first != b.parts[i].first) return a.parts[i].first < b.parts[i].first;
  }
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    if (a.parts[i].second != b.parts[i].second) return a.parts[i].second < b.parts[i].second;
  }
  return false;
}

class Searcher {
 public:
  Searcher(const std::vector<PoolEntry>& pool, int max_terms, Frac target, Candidate initial)
      : pool_(pool), max_terms_(max_terms), limit_(pool.size()), target_(target), best_(std::move(initial)) {}

  void set_depth(int max_terms, std::size_t pool_limit) {
    max_terms_ = max_terms;
    limit_ = std::min(pool_limit, pool_.size());
  }

  // Explores every decomposition whose first (lowest-index) pool part is pool[i].
  void search_first(std::size_t i) {
    const PoolEntry& e = pool_[i];
    if (e.cost > best_.cost) return;
    chosen_.push_back(&e);
    dfs(i, subtract(target_, e), e.cost);
    chosen_.pop_back();
  }

  const Candidate& best() const { return best_; }

 private:
  void offer(std::int64_t cost, const Frac* remainder) {
    Candidate c;
    c.cost = cost;
    for (const PoolEntry* p : chosen_) c.parts.emplace_back(p->den, p->num);
    if (remainder != nullptr) {
      const Frac r = reduce(*remainder);
      c.parts.emplace_back(r.den, r.num);
    }
    std::sort(c.parts.begin(), c.parts.end());
    if (better(c, best_)) best_ = std::move(c);
  }

  void dfs(std::size_t start, const Frac& residual, std::int64_t partial) {
    const std::size_t used = chosen_.size();
    if (residual.num == 0) {
      // Pool parts alone hit the target; a single one duplicates the trivial form.
      if (used >= 2) offer(partial, nullptr);
    } else if (abs128(residual.num) < static_cast<u128>(residual.den)) {
      const std::int64_t limit = best_.cost - partial;
      if (limit >= 1) {
        const std::int64_t s = bounded_partial_sum(abs128(residual.num), static_cast<u128>(residual.den), limit);
        if (s <= limit) offer(partial + s, &residual);
      }
    }
    if (static_cast<int>(used) + 2 > max_terms_) return;
    const Frac base = reduce(residual);
    for (std::size_t i = start; i < limit_; ++i) {
      const PoolEntry& e = pool_[i];
      const std::int64_t lower = partial + e.cost;
      if (lower > best_.cost || (lower == best_.cost && used + 1 > best_.parts.size())) break;
      chosen_.push_back(&e);
      dfs(i, subtract(base, e), lower);
      chosen_.pop_back();
    }
  }

  const std::vector<PoolEntry>& pool_;
  int max_terms_;
  std::size_t limit_;
  Frac target_;
  Candidate best_;
  std::vector<const PoolEntry*> chosen_;
};

void check_target(const Rational& target) {
  if (target.sign() < 0 || target >= Rational(1)) {
    throw std::domain_error("decomposition target must lie in [0,1), got " + target.to_string());
  }
}

void check_budget(const DecomposerBudget& b) {
  if (b.max_den < 1 || b.max_den > kMaxPoolDen) {
    throw std::invalid_argument("max_den must be in [1, " + std::to_string(kMaxPoolDen) + "]");
  }
  if (b.deep_pool < 1) throw std::invalid_argument("deep_pool must be positive");
  if (b.max_quotient < 1) throw std::invalid_argument("max_quotient must be positive");
  if (b.max_terms < 1 || b.max_terms > kMaxTerms) {
    throw std::invalid_argument("max_terms must be in [1, " + std::to_string(kMaxTerms) + "]");
  }
}

Rational to_rational(i128 num, i128 den) {
  auto big = [](i128 v) {
    const bool neg = v < 0;
    u128 m = abs128(v);
    BigInt out = 0;
    BigInt scale = 1;
    while (m != 0) {
      out += scale * BigInt(static_cast<unsigned long>(m % 1000000000u));
      scale *= 1000000000u;
      m /= 1000000000u;
    }
    return neg ? BigInt(-out) : out;
  };
  return Rational(big(num), big(den));
}

Decomposition finish(const Rational& target, const Candidate& best) {
  Decomposition d;
  d.target = target;
  for (const auto& [den, num] : best.parts) d.parts.push_back(to_rational(num, den));
  d.cost = decomposition_cost(d.parts);
  if (d.cost != best.cost) throw std::logic_error("decomposer cost bookkeeping mismatch");
  return d;
}

// Chosen parts come from the whole pool for two-term searches and from its
// cheapest prefix beyond that.
std::size_t depth_limit(const std::vector<PoolEntry>& pool, int terms, const DecomposerBudget& b) {
  if (terms <= 2) return pool.size();
  return std::min(pool.size(), static_cast<std::size_t>(b.deep_pool));
}

struct SearchSetup {
  bool searchable = false;
  Frac target;
  Candidate trivial;
  std::shared_ptr<const std::vector<PoolEntry>> pool;
};

SearchSetup setup(const Rational& target, const DecomposerBudget& budget) {
  check_target(target);
  check_budget(budget);
  SearchSetup s;
  if (target.is_zero() || budget.max_terms < 2) return s;
  if (!target.den().fits_slong_p() || target.den().get_si() >= kMaxTargetDen) return s;
  s.searchable = true;
  s.target = Frac{target.num().get_si(), target.den().get_si()};
  s.trivial.cost = partial_quotient_sum(target).get_si();
  s.trivial.parts = {{s.target.den, s.target.num}};
  s.pool = candidate_pool(budget.max_den, budget.max_quotient);
  return s;
}

void generate_pool(std::int64_t h, std::int64_t k, std::int64_t hp, std::int64_t kp, std::int64_t sum,
                   std::int64_t last, std::int64_t before_last, std::size_t length, std::int64_t max_den,
                   std::int64_t max_q, std::vector<PoolEntry>& out) {
  if (k > max_den) return;
  if (last >= 2) {
    out.push_back({h, k, sum});
  } else if (length >= 2 && before_last == max_q) {
    // [.., M, 1] stands in for [.., M + 1], which exceeds the quotient cap.
    out.push_back({h, k, sum});
  }
  for (std::int64_t a = 1; a <= max_q; ++a) {
    const std::int64_t nk = a * k + kp;
    if (nk > max_den) break;
    generate_pool(a * h + hp, nk, h, k, sum + a, a, last, length + 1, max_den, max_q, out);
  }
}

}  // namespace

BigInt decomposition_cost(std::span<const Rational> parts) {
  BigInt total = 0;
  for (const Rational& q : parts) total += partial_quotient_sum(q.abs());
  return total;
}

bool is_valid(const Decomposition& d) {
  Rational sum(0);
  for (const Rational& q : d.parts) {
    if (q.abs() >= Rational(1)) return false;
    sum += q;
  }
  return sum == d.target && decomposition_cost(d.parts) == d.cost;
}

Decomposition decompose_trivial(const Rational& target) {
  check_target(target);
  Decomposition d;
  d.target = target;
  if (!target.is_zero()) d.parts.push_back(target);
  d.cost = decomposition_cost(d.parts);
  return d;
}

std::shared_ptr<const std::vector<PoolEntry>> candidate_pool(std::int64_t max_den, std::int64_t max_quotient) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, std::int64_t>, std::shared_ptr<const std::vector<PoolEntry>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{max_den, max_quotient}];
  if (slot) return slot;

  std::vector<PoolEntry> positive;
  for (std::int64_t a1 = 1; a1 <= max_quotient && a1 <= max_den; ++a1) {
    // [0; a1]: h = 1, k = a1 with previous convergent 0/1.
    generate_pool(1, a1, 0, 1, a1, a1, 0, 1, max_den, max_quotient, positive);
  }
  auto pool = std::make_shared<std::vector<PoolEntry>>();
  pool->reserve(positive.size() * 2);
  for (const PoolEntry& e : positive) {
    pool->push_back(e);
    pool->push_back({-e.num, e.den, e.cost});
  }
  std::sort(pool->begin(), pool->end(), [](const PoolEntry& a, const PoolEntry& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.den != b.den) return a.den < b.den;
    return a.num < b.num;
  });
  slot = std::move(pool);
  return slot;
}

Decomposition decompose_search_serial(const Rational& target, const DecomposerBudget& budget) {
  const SearchSetup s = setup(target, budget);
  if (!s.searchable) return decompose_trivial(target);
  Searcher searcher(*s.pool, 2, s.target, s.trivial);
  // Deepening: the cheap two-term optimum bounds the deeper searches.
  for (int m = 2; m <= budget.max_terms; ++m) {
    const std::size_t limit = depth_limit(*s.pool, m, budget);
    searcher.set_depth(m, limit);
    for (std::size_t i = 0; i < limit; ++i) searcher.search_first(i);
  }
  return finish(target, searcher.best());
}

Decomposition decompose_search(const Rational& target, const DecomposerBudget& budget) {
  // Callers that are already parallel (the census) get no benefit from a nested team.
  if (omp_in_parallel()) return decompose_search_serial(target, budget);
  const SearchSetup s = setup(target, budget);
  if (!s.searchable) return decompose_trivial(target);
  Candidate best = s.trivial;
  for (int m = 2; m <= budget.max_terms; ++m) {
    const Candidate seed = best;
    const std::size_t limit = depth_limit(*s.pool, m, budget);
    const auto count = static_cast<std::ptrdiff_t>(limit);
#pragma omp parallel
    {
      Searcher local(*s.pool, m, s.target, seed);
      local.set_depth(m, limit);
#pragma omp for schedule(dynamic, 64)
      for (std::ptrdiff_t i = 0; i < count; ++i) local.search_first(static_cast<std::size_t>(i));
#pragma omp critical(effres_decompose_reduce)
      {
        if (better(local.best(), best)) best = local.best();
      }
    }
  }
  return finish(target, best);
}

CostReport cost_report(std::span<const Rational> samples, const DecomposerBudget& budget) {
  CostReport report;
  double ratio_sum = 0.0;
  std::size_t ratio_count = 0;
  for (const Rational& target : samples) {
    CostRow row;
    row.target = target;
    if (target.is_zero()) {
      row.cost = 0;
      ++report.skipped;
      report.rows.push_back(std::move(row));
      continue;
    }
    const Decomposition d = decompose_search(target, budget);
    report.all_valid = report.all_valid && is_valid(d);
    row.cost = d.cost;
    row.terms = d.terms();
    const double log_size = std::log(BigInt(target.num() + target.den()).get_d());
    row.log_size = log_size;
    row.ratio = d.cost.get_d() / log_size;
    report.max_ratio = std::max(report.max_ratio, *row.ratio);
    ratio_sum += *row.ratio;
    ++ratio_count;
    report.rows.push_back(std::move(row));
  }
  report.mean_ratio = ratio_count == 0 ? 0.0 : ratio_sum / static_cast<double>(ratio_count);
  return report;
}

}  // namespace effres
