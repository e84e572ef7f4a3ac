#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "effres/rational.hpp"

namespace effres {

struct DecomposerBudget {
  /// Largest denominator of a searched (non-remainder) part.
  std::int64_t max_den = 10000;
  /// Partial quotient cap for searched parts.
  std::int64_t max_quotient = 4;
  int max_terms = 3;
  /// Searches with three or more parts draw their chosen parts from only this
  /// many of the cheapest pool entries. Keeps the work bounded and deterministic.
  std::int64_t deep_pool = 2048;
};

/// target = parts[0] + ... + parts[k-1], every |part| < 1,
/// cost = sum of S(|part|).
struct Decomposition {
  Rational target;
  std::vector<Rational> parts;
  BigInt cost;

  std::size_t terms() const { return parts.size(); }
};

/// Sum of S(|q|) over the parts.
BigInt decomposition_cost(std::span<const Rational> parts);

/// Exact re-check of sum, range and cost; never trusts the search.
bool is_valid(const Decomposition& d);

/// parts = [target] (or [] for target 0). Throws std::domain_error unless 0 <= target < 1.
Decomposition decompose_trivial(const Rational& target);

/// Best decomposition found under the budget, ordered by
/// (cost, number of terms, denominators, numerators) with parts listed by
/// ascending (denominator, numerator). All parts but one come from the pool of
/// rationals in (-1,1) with denominator <= max_den and partial quotients
/// <= max_quotient; the remaining part is whatever is left over. Never worse
/// than decompose_trivial. Targets whose denominator is too large for the
/// 64-bit search path get the trivial decomposition.
Decomposition decompose_search(const Rational& target, const DecomposerBudget& budget);

/// Single-threaded reference for decompose_search; identical results.
Decomposition decompose_search_serial(const Rational& target, const DecomposerBudget& budget);

struct PoolEntry {
  std::int64_t num;
  std::int64_t den;
  std::int64_t cost;  // S(|num/den|)
};

/// Signed candidates sorted by (cost, den, num). Cached per (max_den, max_quotient).
std::shared_ptr<const std::vector<PoolEntry>> candidate_pool(std::int64_t max_den, std::int64_t max_quotient);

struct CostRow {
  Rational target;
  BigInt cost;
  std::size_t terms = 0;
  std::optional<double> log_size;  // ln(num + den)
  std::optional<double> ratio;     // cost / ln(num + den); empty for target 0
};

struct CostReport {
  std::vector<CostRow> rows;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  std::size_t skipped = 0;
  bool all_valid = true;
};

CostReport cost_report(std::span<const Rational> samples, const DecomposerBudget& budget);

}  // namespace effres
