#pragma once

#include <string>
#include <vector>

#include "effres/constructor.hpp"
#include "effres/rational.hpp"

namespace effres {

struct CensusRow {
  long t = 0;
  long c = 0;
  Strategy strategy = Strategy::direct;
  std::size_t v_count = 0;
  std::size_t e_count = 0;
  Rational bound_value;
  Rational size_ratio;
  bool all_pass = false;
  /// Names of failing audits, or the exception text if construction threw.
  std::vector<std::string> failures;
};

struct CensusSummary {
  std::vector<CensusRow> rows;
  Rational max_ratio;
  double mean_ratio = 0.0;
  std::size_t failures = 0;
};

/// Every reduced c/t with 1 <= c < t, 2 <= t <= max_t, ordered by (t, c).
std::vector<Rational> census_targets(long max_t);

/// Realizes and audits every target. OpenMP over targets; threads <= 0 keeps
/// the runtime default. Rows come back in target order.
CensusSummary census(const std::vector<Rational>& targets, const ConstructorConfig& config, int threads = 0);

/// Single-threaded reference; produces identical rows.
CensusSummary census_serial(const std::vector<Rational>& targets, const ConstructorConfig& config);

CensusRow census_row(const Rational& c_over_t, const ConstructorConfig& config);

}  // namespace effres
