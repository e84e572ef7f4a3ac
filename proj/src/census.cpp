#include "effres/census.hpp"

#include <numeric>

#include <omp.h>

namespace effres {

namespace {

CensusSummary summarize(std::vector<CensusRow> rows) {
  CensusSummary s;
  double sum = 0.0;
  for (const CensusRow& r : rows) {
    if (!r.all_pass) ++s.failures;
    if (r.size_ratio > s.max_ratio) s.max_ratio = r.size_ratio;
    sum += r.size_ratio.to_double();
  }
  s.mean_ratio = rows.empty() ? 0.0 : sum / static_cast<double>(rows.size());
  s.rows = std::move(rows);
  return s;
}

}  // namespace

std::vector<Rational> census_targets(long max_t) {
  std::vector<Rational> out;
  for (long t = 2; t <= max_t; ++t) {
    for (long c = 1; c < t; ++c) {
      if (std::gcd(c, t) == 1) out.emplace_back(c, t);
    }
  }
  return out;
}

CensusRow census_row(const Rational& c_over_t, const ConstructorConfig& config) {
  CensusRow row;
  row.t = c_over_t.den().get_si();
  row.c = c_over_t.num().get_si();
  try {
    const Certificate cert = realize(c_over_t, config);
    row.strategy = cert.strategy;
    row.v_count = cert.v_count;
    row.e_count = cert.e_count;
    row.bound_value = cert.bound_value;
    row.size_ratio = cert.size_ratio;
    row.all_pass = cert.all_pass();
    for (const Audit& a : cert.audits) {
      if (!a.pass) row.failures.push_back(a.name);
    }
  } catch (const std::exception& e) {
    row.all_pass = false;
    row.failures.push_back(std::string("exception: ") + e.what());
  }
  return row;
}

CensusSummary census(const std::vector<Rational>& targets, const ConstructorConfig& config, int threads) {
  std::vector<CensusRow> rows(targets.size());
  const auto count = static_cast<std::ptrdiff_t>(targets.size());
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(team)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    rows[static_cast<std::size_t>(i)] = census_row(targets[static_cast<std::size_t>(i)], config);
  }
  return summarize(std::move(rows));
}

CensusSummary census_serial(const std::vector<Rational>& targets, const ConstructorConfig& config) {
  std::vector<CensusRow> rows;
  rows.reserve(targets.size());
  for (const Rational& q : targets) rows.push_back(census_row(q, config));
  return summarize(std::move(rows));
}

}  // namespace effres
