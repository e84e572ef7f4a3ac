#include "effres/constructor.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "effres/continued_fraction.hpp"
#include "effres/tau.hpp"

namespace effres {

namespace {

constexpr std::string_view kStrategyNames[] = {"direct", "large", "mid", "small", "portfolio"};

std::size_t to_count(const BigInt& v) {
  if (sgn(v) < 0 || !v.fits_ulong_p()) {
    throw std::length_error("partial quotient too large to build: " + v.get_str());
  }
  return v.get_ui();
}

void require_at_least_one(const Rational& d_over_c, const char* route) {
  if (d_over_c < Rational(1)) {
    throw std::domain_error(std::string(route) + " route requires d/c >= 1, got " + d_over_c.to_string());
  }
}

struct Size {
  std::size_t v;
  std::size_t e;
  friend auto operator<=>(const Size&, const Size&) = default;
};

Size finished_size(const MarkedSP& raw, bool unconditional) {
  if (!unconditional && raw.materializes_simple()) return {raw.vertex_count(), raw.edge_count()};
  return {raw.vertex_count() + 2 * raw.leaves(), 4 * raw.leaves() + 1};
}

const MarkedSP& smallest(const std::vector<MarkedSP>& raws, bool unconditional) {
  if (raws.empty()) throw std::logic_error("no candidate constructions");
  std::size_t best = 0;
  for (std::size_t i = 1; i < raws.size(); ++i) {
    if (finished_size(raws[i], unconditional) < finished_size(raws[best], unconditional)) best = i;
  }
  return raws[best];
}

std::vector<std::int64_t> window_counts(const Rational& d_over_c, const ConstructorConfig& config) {
  std::set<std::int64_t> ks;
  ks.insert(mid_window_count(d_over_c, config));
  for (std::int64_t k : config.mid_windows) {
    if (k >= 2) ks.insert(k);
  }
  return {ks.begin(), ks.end()};
}

std::vector<MarkedSP> large_candidates(const Rational& d_over_c, const ConstructorConfig& config) {
  require_at_least_one(d_over_c, "large");
  const BigInt whole = d_over_c.floor();
  DecomposerBudget budget = config.budget;
  if (whole < budget.max_terms) budget.max_terms = static_cast<int>(whole.get_si());
  const Decomposition frac = decompose_search(d_over_c.frac(), budget);
  return {graph_sum_raw(shifted_parts(d_over_c, frac))};
}

std::vector<MarkedSP> mid_candidates(const Rational& d_over_c, std::int64_t windows,
                                     const ConstructorConfig& config) {
  require_at_least_one(d_over_c, "mid");
  const MidWindow w = mid_window(d_over_c, windows);
  const Rational inner_ratio = w.inner.reciprocal();  // c'/d' >= K/2 >= 1
  const MarkedSP tail = cf_graph(w.remainder);
  std::vector<MarkedSP> out;
  out.push_back(marked_sum(dual(cf_graph(inner_ratio)), tail));
  for (const MarkedSP& inner : large_candidates(inner_ratio, config)) {
    out.push_back(marked_sum(dual(inner), tail));
  }
  return out;
}

std::vector<MarkedSP> mid_candidates_all(const Rational& d_over_c, const ConstructorConfig& config) {
  std::vector<MarkedSP> out;
  for (std::int64_t k : window_counts(d_over_c, config)) {
    for (MarkedSP& m : mid_candidates(d_over_c, k, config)) out.push_back(std::move(m));
  }
  return out;
}

std::vector<MarkedSP> small_candidates(const Rational& d_over_c, const ConstructorConfig& config) {
  if (d_over_c.sign() <= 0 || d_over_c >= Rational(1)) {
    throw std::domain_error("small route requires 0 < d/c < 1, got " + d_over_c.to_string());
  }
  const Rational flipped = d_over_c.reciprocal();
  std::vector<MarkedSP> inner{cf_graph(flipped)};
  for (MarkedSP& m : large_candidates(flipped, config)) inner.push_back(std::move(m));
  for (MarkedSP& m : mid_candidates_all(flipped, config)) inner.push_back(std::move(m));
  std::vector<MarkedSP> out;
  out.reserve(inner.size());
  for (const MarkedSP& m : inner) out.push_back(dual(m));
  return out;
}

Audit make_audit(std::string name, bool pass, std::string lhs, std::string rhs) {
  return Audit{std::move(name), pass, std::move(lhs), std::move(rhs)};
}

std::vector<Audit> graph_audits(const MarkedGraph& graph, const Rational& c_over_t, const TauTriple& t) {
  std::vector<Audit> out;
  const bool connected = sgn(t.whole) > 0;
  const Rational resistance = connected ? Rational(t.contracted, t.whole) : Rational(0);

  out.push_back(make_audit("resistance_exact", connected && resistance == c_over_t,
                           connected ? resistance.to_string() : "undefined", c_over_t.to_string()));
  out.push_back(make_audit("deletion_contraction", t.deleted + t.contracted == t.whole,
                           BigInt(t.deleted + t.contracted).get_str(), t.whole.get_str()));
  out.push_back(make_audit("simple", is_simple(graph), is_simple(graph) ? "simple" : "multi-edge", "simple"));
  const bool proper = is_proper(graph);
  out.push_back(make_audit("proper", proper, proper ? "proper" : "bridge or disconnected", "proper"));
  if (connected) {
    out.push_back(check_commute_bound(graph, resistance));
  } else {
    out.push_back(make_audit("commute_time_bound", false, "undefined", "connected graph required"));
  }
  if (graph.n >= 3) {
    for (Audit& a : check_planar_simple_bounds(graph, t.whole)) out.push_back(std::move(a));
  } else {
    out.push_back(make_audit("euler_edges", false, std::to_string(graph.n) + " vertices", ">= 3 vertices"));
  }
  out.push_back(check_tau_growth(graph, t.whole));
  if (c_over_t.sign() > 0 && c_over_t < Rational(1)) {
    out.push_back(check_lower_bound(graph.vertex_count(), c_over_t));
    for (Audit& a : check_vertex_chain(graph.vertex_count(), c_over_t)) out.push_back(std::move(a));
  } else {
    out.push_back(make_audit("vertex_lower_bound", false, c_over_t.to_string(), "target in (0,1)"));
  }
  return out;
}

std::vector<Audit> term_audits(const Certificate& cert, const TauTriple& t) {
  std::vector<Audit> out;
  out.push_back(make_audit("graph_matches_term", materialize(cert.term) == cert.graph, cert.term.to_string(),
                           "materialized graph"));
  const bool proper = sgn(t.deleted) > 0 && sgn(t.contracted) > 0;
  const Rational oracle_zeta = proper ? Rational(t.deleted, t.contracted) : Rational(0);
  out.push_back(make_audit("zeta_matches_term", proper && oracle_zeta == zeta_sp(cert.term),
                           proper ? oracle_zeta.to_string() : "undefined", zeta_sp(cert.term).to_string()));
  const bool stored = cert.tau_g == t.whole && cert.tau_del == t.deleted && cert.tau_con == t.contracted &&
                      cert.zeta == oracle_zeta && proper && cert.resistance == Rational(t.contracted, t.whole) &&
                      cert.v_count == cert.graph.vertex_count() && cert.e_count == cert.graph.edge_count();
  out.push_back(make_audit("stored_values", stored, "certificate fields", "recomputed values"));
  return out;
}

}  // namespace

std::string_view to_string(Strategy s) { return kStrategyNames[static_cast<int>(s)]; }

Strategy parse_strategy(std::string_view name) {
  for (int i = 0; i < 5; ++i) {
    if (kStrategyNames[i] == name) return static_cast<Strategy>(i);
  }
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

void ConstructorConfig::validate() const {
  if (c0_hat.sign() <= 0) throw std::invalid_argument("c0_hat must be positive");
  if (portfolio.empty()) throw std::invalid_argument("empty strategy portfolio");
}

ConstructorConfig ConstructorConfig::census_defaults() {
  ConstructorConfig c;
  c.budget.max_den = 64;
  c.budget.max_quotient = 4;
  c.budget.max_terms = 3;
  return c;
}

MarkedSP cf_graph(const Rational& d_over_c) {
  if (d_over_c.sign() <= 0) {
    throw std::domain_error("cf_graph requires d/c > 0, got " + d_over_c.to_string());
  }
  // Even length puts a duplication innermost; subdividing the bare seed would be a no-op.
  const ContinuedFraction cf = cf_normalize_parity(cf_from_rational(d_over_c), true);
  MarkedSP term = single_edge();
  for (std::size_t i = cf.length() + 1; i-- > 0;) {
    const std::size_t k = to_count(cf.at(i));
    term = (i % 2 == 0) ? k_duplicate(term, k) : k_subdivide(term, k);
  }
  return term;
}

MarkedSP graph_sum_raw(std::span<const Rational> parts) {
  if (parts.empty()) throw std::domain_error("graph_sum needs at least one part");
  std::vector<MarkedSP> graphs;
  graphs.reserve(parts.size());
  for (const Rational& q : parts) {
    if (q.sign() <= 0) throw std::domain_error("graph_sum parts must be positive, got " + q.to_string());
    graphs.push_back(cf_graph(q));
  }
  return MarkedSP::parallel(std::move(graphs));
}

MarkedSP graph_sum(std::span<const Rational> parts, bool unconditional) {
  return finish_simple(graph_sum_raw(parts), unconditional);
}

MarkedSP finish_simple(const MarkedSP& raw, bool unconditional) {
  if (!unconditional && raw.materializes_simple()) return raw;
  return simplify(raw);
}

Decomposition merge_parts(Decomposition d, std::size_t max_terms) {
  if (max_terms == 0) throw std::invalid_argument("merge_parts: max_terms must be positive");
  while (d.parts.size() > max_terms) {
    std::size_t pick = d.parts.size();
    BigInt pick_cost;
    for (std::size_t i = 0; i + 1 < d.parts.size(); ++i) {
      const Rational merged = d.parts[i] + d.parts[i + 1];
      if (merged.abs() >= Rational(1)) continue;
      const BigInt cost = partial_quotient_sum(merged.abs());
      if (pick == d.parts.size() || cost < pick_cost) {
        pick = i;
        pick_cost = cost;
      }
    }
    if (pick == d.parts.size()) {
      throw std::domain_error("no adjacent parts can be merged inside (-1,1)");
    }
    d.parts[pick] += d.parts[pick + 1];
    d.parts.erase(d.parts.begin() + static_cast<std::ptrdiff_t>(pick) + 1);
    if (d.parts[pick].is_zero()) d.parts.erase(d.parts.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  d.cost = decomposition_cost(d.parts);
  return d;
}

std::vector<Rational> shifted_parts(const Rational& d_over_c, const Decomposition& fractional) {
  require_at_least_one(d_over_c, "large");
  if (fractional.target != d_over_c.frac()) {
    throw std::invalid_argument("decomposition target " + fractional.target.to_string() +
                                " is not the fractional part of " + d_over_c.to_string());
  }
  const BigInt whole = d_over_c.floor();
  Decomposition d = fractional;
  if (whole < static_cast<unsigned long>(d.parts.size())) d = merge_parts(std::move(d), to_count(whole));
  std::vector<Rational> primed = d.parts;
  if (primed.empty()) primed.emplace_back(0);
  const auto k = static_cast<long>(primed.size());

  std::vector<Rational> out;
  out.reserve(primed.size());
  out.push_back(Rational(whole) - Rational(k) + Rational(1) + primed.front());
  for (std::size_t i = 1; i < primed.size(); ++i) out.push_back(Rational(1) + primed[i]);
  return out;
}

MarkedSP realize_large(const Rational& d_over_c, const ConstructorConfig& config) {
  return finish_simple(smallest(large_candidates(d_over_c, config), config.unconditional_simplify),
                       config.unconditional_simplify);
}

MarkedSP realize_large(const Rational& d_over_c, const Decomposition& fractional, bool unconditional) {
  return finish_simple(graph_sum_raw(shifted_parts(d_over_c, fractional)), unconditional);
}

std::int64_t mid_window_count(const Rational& d_over_c, const ConstructorConfig& config) {
  const BigInt size = d_over_c.num() + d_over_c.den();
  const Rational scaled = config.c1() * Rational(static_cast<long>(bit_length(size)));
  BigInt ceil = scaled.floor();
  if (!scaled.is_integer()) ceil += 1;
  if (!ceil.fits_slong_p() || ceil.get_si() > std::numeric_limits<std::int64_t>::max() / 4) {
    throw std::length_error("window count overflow");
  }
  return 4 * ceil.get_si();
}

MidWindow mid_window(const Rational& d_over_c, std::int64_t windows) {
  if (windows < 2) throw std::invalid_argument("mid_window needs K >= 2");
  const Rational step(1, static_cast<long>(windows));
  const Rational x = d_over_c.frac();
  const Rational u = (x - step).frac();
  const BigInt shift = (u * Rational(static_cast<long>(windows))).floor();
  MidWindow w;
  w.shift = shift.get_si();
  w.inner = (x - Rational(shift) * step).frac();
  w.remainder = d_over_c - w.inner;
  if (w.inner < step || w.inner >= step * Rational(2)) throw std::logic_error("mid window selection is off");
  return w;
}

MarkedSP realize_mid(const Rational& d_over_c, std::int64_t windows, const ConstructorConfig& config) {
  return finish_simple(smallest(mid_candidates(d_over_c, windows, config), config.unconditional_simplify),
                       config.unconditional_simplify);
}

MarkedSP realize_mid(const Rational& d_over_c, const ConstructorConfig& config) {
  return realize_mid(d_over_c, mid_window_count(d_over_c, config), config);
}

MarkedSP realize_small(const Rational& d_over_c, const ConstructorConfig& config) {
  return finish_simple(smallest(small_candidates(d_over_c, config), config.unconditional_simplify),
                       config.unconditional_simplify);
}

Certificate certify(const Rational& c_over_t, const MarkedSP& term, Strategy strategy) {
  Certificate cert;
  cert.target = c_over_t;
  cert.term = term;
  cert.graph = materialize(term);
  const TauTriple t = tau_triple(cert.graph);
  cert.tau_g = t.whole;
  cert.tau_del = t.deleted;
  cert.tau_con = t.contracted;
  if (sgn(t.deleted) > 0 && sgn(t.contracted) > 0) cert.zeta = Rational(t.deleted, t.contracted);
  if (sgn(t.whole) > 0) cert.resistance = Rational(t.contracted, t.whole);
  cert.v_count = cert.graph.vertex_count();
  cert.e_count = cert.graph.edge_count();
  cert.bound_value = size_bound_value(c_over_t);
  cert.size_ratio = Rational(static_cast<long>(cert.v_count)) / cert.bound_value;
  cert.strategy = strategy;
  cert.audits = graph_audits(cert.graph, c_over_t, t);
  for (Audit& a : term_audits(cert, t)) cert.audits.push_back(std::move(a));
  return cert;
}

Certificate realize(const Rational& c_over_t, const ConstructorConfig& config, Strategy strategy) {
  config.validate();
  if (c_over_t.sign() <= 0 || c_over_t >= Rational(1)) {
    throw std::domain_error("target must be a reduced fraction c/t with t > c >= 1, got " + c_over_t.to_string());
  }
  const Rational d_over_c = Rational(c_over_t.den() - c_over_t.num(), c_over_t.num());
  const bool at_least_one = d_over_c >= Rational(1);

  const std::vector<Strategy> routes =
      strategy == Strategy::portfolio ? config.portfolio : std::vector<Strategy>{strategy};

  struct Candidate {
    MarkedSP raw;
    Strategy strategy;
    Size size;
    std::size_t order;
  };
  std::vector<Candidate> candidates;
  auto add = [&](std::vector<MarkedSP> raws, Strategy s) {
    for (MarkedSP& r : raws) {
      const Size sz = finished_size(r, config.unconditional_simplify);
      candidates.push_back({std::move(r), s, sz, candidates.size()});
    }
  };
  for (Strategy s : routes) {
    switch (s) {
      case Strategy::direct:
        add({cf_graph(d_over_c)}, s);
        break;
      case Strategy::large:
        if (at_least_one) add(large_candidates(d_over_c, config), s);
        break;
      case Strategy::mid:
        if (at_least_one) add(mid_candidates_all(d_over_c, config), s);
        break;
      case Strategy::small:
        if (!at_least_one) add(small_candidates(d_over_c, config), s);
        break;
      case Strategy::portfolio:
        throw std::invalid_argument("portfolio cannot be nested in a portfolio");
    }
  }
  if (candidates.empty()) {
    throw std::domain_error("strategy '" + std::string(to_string(strategy)) + "' does not apply to d/c = " +
                            d_over_c.to_string());
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.order < b.order;
  });

  for (const Candidate& c : candidates) {
    Certificate cert = certify(c_over_t, finish_simple(c.raw, config.unconditional_simplify), c.strategy);
    if (cert.resistance == c_over_t) return cert;
  }
  throw std::logic_error("no candidate construction reproduced " + c_over_t.to_string());
}

std::vector<Audit> audit_graph(const MarkedGraph& graph, const Rational& c_over_t) {
  graph.validate();
  return graph_audits(graph, c_over_t, tau_triple(graph));
}

std::vector<Audit> verify_certificate(const Certificate& cert) {
  cert.graph.validate();
  const TauTriple t = tau_triple(cert.graph);
  std::vector<Audit> out = graph_audits(cert.graph, cert.target, t);
  for (Audit& a : term_audits(cert, t)) out.push_back(std::move(a));
  return out;
}

}  // namespace effres
