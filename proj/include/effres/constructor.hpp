#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "effres/bounds.hpp"
#include "effres/decomposer.hpp"
#include "effres/marked_graph.hpp"
#include "effres/rational.hpp"
#include "effres/sp_term.hpp"

namespace effres {

enum class Strategy { direct, large, mid, small, portfolio };

std::string_view to_string(Strategy s);
/// Throws std::invalid_argument on an unknown name.
Strategy parse_strategy(std::string_view name);

struct ConstructorConfig {
  /// Stand-in for the (unspecified) decomposition constant C0; must be > 0.
  Rational c0_hat{1};
  DecomposerBudget budget{};
  std::vector<Strategy> portfolio{Strategy::direct, Strategy::large, Strategy::mid, Strategy::small};
  /// Window counts K tried by the mid route in addition to 4 ceil(C1 log2(c+d)).
  std::vector<std::int64_t> mid_windows{2, 3, 4, 5, 6, 8, 12, 16};
  /// Simplify every construction, even when it is already simple.
  bool unconditional_simplify = false;

  Rational c1() const { return Rational(4) * c0_hat + Rational(5); }
  Rational c2() const { return Rational(16) * c1() * c1() + Rational(72) * c1() + Rational(77); }

  /// Throws std::invalid_argument on a non-positive c0_hat or an empty portfolio.
  void validate() const;

  /// Smaller decomposer budget used for bulk census runs.
  static ConstructorConfig census_defaults();
};

/// A realized construction together with independently recomputed values.
struct Certificate {
  Rational target;  // c/t
  MarkedGraph graph;
  MarkedSP term = MarkedSP::open();
  BigInt tau_g;
  BigInt tau_del;
  BigInt tau_con;
  Rational zeta;
  Rational resistance;
  std::size_t v_count = 0;
  std::size_t e_count = 0;
  Rational bound_value;  // max{t/c, t/(t-c), bitlen(t)}
  Rational size_ratio;   // v_count / bound_value
  Strategy strategy = Strategy::direct;
  std::vector<Audit> audits;

  bool all_pass() const { return effres::all_pass(audits); }
};

/// Marked graph with zeta = d/c and |E| = S(d/c) + 1, by alternating
/// duplications (even positions) and subdivisions (odd positions) of the
/// seed edge, innermost first. Throws std::domain_error for d/c <= 0.
MarkedSP cf_graph(const Rational& d_over_c);

/// Marked sum of cf_graph(q_i) without simplification: zeta = sum q_i,
/// |E| = sum S(q_i) + 1.
MarkedSP graph_sum_raw(std::span<const Rational> parts);

/// Marked sum of cf_graph(q_i) followed by simplification. With
/// unconditional = true the result has exactly 4 sum S(q_i) + 1 edges; otherwise
/// simplification only happens when the sum is not already simple.
MarkedSP graph_sum(std::span<const Rational> parts, bool unconditional = true);

/// Simplifies when the term is not simple (or always, if unconditional).
MarkedSP finish_simple(const MarkedSP& raw, bool unconditional);

/// Greedily merges adjacent parts (lowest merged S first, |sum| < 1 kept) until
/// at most max_terms remain. Throws std::domain_error if no merge is possible.
Decomposition merge_parts(Decomposition d, std::size_t max_terms);

/// Shifted parts q1 = floor(d/c) - k + 1 + q1', qi = 1 + qi' for a
/// decomposition of d/c mod 1 with k <= floor(d/c) terms (merging first if
/// needed). All returned parts are positive and sum to d/c.
std::vector<Rational> shifted_parts(const Rational& d_over_c, const Decomposition& fractional);

/// Large-ratio route (d/c >= 1): decompose d/c mod 1, shift, graph-sum.
/// Throws std::domain_error for d/c < 1.
MarkedSP realize_large(const Rational& d_over_c, const ConstructorConfig& config);
MarkedSP realize_large(const Rational& d_over_c, const Decomposition& fractional, bool unconditional);

/// K = 4 ceil(C1 * bitlen(c + d)).
std::int64_t mid_window_count(const Rational& d_over_c, const ConstructorConfig& config);

struct MidWindow {
  std::int64_t shift = 0;  // L
  Rational inner;          // d'/c' in [1/K, 2/K)
  Rational remainder;      // d/c - d'/c', a positive multiple of 1/K
};

/// The unique L in [0, K) with d/c - L/K in [1/K, 2/K) mod 1. Requires K >= 2.
MidWindow mid_window(const Rational& d_over_c, std::int64_t windows);

/// Mid-ratio route (d/c >= 1): realize c'/d', take the dual, marked-sum with
/// cf_graph(d/c - d'/c'), simplify. Throws std::domain_error for d/c < 1.
MarkedSP realize_mid(const Rational& d_over_c, std::int64_t windows, const ConstructorConfig& config);
MarkedSP realize_mid(const Rational& d_over_c, const ConstructorConfig& config);

/// Small-ratio route (0 < d/c < 1): realize c/d with the best of the other
/// routes, take the dual, simplify.
MarkedSP realize_small(const Rational& d_over_c, const ConstructorConfig& config);

/// Builds the certificate for a construction of zeta = (t-c)/c: materializes,
/// recomputes all tau values with the matrix-tree oracle, runs every audit.
Certificate certify(const Rational& c_over_t, const MarkedSP& term, Strategy strategy);

/// Realizes I(G,e) = c/t. Portfolio mode tries every applicable route and
/// returns the smallest verified graph. Throws std::domain_error unless
/// 0 < c/t < 1, and when a specifically requested route does not apply.
Certificate realize(const Rational& c_over_t, const ConstructorConfig& config,
                    Strategy strategy = Strategy::portfolio);

/// Audits of an arbitrary marked graph against a target resistance, recomputed
/// from the graph alone.
std::vector<Audit> audit_graph(const MarkedGraph& graph, const Rational& c_over_t);

/// audit_graph plus consistency of the certificate's stored term and values.
std::vector<Audit> verify_certificate(const Certificate& cert);

}  // namespace effres
