#pragma once

#include <span>
#include <string>
#include <vector>

#include "effres/marked_graph.hpp"
#include "effres/rational.hpp"

namespace effres {

/// Named pass/fail check with both sides of the inequality as exact text.
struct Audit {
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

bool all_pass(std::span<const Audit> audits);

/// Constant in the vertex lower bound for simple planar graphs.
Rational lower_bound_constant();  // 3/5
/// tau(G) < (523/100)^|V| for planar G.
Rational tau_growth_base();  // 523/100

/// 3/5 * max{t/c, t/(t-c), bitlen(t) - 1}; bitlen(t) - 1 = floor(log2 t) under-approximates log t.
/// Throws std::domain_error unless 0 < c/t < 1.
Rational lower_bound_value(const Rational& c_over_t);

/// max{t/c, t/(t-c), bitlen(t)}; bitlen(t) over-approximates log2 t. Used as the
/// denominator of the measured size ratio.
Rational size_bound_value(const Rational& c_over_t);

/// I(G,e) >= (1/deg x + 1/deg y) / 2.
Audit check_commute_bound(const MarkedGraph& g, const Rational& resistance);
Audit check_commute_bound(const MarkedGraph& g);

/// |E| <= 3|V| - 6, |F| = |E| - |V| + 2 <= 2|V| - 4, tau < 2^|E|, tau < 2^(3|V|).
/// Requires |V| >= 3 (std::invalid_argument otherwise).
std::vector<Audit> check_planar_simple_bounds(const MarkedGraph& g, const BigInt& tau_g);
std::vector<Audit> check_planar_simple_bounds(const MarkedGraph& g);

/// tau(G) < (523/100)^|V|, compared as tau * 100^|V| < 523^|V|.
Audit check_tau_growth(const MarkedGraph& g, const BigInt& tau_g);
Audit check_tau_growth(const MarkedGraph& g);

/// |V| >= lower_bound_value(c/t).
Audit check_lower_bound(std::size_t vertices, const Rational& c_over_t);

/// |V| > t/c and |V| > t/(2(t-c)).
std::vector<Audit> check_vertex_chain(std::size_t vertices, const Rational& c_over_t);

}  // namespace effres
