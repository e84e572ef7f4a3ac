#include "effres/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "effres/tau.hpp"

namespace effres {

namespace {

void check_open_unit(const Rational& c_over_t) {
  if (c_over_t.sign() <= 0 || c_over_t >= Rational(1)) {
    throw std::domain_error("target c/t must lie in (0,1), got " + c_over_t.to_string());
  }
}

Audit make(std::string name, bool pass, const Rational& lhs, const Rational& rhs) {
  return Audit{std::move(name), pass, lhs.to_string(), rhs.to_string()};
}

BigInt pow_ui(long base, std::size_t e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

}  // namespace

bool all_pass(std::span<const Audit> audits) {
  return std::all_of(audits.begin(), audits.end(), [](const Audit& a) { return a.pass; });
}

Rational lower_bound_constant() { return Rational(3, 5); }
Rational tau_growth_base() { return Rational(523, 100); }

Rational lower_bound_value(const Rational& c_over_t) {
  check_open_unit(c_over_t);
  const BigInt& c = c_over_t.num();
  const BigInt& t = c_over_t.den();
  const Rational log_floor(static_cast<long>(bit_length(t)) - 1);
  return lower_bound_constant() * max_of({Rational(t, c), Rational(t, t - c), log_floor});
}

Rational size_bound_value(const Rational& c_over_t) {
  check_open_unit(c_over_t);
  const BigInt& c = c_over_t.num();
  const BigInt& t = c_over_t.den();
  const Rational log_ceil(static_cast<long>(bit_length(t)));
  return max_of({Rational(t, c), Rational(t, t - c), log_ceil});
}

Audit check_commute_bound(const MarkedGraph& g, const Rational& resistance) {
  const auto deg = g.degrees();
  const auto [x, y] = g.marked_edge();
  const Rational rhs = (Rational(1, deg[x]) + Rational(1, deg[y])) * Rational(1, 2);
  return make("commute_time_bound", resistance >= rhs, resistance, rhs);
}

Audit check_commute_bound(const MarkedGraph& g) { return check_commute_bound(g, eff_resistance(g)); }

std::vector<Audit> check_planar_simple_bounds(const MarkedGraph& g, const BigInt& tau_g) {
  if (g.n < 3) throw std::invalid_argument("planar edge bounds need at least 3 vertices");
  const long v = g.n;
  const long e = static_cast<long>(g.edge_count());
  const long faces = e - v + 2;
  std::vector<Audit> out;
  out.push_back(make("euler_edges", e <= 3 * v - 6, Rational(e), Rational(3 * v - 6)));
  out.push_back(make("euler_faces", faces <= 2 * v - 4, Rational(faces), Rational(2 * v - 4)));
  const BigInt two_e = pow_ui(2, static_cast<std::size_t>(e));
  out.push_back(Audit{"tau_below_2_pow_E", tau_g < two_e, tau_g.get_str(), "2^" + std::to_string(e)});
  const BigInt two_3v = pow_ui(2, static_cast<std::size_t>(3 * v));
  out.push_back(Audit{"tau_below_8_pow_V", tau_g < two_3v, tau_g.get_str(), "2^" + std::to_string(3 * v)});
  return out;
}

std::vector<Audit> check_planar_simple_bounds(const MarkedGraph& g) {
  return check_planar_simple_bounds(g, tau(g));
}

Audit check_tau_growth(const MarkedGraph& g, const BigInt& tau_g) {
  const std::size_t v = g.vertex_count();
  const bool pass = tau_g * pow_ui(100, v) < pow_ui(523, v);
  return Audit{"tau_growth_523", pass, tau_g.get_str(), "(523/100)^" + std::to_string(v)};
}

Audit check_tau_growth(const MarkedGraph& g) { return check_tau_growth(g, tau(g)); }

Audit check_lower_bound(std::size_t vertices, const Rational& c_over_t) {
  const Rational bound = lower_bound_value(c_over_t);
  const Rational v(static_cast<long>(vertices));
  return make("vertex_lower_bound", v >= bound, v, bound);
}

std::vector<Audit> check_vertex_chain(std::size_t vertices, const Rational& c_over_t) {
  check_open_unit(c_over_t);
  const BigInt& c = c_over_t.num();
  const BigInt& t = c_over_t.den();
  const Rational v(static_cast<long>(vertices));
  const Rational first(t, c);
  const Rational second = Rational(t, t - c) * Rational(1, 2);
  return {make("vertex_bound_resistance", v > first, v, first),
          make("vertex_bound_dual", v > second, v, second)};
}

}  // namespace effres
