#include "doctest.h"

#include "effres/census.hpp"
#include "effres/constructor.hpp"
#include "effres/continued_fraction.hpp"
#include "effres/tau.hpp"
#include "support.hpp"

using namespace effres;
using effres::testing::Rng;

namespace {

Rational oracle_zeta(const MarkedSP& g) { return zeta_graph(materialize(g)); }

bool simple_and_proper(const MarkedSP& g) {
  const MarkedGraph m = materialize(g);
  return is_simple(m) && is_proper(m);
}

ConstructorConfig small_config() {
  ConstructorConfig c;
  c.budget.max_den = 64;
  return c;
}

}  // namespace

TEST_CASE("config constants") {
  ConstructorConfig c;
  CHECK(c.c1() == Rational(9));
  CHECK(c.c2() == Rational(16 * 81 + 72 * 9 + 77));
  c.c0_hat = Rational(1, 2);
  CHECK(c.c1() == Rational(7));
  c.c0_hat = Rational(0);
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK(parse_strategy("mid") == Strategy::mid);
  CHECK(to_string(Strategy::portfolio) == "portfolio");
  CHECK_THROWS_AS(parse_strategy("fast"), std::invalid_argument);
}

TEST_CASE("cf_graph") {
  const MarkedSP g37 = cf_graph(Rational(3, 7));
  CHECK(g37.to_string() == "S(L,L,P(L,L,L))");
  CHECK(g37.edge_count() == 6);
  CHECK(oracle_zeta(g37) == Rational(3, 7));

  CHECK(cf_graph(Rational(1)) == MarkedSP::leaf());
  CHECK(cf_graph(Rational(1)).edge_count() == 2);

  const MarkedSP g73 = cf_graph(Rational(7, 3));
  CHECK(g73.to_string() == "P(S(L,L,L),L,L)");
  CHECK(g73.edge_count() == 6);
  const MarkedGraph m = materialize(g73);
  CHECK(tau_delete(m) == 7);
  CHECK(tau_contract(m) == 3);

  CHECK_THROWS_AS(cf_graph(Rational(0)), std::domain_error);
  CHECK_THROWS_AS(cf_graph(Rational(-2, 3)), std::domain_error);

  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const Rational q = effres::testing::random_rational(rng, 60, 0, 4);
    if (q.is_zero()) continue;
    const MarkedSP g = cf_graph(q);
    CHECK(g.edge_count() == partial_quotient_sum(q) + 1);
    CHECK(oracle_zeta(g) == q);
  }
}

TEST_CASE("graph_sum") {
  const std::vector<Rational> halves{Rational(1, 2), Rational(1, 2)};
  const MarkedSP two = graph_sum(halves);
  CHECK(two.edge_count() == 17);
  CHECK(oracle_zeta(two) == Rational(1));
  CHECK(simple_and_proper(two));

  const std::vector<Rational> one{Rational(1)};
  const MarkedGraph m = materialize(graph_sum(one));
  CHECK(m.edge_count() == 5);
  CHECK(tau_delete(m) == 4);
  CHECK(tau_contract(m) == 4);
  CHECK(tau(m) == 8);

  const std::vector<Rational> seven{Rational(3, 7)};
  CHECK(graph_sum(seven).edge_count() == 21);
  CHECK(oracle_zeta(graph_sum(seven)) == Rational(3, 7));
  // Conditional simplification leaves an already simple sum alone.
  CHECK_FALSE(cf_graph(Rational(3, 7)).materializes_simple());
  CHECK(graph_sum(seven, false) == simplify(cf_graph(Rational(3, 7))));
  const std::vector<Rational> three_fifths{Rational(3, 5)};
  CHECK(graph_sum(three_fifths, false) == cf_graph(Rational(3, 5)));
  CHECK(graph_sum(three_fifths, false).edge_count() == 5);

  CHECK_THROWS_AS(graph_sum(std::vector<Rational>{}), std::domain_error);
  const std::vector<Rational> neg{Rational(1, 2), Rational(-1, 3)};
  CHECK_THROWS_AS(graph_sum(neg), std::domain_error);
}

TEST_CASE("shift construction") {
  const Decomposition zero = decompose_trivial(Rational(0));
  const auto five = shifted_parts(Rational(5), zero);
  CHECK(five == std::vector<Rational>{Rational(5)});
  CHECK(oracle_zeta(realize_large(Rational(5), zero, false)) == Rational(5));

  const Decomposition half = decompose_trivial(Rational(1, 2));
  CHECK(shifted_parts(Rational(7, 2), half) == std::vector<Rational>{Rational(7, 2)});
  CHECK(oracle_zeta(realize_large(Rational(7, 2), half, true)) == Rational(7, 2));

  Decomposition three;
  three.target = Rational(1, 3);
  three.parts = {Rational(1, 2), Rational(-1, 3), Rational(1, 6)};
  three.cost = decomposition_cost(three.parts);
  const auto parts = shifted_parts(Rational(16, 3), three);  // floor 5, k = 3
  CHECK(parts == std::vector<Rational>{Rational(7, 2), Rational(2, 3), Rational(7, 6)});

  // floor(d/c) = 2 < k = 3 forces a merge.
  const auto merged = shifted_parts(Rational(7, 3), three);
  CHECK(merged.size() == 2);
  Rational total(0);
  for (const Rational& q : merged) {
    CHECK(q.sign() > 0);
    total += q;
  }
  CHECK(total == Rational(7, 3));

  CHECK_THROWS_AS(realize_large(Rational(1, 2), ConstructorConfig{}), std::domain_error);
  CHECK_THROWS_AS(shifted_parts(Rational(7, 2), zero), std::invalid_argument);
}

TEST_CASE("merge_parts") {
  Decomposition d;
  d.target = Rational(1, 3);
  d.parts = {Rational(1, 2), Rational(-1, 3), Rational(1, 6)};
  d.cost = decomposition_cost(d.parts);
  const Decomposition one = merge_parts(d, 1);
  CHECK(one.parts == std::vector<Rational>{Rational(1, 3)});
  CHECK(is_valid(one));
  CHECK(is_valid(merge_parts(d, 2)));
  CHECK(merge_parts(d, 2).terms() == 2);

  // Only possible when the parts do not sum into [0,1).
  Decomposition stuck;
  stuck.target = Rational(3, 2);
  stuck.parts = {Rational(3, 4), Rational(3, 4)};
  stuck.cost = decomposition_cost(stuck.parts);
  CHECK_THROWS_AS(merge_parts(stuck, 1), std::domain_error);
}

TEST_CASE("mid windows") {
  Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const Rational q = effres::testing::random_rational(rng, 500, 1, 20);
    const std::int64_t k = effres::testing::uniform(rng, 2, 40);
    const Rational step(1, static_cast<long>(k));
    int hits = 0;
    for (std::int64_t l = 0; l < k; ++l) {
      const Rational w = (q - Rational(static_cast<long>(l)) * step).frac();
      hits += w >= step && w < step * Rational(2);
    }
    CHECK(hits == 1);
    const MidWindow w = mid_window(q, k);
    CHECK(w.inner >= step);
    CHECK(w.inner < step * Rational(2));
    CHECK((w.remainder * Rational(static_cast<long>(k))).is_integer());
    CHECK(w.remainder.sign() > 0);
    CHECK(w.inner + w.remainder == q);
  }
  CHECK_THROWS_AS(mid_window(Rational(3, 2), 1), std::invalid_argument);

  const ConstructorConfig cfg = small_config();
  // c + d = 5: bitlen 3, K = 4 * 9 * 3.
  CHECK(mid_window_count(Rational(3, 2), cfg) == 108);
  for (std::int64_t k : {2, 3, 4, 108}) {
    const MarkedSP g = realize_mid(Rational(3, 2), k, cfg);
    CHECK(oracle_zeta(g) == Rational(3, 2));
    CHECK(simple_and_proper(g));
  }
  CHECK_THROWS_AS(realize_mid(Rational(1, 2), cfg), std::domain_error);
}

TEST_CASE("small route") {
  const ConstructorConfig cfg = small_config();
  for (const Rational& q : {Rational(1, 2), Rational(3, 7), Rational(5, 13), Rational(1, 9)}) {
    const MarkedSP g = realize_small(q, cfg);
    CHECK(oracle_zeta(g) == q);
    CHECK(simple_and_proper(g));
    CHECK(dual(dual(g)) == g);
  }
  CHECK_THROWS_AS(realize_small(Rational(3, 2), cfg), std::domain_error);
  CHECK_THROWS_AS(realize_small(Rational(0), cfg), std::domain_error);
}

TEST_CASE("realize") {
  const Certificate two_thirds = realize(Rational(2, 3), ConstructorConfig{});
  CHECK(two_thirds.resistance == Rational(2, 3));
  CHECK(two_thirds.all_pass());
  CHECK(two_thirds.v_count == 3);  // the triangle
  const Certificate half = realize(Rational(1, 2), ConstructorConfig{});
  CHECK(half.resistance == Rational(1, 2));
  CHECK(half.all_pass());
  CHECK_THROWS_AS(realize(Rational(1), ConstructorConfig{}), std::domain_error);
  CHECK_THROWS_AS(realize(Rational(0), ConstructorConfig{}), std::domain_error);
  CHECK_THROWS_AS(realize(Rational(1, 3), ConstructorConfig{}, Strategy::small), std::domain_error);
  CHECK_THROWS_AS(realize(Rational(2, 3), ConstructorConfig{}, Strategy::large), std::domain_error);
}

TEST_CASE("every applicable route is exact") {
  const ConstructorConfig cfg = small_config();
  for (const Rational& target : {Rational(1, 7), Rational(3, 11), Rational(5, 8), Rational(17, 19), Rational(2, 45)}) {
    for (Strategy s : {Strategy::direct, Strategy::large, Strategy::mid, Strategy::small}) {
      try {
        const Certificate c = realize(target, cfg, s);
        CHECK(c.resistance == target);
        CHECK(c.all_pass());
        CHECK(c.strategy == s);
      } catch (const std::domain_error&) {
        // route not applicable to this target
      }
    }
  }
}

TEST_CASE("certificate audits") {
  const Certificate cert = realize(Rational(3, 7), small_config());
  CHECK(cert.graph == materialize(cert.term));
  CHECK(cert.tau_g == cert.tau_del + cert.tau_con);
  CHECK(cert.zeta == Rational(cert.tau_del, cert.tau_con));
  CHECK(cert.resistance == Rational(cert.tau_con, cert.tau_g));
  CHECK(cert.size_ratio == Rational(static_cast<long>(cert.v_count)) / cert.bound_value);
  const auto audits = verify_certificate(cert);
  CHECK(all_pass(audits));
  CHECK(audits.size() == cert.audits.size());

  Certificate tampered = cert;
  tampered.tau_g += 1;
  CHECK_FALSE(all_pass(verify_certificate(tampered)));
  tampered = cert;
  tampered.target = Rational(2, 7);
  CHECK_FALSE(all_pass(verify_certificate(tampered)));

  const MarkedGraph triangle{3, {{0, 2}, {2, 1}, {0, 1}}, 2};
  CHECK(all_pass(audit_graph(triangle, Rational(2, 3))));
  const MarkedGraph k4{4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 1}}, 5};
  CHECK(all_pass(audit_graph(k4, Rational(1, 2))));
  // A multigraph fails the simplicity audit even at the right resistance.
  const MarkedGraph bundle{2, {{0, 1}, {0, 1}}, 1};
  CHECK_FALSE(all_pass(audit_graph(bundle, Rational(1, 2))));
}

TEST_CASE("unconditional simplification edge counts") {
  ConstructorConfig cfg = small_config();
  cfg.unconditional_simplify = true;
  const MarkedSP g = realize_large(Rational(7, 2), cfg);
  CHECK((g.edge_count() - 1) % 4 == 0);
  CHECK(oracle_zeta(g) == Rational(7, 2));
}

TEST_CASE("census") {
  CHECK(census_targets(3) == std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(2, 3)});
  CHECK(census_targets(50).size() == static_cast<std::size_t>(effres::testing::totient_sum(50)));
  const auto targets = census_targets(12);
  const CensusSummary par = census(targets, ConstructorConfig::census_defaults(), 2);
  const CensusSummary ser = census_serial(targets, ConstructorConfig::census_defaults());
  CHECK(par.failures == 0);
  REQUIRE(par.rows.size() == ser.rows.size());
  for (std::size_t i = 0; i < par.rows.size(); ++i) {
    CHECK(par.rows[i].t == ser.rows[i].t);
    CHECK(par.rows[i].c == ser.rows[i].c);
    CHECK(par.rows[i].v_count == ser.rows[i].v_count);
    CHECK(par.rows[i].size_ratio == ser.rows[i].size_ratio);
  }
  CHECK(par.max_ratio == ser.max_ratio);
}
