#include "doctest.h"

#include <algorithm>

#include "effres/marked_graph.hpp"
#include "effres/sp_term.hpp"
#include "effres/tau.hpp"
#include "support.hpp"

using namespace effres;
using effres::testing::Rng;

namespace {

const MarkedSP L = MarkedSP::leaf();
MarkedSP S(std::vector<MarkedSP> c) { return MarkedSP::series(std::move(c)); }
MarkedSP P(std::vector<MarkedSP> c) { return MarkedSP::parallel(std::move(c)); }

Rational oracle_zeta(const MarkedSP& g) { return zeta_graph(materialize(g)); }

// Same term with children shuffled at every node.
MarkedSP shuffled(const MarkedSP& g, Rng& rng) {
  if (g.kind() != MarkedSP::Kind::series && g.kind() != MarkedSP::Kind::parallel) return g;
  std::vector<MarkedSP> kids;
  for (const MarkedSP& c : g.children()) kids.push_back(shuffled(c, rng));
  std::shuffle(kids.begin(), kids.end(), rng);
  return g.kind() == MarkedSP::Kind::series ? S(std::move(kids)) : P(std::move(kids));
}

}  // namespace

TEST_CASE("single_edge seed") {
  const MarkedSP g = single_edge();
  CHECK(g.kind() == MarkedSP::Kind::open);
  CHECK(zeta_sp(g) == Rational(0));
  CHECK_FALSE(is_proper(g));
  const MarkedGraph m = materialize(g);
  CHECK(m.n == 2);
  CHECK(m.edges == std::vector<Edge>{{0, 1}});
  CHECK(m.marked == 0);
  CHECK_FALSE(is_proper(m));
}

TEST_CASE("k_duplicate") {
  const MarkedSP three = k_duplicate(single_edge(), 2);
  CHECK(three == P({L, L}));
  CHECK(zeta_sp(three) == Rational(2));
  const MarkedGraph m = materialize(three);
  CHECK(tau_bruteforce(m.n, edges_without_marked(m)) == 2);
  CHECK(tau_contract(m) == 1);

  Rng rng(3);
  const MarkedSP g = effres::testing::random_term(rng, 6);
  CHECK(k_duplicate(g, 0) == g);
  CHECK(k_duplicate(single_edge(), 1) == L);

  const MarkedSP half = S({L, L});
  const MarkedSP dup = k_duplicate(half, 1);
  CHECK(zeta_sp(dup) == Rational(3, 2));
  CHECK(oracle_zeta(dup) == Rational(3, 2));
  CHECK(dup.leaves() == half.leaves() + 1);

  CHECK_THROWS_AS(k_duplicate(k_subdivide(single_edge(), 1), 1), std::invalid_argument);
}

TEST_CASE("k_subdivide") {
  const MarkedSP triangle = k_subdivide(L, 1);
  CHECK(triangle == S({L, L}));
  CHECK(zeta_sp(triangle) == Rational(1, 2));
  const MarkedGraph c3 = materialize(triangle);
  CHECK(tau_bruteforce(c3.n, edges_without_marked(c3)) == 1);
  CHECK(tau_contract(c3) == 2);

  const MarkedSP path = k_subdivide(single_edge(), 1);
  CHECK(zeta_sp(path) == Rational(0));
  CHECK_FALSE(is_proper(path));
  const MarkedGraph pm = materialize(path);
  CHECK(pm.n == 3);
  CHECK(pm.edge_count() == 2);
  CHECK(tau(pm) == 1);

  const MarkedSP seven = k_subdivide(P({L, L, L}), 2);
  CHECK(zeta_sp(seven) == Rational(3, 7));
  CHECK(oracle_zeta(seven) == Rational(3, 7));
  CHECK(k_subdivide(seven, 0) == seven);
}

TEST_CASE("marked_sum") {
  const MarkedSP triangle = S({L, L});
  const MarkedSP sum = marked_sum(triangle, triangle);
  CHECK(zeta_sp(sum) == Rational(1));
  const MarkedGraph m = materialize(sum);
  CHECK(m.n == 4);
  CHECK(m.edge_count() == 5);
  CHECK(zeta_graph(m) == Rational(1));
  CHECK(sum.edge_count() == triangle.edge_count() + triangle.edge_count() - 1);
  CHECK(sum.vertex_count() == triangle.vertex_count() + triangle.vertex_count() - 2);

  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const MarkedSP g = effres::testing::random_term(rng, 1, 12);
    CHECK(oracle_zeta(marked_sum(g, L)) == zeta_sp(g) + Rational(1));
  }
  CHECK_THROWS_AS(marked_sum(single_edge(), L), std::invalid_argument);
}

TEST_CASE("dual") {
  const MarkedSP triangle = S({L, L});
  const MarkedSP d = dual(triangle);
  CHECK(d == P({L, L}));
  CHECK(oracle_zeta(d) == Rational(2));
  CHECK(oracle_zeta(triangle) == Rational(1, 2));
  CHECK(dual(L) == L);
  CHECK_THROWS_AS(dual(single_edge()), std::invalid_argument);

  Rng rng(9);
  for (int i = 0; i < 30; ++i) {
    const MarkedSP g = effres::testing::random_term(rng, 1, 14);
    CHECK(dual(dual(g)) == g);
    CHECK(tau(materialize(dual(g))) == tau(materialize(g)));
    CHECK(zeta_sp(dual(g)) * zeta_sp(g) == Rational(1));
  }
}

TEST_CASE("doubling, halving and simplification") {
  const MarkedSP s = simplify(L);
  const MarkedGraph m = materialize(s);
  CHECK(is_simple(m));
  CHECK(is_proper(m));
  CHECK(m.n == 4);
  CHECK(m.edge_count() == 5);
  CHECK(zeta_graph(m) == Rational(1));

  CHECK(zeta_sp(double_edges(S({L, L}))) == Rational(1));
  CHECK(zeta_sp(halve_edges(P({L, L}))) == Rational(1));
  CHECK_THROWS_AS(simplify(single_edge()), std::invalid_argument);

  Rng rng(13);
  for (int i = 0; i < 30; ++i) {
    const MarkedSP g = effres::testing::random_term(rng, 1, 10);
    const MarkedGraph base = materialize(g);
    const MarkedGraph doubled = materialize(double_edges(g));
    const BigInt pow_v1 = BigInt(1) << static_cast<mp_bitcnt_t>(base.n - 1);
    const BigInt pow_v2 = BigInt(1) << static_cast<mp_bitcnt_t>(base.n - 2);
    CHECK(tau_delete(doubled) == pow_v1 * tau_delete(base));
    CHECK(tau_contract(doubled) == pow_v2 * tau_contract(base));
    const MarkedSP sg = simplify(g);
    CHECK(sg.edge_count() == 4 * (g.edge_count() - 1) + 1);
    CHECK(is_simple(materialize(sg)));
    CHECK(zeta_sp(simplify(sg)) == zeta_sp(g));
  }
}

TEST_CASE("materialize and structural predicates") {
  const MarkedGraph tri = materialize(S({L, L}));
  CHECK(tri.n == 3);
  CHECK(tri.edge_count() == 3);
  CHECK(tri.marked == 2);
  CHECK(tri.marked_edge() == Edge{0, 1});

  const MarkedGraph two = materialize(L);
  CHECK_FALSE(is_simple(two));
  CHECK(is_proper(two));
  CHECK_FALSE(is_simple(L));

  const MarkedGraph path = materialize(k_subdivide(single_edge(), 1));
  CHECK(is_simple(path));
  CHECK_FALSE(is_proper(path));

  // Internal vertices in preorder: the outer series chain comes first.
  const MarkedGraph nested = materialize(MarkedSP::parse("S(P(L,S(L,L)),L)"));
  CHECK(nested.n == 4);
  CHECK(nested.edges == std::vector<Edge>{{0, 2}, {0, 3}, {3, 2}, {2, 1}, {0, 1}});
}

TEST_CASE("zeta_sp examples") {
  CHECK(zeta_sp(P({L, L, L})) == Rational(3));
  CHECK(zeta_sp(S({L, L})) == Rational(1, 2));
  const MarkedSP g = MarkedSP::parse("S(P(L,L,L),L,L)");
  CHECK(zeta_sp(g) == Rational(3, 7));
  CHECK(oracle_zeta(g) == Rational(3, 7));
}

TEST_CASE("flattened normal form and text round trip") {
  CHECK(S({S({L, L}), L}) == S({L, L, L}));
  CHECK(P({P({L, L}), L}).children().size() == 3);
  CHECK(S({L}) == L);
  CHECK_THROWS_AS(S({single_edge(), L}), std::invalid_argument);
  CHECK_THROWS_AS(S({}), std::invalid_argument);
  for (const char* text : {"L", "O", "O:2", "S(P(L,L,L),L,L)", "P(S(L,L),S(L,P(L,L)))"}) {
    CHECK(MarkedSP::parse(text).to_string() == text);
  }
  CHECK_THROWS(MarkedSP::parse("S(L"));
  CHECK_THROWS(MarkedSP::parse("Q"));
}

TEST_CASE("random terms agree with the matrix-tree oracle") {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const MarkedSP g = effres::testing::random_term(rng, 1, 30);
    const MarkedGraph m = materialize(g);
    REQUIRE(zeta_sp(g) == zeta_graph(m));
    CHECK(m.edge_count() == g.leaves() + 1);
    CHECK(m.vertex_count() == g.vertex_count());
    CHECK(is_connected(m));
    CHECK(is_simple(m) == g.materializes_simple());
    // Euler: every face count is at least 1 and |F| = |E| - |V| + 2.
    CHECK(static_cast<long>(m.edge_count()) - m.n + 2 >= 1);
    CHECK(zeta_sp(shuffled(g, rng)) == zeta_sp(g));
  }
}
