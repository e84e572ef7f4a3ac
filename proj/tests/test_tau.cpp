#include "doctest.h"

#include <omp.h>

#include "effres/marked_graph.hpp"
#include "effres/sp_term.hpp"
#include "effres/tau.hpp"
#include "support.hpp"

using namespace effres;
using effres::testing::Rng;

namespace {

std::vector<Edge> complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return e;
}

std::vector<Edge> cycle(int n) {
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return e;
}

BigInt tau_all_kernels(int n, const std::vector<Edge>& e) {
  const BigInt a = tau(n, e, TauKernel::sparse);
  CHECK(tau(n, e, TauKernel::dense_serial) == a);
  CHECK(tau(n, e, TauKernel::dense_parallel) == a);
  return a;
}

}  // namespace

TEST_CASE("fixed spanning tree counts") {
  CHECK(tau_all_kernels(4, complete(4)) == 16);
  CHECK(tau_bruteforce(4, complete(4)) == 16);
  CHECK(tau_all_kernels(3, cycle(3)) == 3);
  CHECK(tau_bruteforce(3, cycle(3)) == 3);
  CHECK(tau_all_kernels(2, {}) == 0);
  CHECK(tau_all_kernels(1, {}) == 1);
  CHECK(tau(0, {}) == 0);
  CHECK(tau_bruteforce(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}) == 1);
  // Cayley: n^(n-2).
  CHECK(tau_all_kernels(7, complete(7)) == 16807);
  CHECK(tau_all_kernels(12, complete(12)) == BigInt("61917364224"));
  // Loops are ignored.
  CHECK(tau(3, std::vector<Edge>{{0, 1}, {1, 1}, {1, 2}}) == 1);
  CHECK_THROWS_AS(tau(2, std::vector<Edge>{{0, 2}}), std::invalid_argument);
}

TEST_CASE("deletion and contraction of the marked edge") {
  const MarkedGraph c3{3, {{0, 2}, {2, 1}, {0, 1}}, 2};
  CHECK(tau_delete(c3) == 1);
  CHECK(tau_contract(c3) == 2);
  CHECK(check_deletion_contraction(c3));
  CHECK(zeta_graph(c3) == Rational(1, 2));
  CHECK(eff_resistance(c3) == Rational(2, 3));

  const MarkedGraph bundle{2, {{0, 1}, {0, 1}, {0, 1}}, 2};
  CHECK(tau_delete(bundle) == 2);
  CHECK(tau_contract(bundle) == 1);
  CHECK(zeta_graph(bundle) == Rational(2));
  CHECK(eff_resistance(bundle) == Rational(1, 3));

  const MarkedGraph bridge{2, {{0, 1}}, 0};
  CHECK(tau_delete(bridge) == 0);
  CHECK(tau_contract(bridge) == 1);
  CHECK(check_deletion_contraction(bridge));
  CHECK(eff_resistance(bridge) == Rational(1));
  CHECK_THROWS_AS(zeta_graph(bridge), std::domain_error);

  const MarkedGraph split{4, {{0, 1}, {2, 3}}, 0};
  CHECK_THROWS_AS(eff_resistance(split), std::domain_error);

  const auto [n, e] = contract_marked(bundle);
  CHECK(n == 1);
  CHECK(e.empty());
}

TEST_CASE("brute force size cap") {
  CHECK_THROWS_AS(tau_bruteforce(8, complete(8)), std::length_error);
}

TEST_CASE("kernels agree on random matrices") {
  Rng rng(23);
  omp_set_num_threads(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(effres::testing::uniform(rng, 2, 14));
    std::vector<Edge> e;
    const int m = static_cast<int>(effres::testing::uniform(rng, 0, 3 * n));
    for (int i = 0; i < m; ++i) {
      e.emplace_back(effres::testing::uniform(rng, 0, n - 1), effres::testing::uniform(rng, 0, n - 1));
    }
    const BigInt t = tau_all_kernels(n, e);
    if (e.size() <= kBruteforceMaxEdges) {
      std::vector<Edge> no_loops;
      for (const Edge& x : e) {
        if (x.first != x.second) no_loops.push_back(x);
      }
      CHECK(tau_bruteforce(n, no_loops) == t);
    }
  }
}

TEST_CASE("sparse determinant handles hubs and singular matrices") {
  // K_{2,300}: 300 * 2^299 spanning trees.
  std::vector<Edge> fan;
  for (int i = 0; i < 300; ++i) {
    fan.emplace_back(0, 2 + i);
    fan.emplace_back(2 + i, 1);
  }
  CHECK(tau(302, fan, TauKernel::sparse) == BigInt(300) * (BigInt(1) << 299));
  SparseSymmetric zero{2, {{{0, BigInt(1)}, {1, BigInt(-1)}}, {{0, BigInt(-1)}, {1, BigInt(1)}}}};
  CHECK(kernels::sparse_bareiss_determinant(zero) == 0);
  SparseSymmetric asym{2, {{{0, BigInt(2)}, {1, BigInt(1)}}, {{1, BigInt(2)}}}};
  CHECK_THROWS_AS(kernels::sparse_bareiss_determinant(asym), std::logic_error);
}

TEST_CASE("dense kernels") {
  IntMatrix m{{BigInt(0), BigInt(2)}, {BigInt(3), BigInt(4)}};
  CHECK(kernels::bareiss_determinant_serial(m) == -6);
  CHECK(kernels::bareiss_determinant_parallel(m) == -6);
  CHECK(kernels::bareiss_determinant_serial(IntMatrix{}) == 1);
}

TEST_CASE("random SP materializations agree with brute force") {
  Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    const MarkedSP g = effres::testing::random_term(rng, 1, 15);
    const MarkedGraph m = materialize(g);
    REQUIRE(m.edge_count() <= 16);
    CHECK(tau(m) == tau_bruteforce(m));
    CHECK(check_deletion_contraction(m));
  }
}
