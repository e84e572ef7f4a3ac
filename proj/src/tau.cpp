#include "effres/tau.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "effres/union_find.hpp"

namespace effres {

namespace kernels {

namespace {

// One Bareiss row update: m[i][j] <- (m[k][k] m[i][j] - m[i][k] m[k][j]) / prev for j > k.
void bareiss_update_row(IntMatrix& m, std::size_t k, std::size_t i, const BigInt& prev, BigInt& tmp) {
  const std::size_t n = m.size();
  const BigInt& pivot = m[k][k];
  std::vector<BigInt>& row = m[i];
  const std::vector<BigInt>& prow = m[k];
  const bool has_lead = sgn(row[k]) != 0;
  for (std::size_t j = k + 1; j < n; ++j) {
    mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), row[j].get_mpz_t());
    if (has_lead) mpz_submul(tmp.get_mpz_t(), row[k].get_mpz_t(), prow[j].get_mpz_t());
    mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
  }
  row[k] = 0;
}

// Moves a row with a nonzero entry in column k into position k. Returns false
// if the column is zero below the diagonal (singular matrix).
bool select_pivot(IntMatrix& m, std::size_t k, int& sign) {
  if (sgn(m[k][k]) != 0) return true;
  for (std::size_t i = k + 1; i < m.size(); ++i) {
    if (sgn(m[i][k]) != 0) {
      std::swap(m[i], m[k]);
      sign = -sign;
      return true;
    }
  }
  return false;
}

}  // namespace

BigInt bareiss_determinant_serial(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  BigInt tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!select_pivot(m, k, sign)) return 0;
    for (std::size_t i = k + 1; i < n; ++i) bareiss_update_row(m, k, i, prev, tmp);
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt bareiss_determinant_parallel(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!select_pivot(m, k, sign)) return 0;
    const auto first = static_cast<std::ptrdiff_t>(k + 1);
    const auto last = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel
    {
      BigInt tmp;
#pragma omp for schedule(static)
      for (std::ptrdiff_t i = first; i < last; ++i) {
        bareiss_update_row(m, k, static_cast<std::size_t>(i), prev, tmp);
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<int> minimum_degree_order(const SparseSymmetric& m) {
  const int n = m.n;
  std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (const auto& [j, v] : m.rows[static_cast<std::size_t>(i)]) {
      if (j != i && sgn(v) != 0) {
        adj[i].insert(j);
        adj[j].insert(i);
      }
    }
  }
  std::set<std::pair<std::size_t, int>> queue;
  for (int i = 0; i < n; ++i) queue.emplace(adj[i].size(), i);

  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<int> nbrs;
  while (!queue.empty()) {
    const int v = queue.begin()->second;
    queue.erase(queue.begin());
    order.push_back(v);
    nbrs.assign(adj[v].begin(), adj[v].end());
    for (int a : nbrs) queue.erase({adj[a].size(), a});
    for (int a : nbrs) {
      adj[a].erase(v);
      for (int b : nbrs) {
        if (a != b) adj[a].insert(b);
      }
    }
    for (int a : nbrs) queue.emplace(adj[a].size(), a);
    adj[v].clear();
  }
  return order;
}

BigInt sparse_bareiss_determinant(const SparseSymmetric& m) {
  // Entries carry the pivot step after which their stored value is exact; an
  // entry untouched since step s equals stored * pivot_k / pivot_s at step k.
  // Rows are kept sorted by descending column so the pivot column sits at the back.
  struct Entry {
    int col;
    int level;
    BigInt value;
  };
  using Row = std::vector<Entry>;
  const int n = m.n;
  if (n == 0) return 1;

  const std::vector<int> order = minimum_degree_order(m);
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  std::vector<Row> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Row r;
    for (const auto& [j, v] : m.rows[static_cast<std::size_t>(i)]) {
      if (sgn(v) != 0) r.push_back({pos[j], -1, v});
    }
    std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.col > b.col; });
    rows[pos[i]] = std::move(r);
  }

  std::vector<BigInt> pivot(static_cast<std::size_t>(n));
  const BigInt one = 1;
  auto pivot_at = [&](int s) -> const BigInt& { return s < 0 ? one : pivot[s]; };
  auto bring_to = [&](Entry& e, int target) {
    if (e.level >= target) return;
    mpz_mul(e.value.get_mpz_t(), e.value.get_mpz_t(), pivot_at(target).get_mpz_t());
    mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), pivot_at(e.level).get_mpz_t());
    e.level = target;
  };
  auto by_col_desc = [](const Entry& e, int col) { return e.col > col; };

  Row merged;
  BigInt v;
  for (int k = 0; k < n; ++k) {
    Row& rk = rows[k];
    // A zero leading minor of a PSD matrix means the matrix is singular.
    if (rk.empty() || rk.back().col != k) return 0;
    for (Entry& e : rk) bring_to(e, k - 1);
    const BigInt& p = rk.back().value;
    if (sgn(p) == 0) return 0;
    if (k == n - 1) return p;
    const BigInt& prev = pivot_at(k - 1);
    const std::size_t rk_off = rk.size() - 1;  // entries [0, rk_off) lie right of the pivot

    for (std::size_t t = 0; t < rk_off; ++t) {
      const int j = rk[t].col;
      Row& rj = rows[j];
      if (rj.empty() || rj.back().col != k) {
        throw std::logic_error("sparse_bareiss_determinant: matrix pattern is not symmetric");
      }
      bring_to(rj.back(), k - 1);
      const BigInt ajk = std::move(rj.back().value);
      rj.pop_back();

      bool in_place = true;
      for (std::size_t u = 0; u < rk_off && in_place; ++u) {
        auto it = std::lower_bound(rj.begin(), rj.end(), rk[u].col, by_col_desc);
        in_place = it != rj.end() && it->col == rk[u].col;
      }
      if (in_place) {
        auto it = rj.begin();
        for (std::size_t u = 0; u < rk_off; ++u) {
          it = std::lower_bound(it, rj.end(), rk[u].col, by_col_desc);
          bring_to(*it, k - 1);
          mpz_mul(v.get_mpz_t(), p.get_mpz_t(), it->value.get_mpz_t());
          mpz_submul(v.get_mpz_t(), ajk.get_mpz_t(), rk[u].value.get_mpz_t());
          mpz_divexact(it->value.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
          it->level = k;
        }
        std::erase_if(rj, [](const Entry& e) { return sgn(e.value) == 0; });
        continue;
      }
      merged.clear();
      std::size_t a = 0;
      std::size_t b = 0;
      while (a < rj.size() || b < rk_off) {
        const int ca = a < rj.size() ? rj[a].col : -1;
        const int cb = b < rk_off ? rk[b].col : -1;
        if (ca > cb) {
          merged.push_back(std::move(rj[a++]));
          continue;
        }
        v = 0;
        if (ca == cb) {
          bring_to(rj[a], k - 1);
          mpz_mul(v.get_mpz_t(), p.get_mpz_t(), rj[a++].value.get_mpz_t());
        }
        mpz_submul(v.get_mpz_t(), ajk.get_mpz_t(), rk[b++].value.get_mpz_t());
        if (sgn(v) == 0) continue;
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        merged.push_back({cb, k, v});
      }
      rj.swap(merged);
    }
    pivot[k] = p;
    Row().swap(rk);
  }
  return 0;  // unreachable
}

}  // namespace kernels

namespace {

int choose_removed_vertex(int n, std::span<const Edge> edges) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    ++deg[u];
    ++deg[v];
  }
  return static_cast<int>(std::max_element(deg.begin(), deg.end()) - deg.begin());
}

void check_endpoints(int n, std::span<const Edge> edges) {
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range (n = " + std::to_string(n) + ")");
    }
  }
}

}  // namespace

IntMatrix laplacian_minor_dense(int n, std::span<const Edge> edges, int removed) {
  const int m = n - 1;
  IntMatrix lap(static_cast<std::size_t>(m), std::vector<BigInt>(static_cast<std::size_t>(m), BigInt(0)));
  auto idx = [removed](int v) { return v < removed ? v : v - 1; };
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    if (u != removed) lap[idx(u)][idx(u)] += 1;
    if (v != removed) lap[idx(v)][idx(v)] += 1;
    if (u != removed && v != removed) {
      lap[idx(u)][idx(v)] -= 1;
      lap[idx(v)][idx(u)] -= 1;
    }
  }
  return lap;
}

SparseSymmetric laplacian_minor_sparse(int n, std::span<const Edge> edges, int removed) {
  SparseSymmetric out;
  out.n = n - 1;
  std::vector<std::vector<std::pair<int, long>>> acc(static_cast<std::size_t>(out.n));
  auto idx = [removed](int v) { return v < removed ? v : v - 1; };
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    if (u != removed) acc[idx(u)].emplace_back(idx(u), 1);
    if (v != removed) acc[idx(v)].emplace_back(idx(v), 1);
    if (u != removed && v != removed) {
      acc[idx(u)].emplace_back(idx(v), -1);
      acc[idx(v)].emplace_back(idx(u), -1);
    }
  }
  out.rows.resize(static_cast<std::size_t>(out.n));
  for (int i = 0; i < out.n; ++i) {
    auto& a = acc[i];
    std::sort(a.begin(), a.end());
    for (std::size_t t = 0; t < a.size();) {
      long sum = 0;
      const int col = a[t].first;
      for (; t < a.size() && a[t].first == col; ++t) sum += a[t].second;
      if (sum != 0) out.rows[i].emplace_back(col, BigInt(sum));
    }
  }
  return out;
}

BigInt tau(int n, std::span<const Edge> edges, TauKernel kernel) {
  check_endpoints(n, edges);
  if (n <= 0) return 0;
  if (n == 1) return 1;
  if (!is_connected(n, edges)) return 0;
  const int removed = choose_removed_vertex(n, edges);
  switch (kernel) {
    case TauKernel::sparse:
      return kernels::sparse_bareiss_determinant(laplacian_minor_sparse(n, edges, removed));
    case TauKernel::dense_serial:
      return kernels::bareiss_determinant_serial(laplacian_minor_dense(n, edges, removed));
    case TauKernel::dense_parallel:
      return kernels::bareiss_determinant_parallel(laplacian_minor_dense(n, edges, removed));
  }
  return 0;
}

BigInt tau(const MarkedGraph& g, TauKernel kernel) { return tau(g.n, g.edges, kernel); }

std::pair<int, std::vector<Edge>> contract_marked(const MarkedGraph& g) {
  const auto [a, b] = g.marked_edge();
  if (a == b) throw std::invalid_argument("marked edge is a self-loop");
  const int keep = std::min(a, b);
  const int gone = std::max(a, b);
  auto relabel = [&](int v) {
    if (v == gone) v = keep;
    return v > gone ? v - 1 : v;
  };
  std::vector<Edge> out;
  out.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) {
    const int ru = relabel(u);
    const int rv = relabel(v);
    if (ru != rv) out.emplace_back(ru, rv);
  }
  return {g.n - 1, std::move(out)};
}

BigInt tau_delete(const MarkedGraph& g, TauKernel kernel) {
  return tau(g.n, edges_without_marked(g), kernel);
}

BigInt tau_contract(const MarkedGraph& g, TauKernel kernel) {
  const auto [n, edges] = contract_marked(g);
  return tau(n, edges, kernel);
}

TauTriple tau_triple(const MarkedGraph& g, TauKernel kernel) {
  return TauTriple{tau(g, kernel), tau_delete(g, kernel), tau_contract(g, kernel)};
}

Rational zeta_graph(const MarkedGraph& g) {
  const BigInt del = tau_delete(g);
  const BigInt con = tau_contract(g);
  if (sgn(del) == 0 || sgn(con) == 0) {
    throw std::domain_error("spanning tree ratio is undefined for an improper marked graph");
  }
  return Rational(del, con);
}

Rational eff_resistance(const MarkedGraph& g) {
  const BigInt whole = tau(g);
  if (sgn(whole) == 0) throw std::domain_error("effective resistance of a disconnected graph");
  return Rational(tau_contract(g), whole);
}

BigInt tau_bruteforce(int n, std::span<const Edge> edges) {
  check_endpoints(n, edges);
  if (edges.size() > kBruteforceMaxEdges) {
    throw std::length_error("tau_bruteforce: more than " + std::to_string(kBruteforceMaxEdges) + " edges");
  }
  if (n <= 0) return 0;
  const int want = n - 1;
  const int m = static_cast<int>(edges.size());
  if (want > m) return 0;
  if (want == 0) return 1;

  // Walk all m-bit masks with exactly `want` bits set (Gosper's hack).
  std::size_t count = 0;
  const std::uint32_t limit = 1u << m;
  for (std::uint32_t mask = (1u << want) - 1; mask < limit;) {
    UnionFind uf(n);
    bool acyclic = true;
    for (int e = 0; e < m && acyclic; ++e) {
      if (mask & (1u << e)) acyclic = uf.unite(edges[e].first, edges[e].second);
    }
    if (acyclic) ++count;
    const std::uint32_t c = mask & -mask;
    const std::uint32_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return BigInt(static_cast<unsigned long>(count));
}

BigInt tau_bruteforce(const MarkedGraph& g) { return tau_bruteforce(g.n, g.edges); }

bool check_deletion_contraction(const MarkedGraph& g) {
  const TauTriple t = tau_triple(g);
  return t.deleted + t.contracted == t.whole;
}

}  // namespace effres
