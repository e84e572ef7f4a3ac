#pragma once

#include <span>
#include <utility>
#include <vector>

#include "effres/marked_graph.hpp"
#include "effres/rational.hpp"

namespace effres {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Symmetric integer matrix stored by rows; each row sorted by column.
struct SparseSymmetric {
  int n = 0;
  std::vector<std::vector<std::pair<int, BigInt>>> rows;
};

namespace kernels {

/// Dense fraction-free (Bareiss) determinant with row pivoting. Serial
/// reference implementation.
BigInt bareiss_determinant_serial(IntMatrix m);

/// Same elimination as the serial kernel; the row updates of each pivot step
/// are distributed over OpenMP threads. Bit-identical result.
BigInt bareiss_determinant_parallel(IntMatrix m);

/// Fraction-free elimination on a sparse symmetric positive semidefinite
/// matrix, using a minimum-degree symmetric ordering. Rows not touched by a
/// pivot step are rescaled lazily (an untouched row at step k equals its
/// stored value times pivot_k / pivot_s), so work stays proportional to fill.
/// All intermediate values are integers (minors of the input).
BigInt sparse_bareiss_determinant(const SparseSymmetric& m);

/// Greedy minimum-degree elimination order of the matrix pattern.
std::vector<int> minimum_degree_order(const SparseSymmetric& m);

}  // namespace kernels

enum class TauKernel { sparse, dense_serial, dense_parallel };

/// Laplacian with row/column `removed` deleted (loops ignored).
IntMatrix laplacian_minor_dense(int n, std::span<const Edge> edges, int removed);
SparseSymmetric laplacian_minor_sparse(int n, std::span<const Edge> edges, int removed);

/// Spanning tree count via the matrix tree theorem; 0 iff disconnected.
BigInt tau(int n, std::span<const Edge> edges, TauKernel kernel = TauKernel::sparse);
BigInt tau(const MarkedGraph& g, TauKernel kernel = TauKernel::sparse);

/// G / e for the marked edge: endpoints merged, resulting loops dropped.
/// Returns (vertex count, edges).
std::pair<int, std::vector<Edge>> contract_marked(const MarkedGraph& g);

BigInt tau_delete(const MarkedGraph& g, TauKernel kernel = TauKernel::sparse);
BigInt tau_contract(const MarkedGraph& g, TauKernel kernel = TauKernel::sparse);

struct TauTriple {
  BigInt whole;       // tau(G)
  BigInt deleted;     // tau(G - e)
  BigInt contracted;  // tau(G / e)
};

TauTriple tau_triple(const MarkedGraph& g, TauKernel kernel = TauKernel::sparse);

/// tau(G-e)/tau(G/e). Throws std::domain_error if the marked graph is not proper.
Rational zeta_graph(const MarkedGraph& g);
/// tau(G/e)/tau(G). Throws std::domain_error if G is disconnected.
Rational eff_resistance(const MarkedGraph& g);

inline constexpr std::size_t kBruteforceMaxEdges = 20;

/// Counts spanning trees by testing every (n-1)-subset of edges with
/// union-find. Throws std::length_error above kBruteforceMaxEdges edges.
BigInt tau_bruteforce(int n, std::span<const Edge> edges);
BigInt tau_bruteforce(const MarkedGraph& g);

/// tau(G-e) + tau(G/e) == tau(G).
bool check_deletion_contraction(const MarkedGraph& g);

}  // namespace effres
