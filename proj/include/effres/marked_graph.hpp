#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "effres/sp_term.hpp"

namespace effres {

using Edge = std::pair<int, int>;

/// Loopless multigraph on vertices 0..n-1 with one distinguished edge.
struct MarkedGraph {
  int n = 0;
  std::vector<Edge> edges;
  std::size_t marked = 0;

  std::size_t vertex_count() const { return static_cast<std::size_t>(n); }
  std::size_t edge_count() const { return edges.size(); }
  const Edge& marked_edge() const { return edges.at(marked); }
  std::vector<int> degrees() const;

  /// Throws std::invalid_argument on out-of-range endpoints, self-loops or a
  /// missing marked edge.
  void validate() const;

  friend bool operator==(const MarkedGraph&, const MarkedGraph&) = default;
};

/// Realizes the term as a concrete marked graph. Terminals are 0 and 1,
/// internal vertices are numbered in term preorder, the marked edge (0,1)
/// comes last.
MarkedGraph materialize(const MarkedSP& g);

bool is_connected(int n, std::span<const Edge> edges);
bool is_connected(const MarkedGraph& g);
/// No repeated vertex pair.
bool is_simple(const MarkedGraph& g);
/// Connected and the marked edge is not a bridge.
bool is_proper(const MarkedGraph& g);

inline bool is_simple(const MarkedSP& g) { return g.materializes_simple(); }
inline bool is_proper(const MarkedSP& g) { return g.is_proper(); }

/// G - e for the marked edge e.
std::vector<Edge> edges_without_marked(const MarkedGraph& g);

}  // namespace effres
