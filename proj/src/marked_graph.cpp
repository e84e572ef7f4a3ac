#include "effres/marked_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "effres/union_find.hpp"

namespace effres {

std::vector<int> MarkedGraph::degrees() const {
  std::vector<int> deg(vertex_count(), 0);
  for (const auto& [u, v] : edges) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

void MarkedGraph::validate() const {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (edges.empty() || marked >= edges.size()) {
    throw std::invalid_argument("marked edge index out of range");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& [u, v] = edges[i];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("edge " + std::to_string(i) + " is a self-loop");
  }
}

namespace {

class Materializer {
 public:
  explicit Materializer(std::size_t edge_hint) { edges_.reserve(edge_hint); }

  void emit(const MarkedSP& t, int s, int u) {
    switch (t.kind()) {
      case MarkedSP::Kind::leaf:
        edges_.emplace_back(s, u);
        return;
      case MarkedSP::Kind::parallel:
        for (const MarkedSP& c : t.children()) emit(c, s, u);
        return;
      case MarkedSP::Kind::series: {
        const auto children = t.children();
        // Allocate the chain vertices of this node before descending.
        const int first = next_;
        next_ += static_cast<int>(children.size()) - 1;
        int from = s;
        for (std::size_t i = 0; i < children.size(); ++i) {
          const int to = (i + 1 == children.size()) ? u : first + static_cast<int>(i);
          emit(children[i], from, to);
          from = to;
        }
        return;
      }
      case MarkedSP::Kind::open:
        throw std::logic_error("Open nested inside a term");
    }
  }

  int next_ = 2;
  std::vector<Edge> edges_;
};

}  // namespace

MarkedGraph materialize(const MarkedSP& g) {
  MarkedGraph out;
  if (g.kind() == MarkedSP::Kind::open) {
    out.n = 2 + static_cast<int>(g.pendant());
    int prev = 1;
    for (std::size_t i = 0; i < g.pendant(); ++i) {
      out.edges.emplace_back(prev, 2 + static_cast<int>(i));
      prev = 2 + static_cast<int>(i);
    }
  } else {
    Materializer m(g.leaves() + 1);
    m.emit(g, 0, 1);
    out.n = m.next_;
    out.edges = std::move(m.edges_);
  }
  out.edges.emplace_back(0, 1);
  out.marked = out.edges.size() - 1;
  return out;
}

bool is_connected(int n, std::span<const Edge> edges) {
  if (n <= 1) return true;
  UnionFind uf(n);
  for (const auto& [u, v] : edges) uf.unite(u, v);
  return uf.set_count() == 1;
}

bool is_connected(const MarkedGraph& g) { return is_connected(g.n, g.edges); }

bool is_simple(const MarkedGraph& g) {
  std::vector<Edge> keys;
  keys.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) keys.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

std::vector<Edge> edges_without_marked(const MarkedGraph& g) {
  std::vector<Edge> out;
  out.reserve(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i != g.marked) out.push_back(g.edges[i]);
  }
  return out;
}

bool is_proper(const MarkedGraph& g) {
  if (!is_connected(g)) return false;
  return is_connected(g.n, edges_without_marked(g));
}

}  // namespace effres
