#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "effres/rational.hpp"

namespace effres {

/// Series-parallel term for the two-terminal network H = G - e of a marked
/// graph (G, e). The marked edge joins the two terminals and is implicit.
///
/// Terms are immutable and cheap to copy (shared structure). They are kept in
/// flattened normal form: no Series child of a Series node, no Parallel child
/// of a Parallel node. Open (H has no x-y connection) only appears as a whole
/// term. Leaf and internal vertex counts are cached per node; zeta is
/// recomputed on demand.
class MarkedSP {
 public:
  enum class Kind { open, leaf, series, parallel };

  /// The seed: a single marked edge, optionally with a pendant path of
  /// `pendant` edges hanging off terminal y (what subdividing the seed yields).
  static MarkedSP open(std::size_t pendant = 0);
  static MarkedSP leaf();
  /// Series composition; one child returns that child. Children may not be Open.
  static MarkedSP series(std::vector<MarkedSP> children);
  static MarkedSP parallel(std::vector<MarkedSP> children);

  /// Parses the text form, e.g. "S(P(L,L,L),L,L)", "L", "O", "O:2".
  static MarkedSP parse(std::string_view text);

  Kind kind() const;
  std::span<const MarkedSP> children() const;
  std::size_t pendant() const;

  /// Unit edges of H (= |E| - 1 of the materialized marked graph).
  std::size_t leaves() const;
  /// Vertices other than the two terminals.
  std::size_t internal_vertices() const;
  std::size_t vertex_count() const { return internal_vertices() + 2; }
  std::size_t edge_count() const { return leaves() + 1; }

  /// Effective conductance of H between the terminals, i.e. tau(G-e)/tau(G/e).
  Rational zeta() const;

  /// Proper iff the marked edge is not a bridge, i.e. the term is not Open.
  bool is_proper() const { return kind() != Kind::open; }
  /// Structural simplicity test of the materialization (no parallel leaves,
  /// no leaf parallel to the marked edge).
  bool materializes_simple() const;

  std::string to_string() const;

  friend bool operator==(const MarkedSP& a, const MarkedSP& b);

 private:
  struct Node;
  explicit MarkedSP(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static MarkedSP compose(Kind kind, std::vector<MarkedSP> children);

  std::shared_ptr<const Node> node_;
};

/// Seed marked graph: one edge, which is a bridge (zeta = 0).
MarkedSP single_edge();

/// Replaces the marked edge by k+1 parallel edges: H' = Parallel(H, k leaves).
/// Throws std::invalid_argument when applied to a seed with a pendant path
/// (the result is not a two-terminal series-parallel network).
MarkedSP k_duplicate(const MarkedSP& g, std::size_t k);

/// Replaces the marked edge by a path of k+1 edges: H' = Series(k leaves, H).
MarkedSP k_subdivide(const MarkedSP& g, std::size_t k);

/// Glues two proper marked graphs along their marked edges; zeta adds.
/// Throws std::invalid_argument on an improper operand.
MarkedSP marked_sum(const MarkedSP& a, const MarkedSP& b);

/// Plane dual: swaps Series and Parallel everywhere; zeta inverts.
MarkedSP dual(const MarkedSP& g);

/// Duplicates every non-marked edge (zeta doubles).
MarkedSP double_edges(const MarkedSP& g);
/// Subdivides every non-marked edge (zeta halves).
MarkedSP halve_edges(const MarkedSP& g);
/// halve_edges(double_edges(g)): zeta preserved, result simple, |E| -> 4(|E|-1)+1.
MarkedSP simplify(const MarkedSP& g);

/// zeta computed structurally from the term.
inline Rational zeta_sp(const MarkedSP& g) { return g.zeta(); }

}  // namespace effres
