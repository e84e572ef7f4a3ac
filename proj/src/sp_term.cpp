#include "effres/sp_term.hpp"

#include <cctype>
#include <stdexcept>

namespace effres {

struct MarkedSP::Node {
  Kind kind = Kind::leaf;
  std::vector<MarkedSP> children;
  std::size_t pendant = 0;
  std::size_t leaves = 0;
  std::size_t internal = 0;
  // No Parallel node in the subtree has two leaf children.
  bool no_parallel_leaves = true;
};

namespace {

const char* kind_name(MarkedSP::Kind k) {
  switch (k) {
    case MarkedSP::Kind::open: return "O";
    case MarkedSP::Kind::leaf: return "L";
    case MarkedSP::Kind::series: return "S";
    case MarkedSP::Kind::parallel: return "P";
  }
  return "?";
}

}  // namespace

MarkedSP MarkedSP::open(std::size_t pendant) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::open;
  node->pendant = pendant;
  node->internal = pendant;
  return MarkedSP(std::move(node));
}

MarkedSP MarkedSP::leaf() {
  static const MarkedSP shared = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::leaf;
    node->leaves = 1;
    return MarkedSP(std::move(node));
  }();
  return shared;
}

MarkedSP MarkedSP::series(std::vector<MarkedSP> children) {
  return compose(Kind::series, std::move(children));
}

MarkedSP MarkedSP::parallel(std::vector<MarkedSP> children) {
  return compose(Kind::parallel, std::move(children));
}

MarkedSP MarkedSP::compose(Kind kind, std::vector<MarkedSP> children) {
  if (children.empty()) throw std::invalid_argument("series/parallel composition needs children");
  std::vector<MarkedSP> flat;
  flat.reserve(children.size());
  for (MarkedSP& c : children) {
    if (c.kind() == Kind::open) {
      throw std::invalid_argument("Open may only appear as a whole term");
    }
    if (c.kind() == kind) {
      for (const MarkedSP& gc : c.children()) flat.push_back(gc);
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.size() == 1) return flat.front();

  auto node = std::make_shared<Node>();
  node->kind = kind;
  std::size_t leaf_children = 0;
  for (const MarkedSP& c : flat) {
    node->leaves += c.leaves();
    node->internal += c.internal_vertices();
    node->no_parallel_leaves = node->no_parallel_leaves && c.node_->no_parallel_leaves;
    if (c.kind() == Kind::leaf) ++leaf_children;
  }
  if (kind == Kind::series) {
    node->internal += flat.size() - 1;
  } else {
    if (leaf_children >= 2) node->no_parallel_leaves = false;
  }
  node->children = std::move(flat);
  return MarkedSP(std::move(node));
}

MarkedSP::Kind MarkedSP::kind() const { return node_->kind; }
std::span<const MarkedSP> MarkedSP::children() const { return node_->children; }
std::size_t MarkedSP::pendant() const { return node_->pendant; }
std::size_t MarkedSP::leaves() const { return node_->leaves; }
std::size_t MarkedSP::internal_vertices() const { return node_->internal; }
Rational MarkedSP::zeta() const {
  switch (kind()) {
    case Kind::open: return Rational(0);
    case Kind::leaf: return Rational(1);
    default: break;
  }
  // Open never appears as a child, so every child has zeta > 0.
  Rational acc(0);
  for (const MarkedSP& c : children()) acc += kind() == Kind::parallel ? c.zeta() : c.zeta().reciprocal();
  return kind() == Kind::parallel ? acc : acc.reciprocal();
}

bool MarkedSP::materializes_simple() const {
  switch (kind()) {
    case Kind::open: return true;
    case Kind::leaf: return false;  // parallel to the marked edge
    case Kind::series: return node_->no_parallel_leaves;
    case Kind::parallel:
      for (const MarkedSP& c : children()) {
        if (c.kind() == Kind::leaf) return false;
      }
      return node_->no_parallel_leaves;
  }
  return false;
}

std::string MarkedSP::to_string() const {
  switch (kind()) {
    case Kind::open:
      return pendant() == 0 ? "O" : "O:" + std::to_string(pendant());
    case Kind::leaf:
      return "L";
    default: {
      std::string out = kind_name(kind());
      out += '(';
      bool first = true;
      for (const MarkedSP& c : children()) {
        if (!first) out += ',';
        first = false;
        out += c.to_string();
      }
      out += ')';
      return out;
    }
  }
}

bool operator==(const MarkedSP& a, const MarkedSP& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.pendant() != b.pendant() || a.leaves() != b.leaves()) return false;
  const auto ca = a.children();
  const auto cb = b.children();
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!(ca[i] == cb[i])) return false;
  }
  return true;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  MarkedSP parse_all() {
    MarkedSP t = parse_term(true);
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad SP term at offset " + std::to_string(pos_) + " (" + what +
                                "): '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char next() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    return text_[pos_++];
  }

  MarkedSP parse_term(bool top) {
    const char c = next();
    if (c == 'L') return MarkedSP::leaf();
    if (c == 'O') {
      if (!top) fail("Open nested inside a term");
      std::size_t pendant = 0;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ':') {
        ++pos_;
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          pendant = pendant * 10 + static_cast<std::size_t>(text_[pos_] - '0');
          ++pos_;
        }
        if (pos_ == start) fail("expected pendant length");
      }
      return MarkedSP::open(pendant);
    }
    if (c != 'S' && c != 'P') fail(std::string("unexpected '") + c + "'");
    if (next() != '(') fail("expected '('");
    std::vector<MarkedSP> children;
    while (true) {
      children.push_back(parse_term(false));
      const char sep = next();
      if (sep == ')') break;
      if (sep != ',') fail("expected ',' or ')'");
    }
    if (children.size() < 2) fail("composition needs at least two children");
    return c == 'S' ? MarkedSP::series(std::move(children)) : MarkedSP::parallel(std::move(children));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void require_proper(const MarkedSP& g, const char* op) {
  if (!g.is_proper()) {
    throw std::invalid_argument(std::string(op) + " requires a proper marked graph (marked edge is a bridge)");
  }
}

std::vector<MarkedSP> leaves_n(std::size_t k) { return std::vector<MarkedSP>(k, MarkedSP::leaf()); }

template <typename LeafFn>
MarkedSP map_leaves(const MarkedSP& g, bool swap_kinds, const LeafFn& leaf_fn) {
  switch (g.kind()) {
    case MarkedSP::Kind::leaf:
      return leaf_fn();
    case MarkedSP::Kind::open:
      return g;
    default: {
      std::vector<MarkedSP> mapped;
      mapped.reserve(g.children().size());
      for (const MarkedSP& c : g.children()) mapped.push_back(map_leaves(c, swap_kinds, leaf_fn));
      const bool is_series = g.kind() == MarkedSP::Kind::series;
      return (is_series != swap_kinds) ? MarkedSP::series(std::move(mapped))
                                       : MarkedSP::parallel(std::move(mapped));
    }
  }
}

}  // namespace

MarkedSP MarkedSP::parse(std::string_view text) { return TermParser(text).parse_all(); }

MarkedSP single_edge() { return MarkedSP::open(); }

MarkedSP k_duplicate(const MarkedSP& g, std::size_t k) {
  if (k == 0) return g;
  if (!g.is_proper()) {
    if (g.pendant() != 0) {
      throw std::invalid_argument("duplicating a subdivided seed does not give a two-terminal network");
    }
    return k == 1 ? MarkedSP::leaf() : MarkedSP::parallel(leaves_n(k));
  }
  std::vector<MarkedSP> children{g};
  for (std::size_t i = 0; i < k; ++i) children.push_back(MarkedSP::leaf());
  return MarkedSP::parallel(std::move(children));
}

MarkedSP k_subdivide(const MarkedSP& g, std::size_t k) {
  if (k == 0) return g;
  if (!g.is_proper()) return MarkedSP::open(g.pendant() + k);
  std::vector<MarkedSP> children = leaves_n(k);
  children.push_back(g);
  return MarkedSP::series(std::move(children));
}

MarkedSP marked_sum(const MarkedSP& a, const MarkedSP& b) {
  require_proper(a, "marked_sum");
  require_proper(b, "marked_sum");
  return MarkedSP::parallel({a, b});
}

MarkedSP dual(const MarkedSP& g) {
  require_proper(g, "dual");
  return map_leaves(g, true, [] { return MarkedSP::leaf(); });
}

MarkedSP double_edges(const MarkedSP& g) {
  require_proper(g, "double_edges");
  static const MarkedSP pair = MarkedSP::parallel(leaves_n(2));
  return map_leaves(g, false, [] { return pair; });
}

MarkedSP halve_edges(const MarkedSP& g) {
  require_proper(g, "halve_edges");
  static const MarkedSP path = MarkedSP::series(leaves_n(2));
  return map_leaves(g, false, [] { return path; });
}

MarkedSP simplify(const MarkedSP& g) { return halve_edges(double_edges(g)); }

}  // namespace effres
