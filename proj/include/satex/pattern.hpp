#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "satex/bigcount.hpp"
#include "satex/graph.hpp"

namespace satex {

// Path and cycle sizes count VERTICES throughout: Path{3} is the cherry P_3 with
// two edges, Cycle{4} is C_4. Concatenating q paths Path{k} end to end gives
// Path{q(k-1)+1}.

struct Clique {
  int k;
};
struct CompleteBipartite {
  int a;
  int b;
};
/// K_{1,s}.
struct Star {
  int s;
};
struct Path {
  int k;
};
struct Cycle {
  int k;
};
struct Explicit {
  Graph graph;
};

using PatternShape = std::variant<Clique, CompleteBipartite, Star, Path, Cycle, Explicit>;

/// A small pattern graph F together with |Aut(F)|.
///
/// Counting treats F as a (not necessarily induced) subgraph: a copy is an
/// edge-preserving injection into the host modulo automorphisms of F.
class PatternSpec {
 public:
  explicit PatternSpec(PatternShape shape);

  static PatternSpec clique(int k) { return PatternSpec(Clique{k}); }
  static PatternSpec complete_bipartite(int a, int b) { return PatternSpec(CompleteBipartite{a, b}); }
  static PatternSpec star(int s) { return PatternSpec(Star{s}); }
  static PatternSpec path(int k) { return PatternSpec(Path{k}); }
  static PatternSpec cycle(int k) { return PatternSpec(Cycle{k}); }
  static PatternSpec explicit_graph(Graph g) { return PatternSpec(Explicit{std::move(g)}); }

  /// Parses "K4", "K2,3", "S3", "P4", "C5", or "g6:<graph6>".
  static PatternSpec parse(std::string_view text);

  const PatternShape& shape() const noexcept { return shape_; }
  const Graph& graph() const noexcept { return graph_; }
  int vertex_count() const noexcept { return graph_.order(); }
  std::size_t edge_count() const noexcept { return graph_.edge_count(); }
  const BigCount& automorphisms() const noexcept { return aut_; }
  /// Round-trips through parse().
  std::string label() const;

 private:
  PatternShape shape_;
  Graph graph_;
  BigCount aut_;
};

/// |Aut| by counting edge-preserving self-bijections.
BigCount count_automorphisms(const Graph& g);

}  // namespace satex
