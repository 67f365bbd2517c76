#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "satex/bigcount.hpp"
#include "satex/graph.hpp"
#include "satex/pattern.hpp"

namespace satex {

/// r-uniform hypergraph on vertices 0..n-1 (n <= 64). Each hyperedge is stored
/// sorted; the edge list is sorted and duplicate-free.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Throws ParameterError on a hyperedge of the wrong size, a repeated or
  /// out-of-range vertex, or a duplicate hyperedge.
  Hypergraph(int n, int r, std::vector<std::vector<int>> edges);

  int order() const noexcept { return n_; }
  int uniformity() const noexcept { return r_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<std::vector<int>>& edges() const noexcept { return edges_; }
  /// Vertex bitmask of each hyperedge, in edge order.
  const std::vector<std::uint64_t>& masks() const noexcept { return masks_; }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<std::uint64_t> masks_;
};

/// All r-subsets of an n-set, in lexicographic order.
Hypergraph complete_uniform_hypergraph(int n, int r);

/// 3k+3 vertices a=0, b=1, c=2, x_i=3+i, y_i=3+k+i, z_i=3+2k+i and hyperedges
/// {a,b,x_i}, {a,c,y_i}, {b,c,z_i}: one shadow triangle with k^3 Berge copies.
Hypergraph berge_gadget(int k);

/// Edge {u,v} iff some hyperedge contains both.
Graph shadow_graph(const Hypergraph& h);

/// Berge copies of F counted by distinct hyperedge images (n1), by extendable
/// copies of F in the shadow (n2) and by bijections (n3).
struct BergeCounts {
  BigCount n1;
  BigCount n2;
  BigCount n3;
  friend bool operator==(const BergeCounts&, const BergeCounts&) = default;
};

inline constexpr int kMaxBergePatternEdges = 12;

/// Parallel over embeddings of F into the shadow. |E(F)| > 12 is a SizeRefusal.
BergeCounts berge_counts(const Hypergraph& h, const PatternSpec& f);
BergeCounts berge_counts_serial(const Hypergraph& h, const PatternSpec& f);

struct BergeSearchResult {
  bool feasible = false;
  BigCount optimum = 0;
  Hypergraph witness;
  std::uint64_t explored = 0;
  bool exact = true;
};

/// satex_i(n, m, Berge_r-F): least N_i over r-uniform hypergraphs on n vertices
/// with exactly m hyperedges, over all labeled choices. Ties go to the first
/// edge subset in lexicographic order. Refuses more than 2,000,000 candidates.
BergeSearchResult brute_satex_berge(int n, int r, int m, const PatternSpec& f, int which);

struct SandwichInequality {
  std::string name;
  BigCount lhs;
  BigCount rhs;
  BigCount margin;  ///< lhs - rhs
  bool holds;
};

struct SandwichReport {
  int n;
  int r;
  int m;
  std::vector<SandwichInequality> inequalities;
  bool all_hold;
};

/// satex(n, K_r: m, F) >= satex_2 and satex_2, satex_1 >= satex(n, K_r: m - C(n,2), F),
/// all computed exactly.
SandwichReport berge_sandwich_check(int n, int r, int m, const PatternSpec& f);

nlohmann::ordered_json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const BergeCounts& c);
nlohmann::ordered_json to_json(const BergeSearchResult& r);
nlohmann::ordered_json to_json(const SandwichReport& r);

}  // namespace satex
