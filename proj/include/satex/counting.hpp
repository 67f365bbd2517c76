#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "satex/bigcount.hpp"
#include "satex/graph.hpp"
#include "satex/pattern.hpp"

namespace satex {

/// Number of copies of `pattern` in `host` (subgraph, not induced, counting).
///
/// A pattern with no vertices counts 1; a pattern larger than the host counts 0.
/// Cliques, stars and complete bipartite patterns go through degree and co-degree
/// sums; everything else goes through the embedding backtracker.
BigCount count_subgraphs(const PatternSpec& pattern, const Graph& host);

/// Number of edge-preserving injections V(pattern) -> V(host).
BigCount count_embeddings(const Graph& pattern, const Graph& host);

/// Calls visit(map) for every edge-preserving injection; map[i] is the image of
/// pattern vertex i. Stops early when visit returns false.
void for_each_embedding(const Graph& pattern, const Graph& host,
                        const std::function<bool(std::span<const int>)>& visit);

/// Nonnegative weights on the edges of a fixed host graph.
class EdgeWeighting {
 public:
  /// Every edge of `host` starts at weight `initial`.
  explicit EdgeWeighting(const Graph& host, double initial = 1.0);

  /// Throws ParameterError for non-edges and negative or non-finite weights.
  void set(int u, int v, double w);
  double get(int u, int v) const;
  int order() const noexcept { return n_; }

 private:
  int n_;
  std::vector<double> w_;
  std::vector<bool> edge_;
};

/// Sum over copies of `pattern` in `host` of the product of their edge weights.
double count_weighted_subgraphs(const PatternSpec& pattern, const Graph& host, const EdgeWeighting& w);

struct CodegreeEntry {
  std::vector<int> vertices;
  BigCount codegree;
};

/// d(A) = |common neighbourhood of A| for every a-subset A, subsets in
/// lexicographic order.
std::vector<CodegreeEntry> codegree_vector(const Graph& host, int set_size);

/// d(A) for one set.
int codegree(const Graph& host, std::span<const int> vertices);

}  // namespace satex
