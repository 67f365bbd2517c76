#pragma once

#include <cstdint>
#include <vector>

#include "satex/graph.hpp"

namespace satex {

/// Largest order handled by the canonical-form routine (C(11,2) = 55 code bits).
inline constexpr int kMaxCanonicalOrder = 11;

/// Upper-triangle code of g under the labeling: bit for pair (i, j), i < j, in
/// column order (0,1), (0,2), (1,2), (0,3), ... with the first pair most
/// significant. `position[v]` is the new label of vertex v.
std::uint64_t adjacency_code(const Graph& g, const std::vector<int>& position);

/// Inverse of adjacency_code under the identity labeling.
Graph graph_from_code(int n, std::uint64_t code);

struct CanonicalForm {
  std::uint64_t code = 0;
  std::vector<int> position;  ///< canonical label of each vertex
};

/// Maximum adjacency code over the labelings that colour refinement and
/// individualization (with twin pruning) can reach. This is not the maximum over
/// all n! labelings, but two graphs of the same order are isomorphic iff their
/// codes agree. Throws SizeRefusal above kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);

inline std::uint64_t canonical_code(const Graph& g) { return canonical_form(g).code; }

/// g relabeled into its canonical form.
Graph canonical_graph(const Graph& g);

}  // namespace satex
