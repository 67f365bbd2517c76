#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "satex/graph.hpp"

namespace satex {

/// Largest n for full isomorph-free enumeration.
inline constexpr int kMaxEnumerationOrder = 9;

struct EdgeRange {
  int min_edges = 0;
  int max_edges = -1;  ///< -1 means C(n,2)
};

/// One canonical representative per isomorphism class of n-vertex graphs,
/// sorted by (edge count, canonical code). Level-wise canonical augmentation:
/// each class with e+1 edges is reached by adding an edge to a class with e
/// edges; classes above half density are complements of classes below it.
///
/// Parallel over the graphs of a level; the serial variant is the reference.
/// Both return identical vectors. n > kMaxEnumerationOrder is a SizeRefusal.
std::vector<Graph> enumerate_nonisomorphic_graphs(int n, std::optional<EdgeRange> edges = std::nullopt);
std::vector<Graph> enumerate_nonisomorphic_graphs_serial(int n, std::optional<EdgeRange> edges = std::nullopt);

/// Canonical codes of all classes with exactly `edges` edges, ascending.
std::vector<std::uint64_t> enumerate_level_codes(int n, int edges);

/// Process-wide cache of full enumerations; thread-safe.
const std::vector<Graph>& graph_catalog(int n);

}  // namespace satex
