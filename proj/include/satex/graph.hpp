#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace satex {

/// Simple undirected graph on vertices 0..n-1 stored as bitset adjacency rows.
///
/// Rows are `words()` 64-bit words each; for n <= 64 a row is a single word and
/// the counting kernels use the `row64` fast path. Larger graphs use the same
/// layout with more words per row.
///
/// Invariants: adjacency is symmetric, the diagonal is empty and no bit at an
/// index >= n is ever set.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const noexcept { return n_; }
  int words() const noexcept { return words_; }
  bool fits_word() const noexcept { return n_ <= 64; }

  bool adjacent(int u, int v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const std::uint64_t> row(int v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }
  /// Adjacency row as one word. Only valid when fits_word().
  std::uint64_t row64(int v) const noexcept { return bits_[static_cast<std::size_t>(v) * words_]; }

  /// Throws ParameterError on loops or out-of-range endpoints.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle_edge(int u, int v);

  int degree(int v) const noexcept;
  std::size_t edge_count() const noexcept;
  bool is_complete() const noexcept;
  std::vector<std::pair<int, int>> edges() const;

  Graph complement() const;
  /// Relabels vertex v as perm[v].
  Graph permuted(std::span<const int> perm) const;
  /// Subgraph induced on the listed vertices, relabeled 0..k-1 in list order.
  Graph induced(std::span<const int> vertices) const;

  /// Checks the class invariants; used by tests and decoders.
  bool valid() const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline int popcount(std::uint64_t x) noexcept { return std::popcount(x); }

/// Calls f(v) for every set bit of a single word.
template <class F>
inline void for_each_bit(std::uint64_t mask, F&& f) {
  while (mask != 0) {
    f(std::countr_zero(mask));
    mask &= mask - 1;
  }
}

}  // namespace satex
