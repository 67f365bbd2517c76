#include "satex/graph.hpp"

#include <string>

#include "satex/errors.hpp"

namespace satex {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw ParameterError("negative vertex count");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw ParameterError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range for n=" +
                         std::to_string(n_));
  if (u == v) throw ParameterError("loop at vertex " + std::to_string(u));
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

void Graph::toggle_edge(int u, int v) {
  check_pair(u, v);
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] ^= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] ^= std::uint64_t{1} << (u & 63);
}

int Graph::degree(int v) const noexcept {
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

bool Graph::is_complete() const noexcept {
  const auto n = static_cast<std::size_t>(n_);
  return edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) g.add_edge(u, v);
  return g;
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw ParameterError("permutation size mismatch");
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) g.add_edge(perm[u], perm[v]);
  return g;
}

Graph Graph::induced(std::span<const int> vertices) const {
  const int k = static_cast<int>(vertices.size());
  Graph g(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (adjacent(vertices[i], vertices[j])) g.add_edge(i, j);
  return g;
}

bool Graph::valid() const noexcept {
  if (bits_.size() != static_cast<std::size_t>(n_) * words_) return false;
  for (int u = 0; u < n_; ++u) {
    if (adjacent(u, u)) return false;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t word = bits_[static_cast<std::size_t>(u) * words_ + w];
      const int base = w * 64;
      if (base + 64 > n_) {
        const int live = n_ - base;
        if (live < 64 && (word >> live) != 0) return false;
      }
      while (word != 0) {
        const int v = base + std::countr_zero(word);
        if (!adjacent(v, u)) return false;
        word &= word - 1;
      }
    }
  }
  return true;
}

}  // namespace satex
