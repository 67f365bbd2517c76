#include "satex/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "satex/errors.hpp"

namespace satex {

namespace {

using Colouring = std::array<int, kMaxCanonicalOrder>;

struct Search {
  const Graph& g;
  int n;
  std::uint64_t best = 0;
  bool found = false;
  std::vector<int> best_position;

  // Splits colour classes by neighbour-colour counts until stable. Colours are
  // ranks 0..k-1 and the result depends only on the input up to isomorphism.
  int refine(Colouring& colour, int classes) const {
    while (classes < n) {
      std::array<std::array<int, kMaxCanonicalOrder + 1>, kMaxCanonicalOrder> key{};
      for (int v = 0; v < n; ++v) {
        key[v][0] = colour[v];
        for_each_bit(g.row64(v), [&](int u) { ++key[v][1 + colour[u]]; });
      }
      std::array<int, kMaxCanonicalOrder> order{};
      std::iota(order.begin(), order.begin() + n, 0);
      std::sort(order.begin(), order.begin() + n, [&](int a, int b) { return key[a] < key[b]; });
      Colouring next{};
      int rank = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && key[order[i]] != key[order[i - 1]]) ++rank;
        next[order[i]] = rank;
      }
      if (rank + 1 == classes) break;
      colour = next;
      classes = rank + 1;
    }
    return classes;
  }

  bool twins(int u, int w) const {
    const std::uint64_t bu = std::uint64_t{1} << u;
    const std::uint64_t bw = std::uint64_t{1} << w;
    return (g.row64(u) & ~bw) == (g.row64(w) & ~bu);
  }

  void leaf(const Colouring& colour) {
    std::vector<int> position(colour.begin(), colour.begin() + n);
    const std::uint64_t code = adjacency_code(g, position);
    if (!found || code > best) {
      best = code;
      best_position = std::move(position);
      found = true;
    }
  }

  void run(Colouring colour, int classes) {
    classes = refine(colour, classes);
    if (classes == n) {
      leaf(colour);
      return;
    }
    std::array<int, kMaxCanonicalOrder> size{};
    for (int v = 0; v < n; ++v) ++size[colour[v]];
    int target = 0;
    while (size[target] == 1) ++target;

    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (colour[v] != target) continue;
      bool equivalent = false;
      for (int t : tried) {
        if (twins(t, v)) {
          equivalent = true;
          break;
        }
      }
      if (equivalent) continue;
      tried.push_back(v);

      Colouring next{};
      for (int u = 0; u < n; ++u) {
        next[u] = colour[u] < target ? colour[u] : colour[u] > target ? colour[u] + 1 : (u == v ? target : target + 1);
      }
      run(next, classes + 1);
    }
  }
};

}  // namespace

std::uint64_t adjacency_code(const Graph& g, const std::vector<int>& position) {
  const int n = g.order();
  std::vector<int> vertex(n);
  for (int v = 0; v < n; ++v) vertex[position[v]] = v;
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(vertex[i], vertex[j]) ? 1U : 0U);
  }
  return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
  if (n < 0 || n > kMaxCanonicalOrder) throw SizeRefusal("adjacency codes support at most 11 vertices");
  Graph g(n);
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --bit;
      if ((code >> bit) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder)
    throw SizeRefusal("canonical form supports at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
  if (n == 0) return {};
  Search search{g, n, 0, false, {}};
  search.run(Colouring{}, 1);
  return {search.best, std::move(search.best_position)};
}

Graph canonical_graph(const Graph& g) { return g.permuted(canonical_form(g).position); }

}  // namespace satex
