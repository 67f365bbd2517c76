#include "satex/enumerate.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "satex/canonical.hpp"
#include "satex/errors.hpp"

namespace satex {

namespace {

void sort_unique(std::vector<std::uint64_t>& codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
}

void augment(int n, std::uint64_t code, std::vector<std::uint64_t>& out) {
  Graph g = graph_from_code(n, code);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.adjacent(i, j)) continue;
      g.add_edge(i, j);
      out.push_back(canonical_code(g));
      g.remove_edge(i, j);
    }
  }
}

std::vector<std::uint64_t> next_level(int n, const std::vector<std::uint64_t>& level, bool parallel) {
  std::vector<std::uint64_t> result;
  if (parallel) {
    const auto size = static_cast<std::int64_t>(level.size());
#pragma omp parallel
    {
      std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 8) nowait
      for (std::int64_t i = 0; i < size; ++i) augment(n, level[i], local);
      sort_unique(local);
#pragma omp critical(satex_enumerate_merge)
      result.insert(result.end(), local.begin(), local.end());
    }
  } else {
    for (auto code : level) augment(n, code, result);
  }
  sort_unique(result);
  return result;
}

std::vector<std::uint64_t> complement_level(int n, const std::vector<std::uint64_t>& level) {
  std::vector<std::uint64_t> out;
  out.reserve(level.size());
  for (auto code : level) out.push_back(canonical_code(graph_from_code(n, code).complement()));
  sort_unique(out);
  return out;
}

void check_order(int n) {
  if (n < 0) throw ParameterError("vertex count must be nonnegative");
  if (n > kMaxEnumerationOrder)
    throw SizeRefusal("exhaustive enumeration is limited to n <= " + std::to_string(kMaxEnumerationOrder) +
                      "; use local search for larger n");
}

// Levels 0..upto, built by augmentation.
std::vector<std::vector<std::uint64_t>> lower_levels(int n, int upto, bool parallel) {
  std::vector<std::vector<std::uint64_t>> levels;
  levels.push_back({0});
  for (int e = 1; e <= upto; ++e) levels.push_back(next_level(n, levels.back(), parallel));
  return levels;
}

std::vector<Graph> enumerate(int n, std::optional<EdgeRange> edges, bool parallel) {
  check_order(n);
  const int total = n * (n - 1) / 2;
  int lo = 0;
  int hi = total;
  if (edges) {
    lo = std::max(0, edges->min_edges);
    hi = edges->max_edges < 0 ? total : std::min(total, edges->max_edges);
  }
  std::vector<Graph> out;
  if (lo > hi) return out;
  const int half = total / 2;
  const int needed = std::max(std::min(hi, half), std::min(total - lo, half));
  const auto levels = lower_levels(n, std::max(0, needed), parallel);
  for (int e = lo; e <= hi; ++e) {
    const auto codes = e <= half ? levels[e] : complement_level(n, levels[total - e]);
    for (auto code : codes) out.push_back(graph_from_code(n, code));
  }
  return out;
}

}  // namespace

std::vector<Graph> enumerate_nonisomorphic_graphs(int n, std::optional<EdgeRange> edges) {
  return enumerate(n, edges, true);
}

std::vector<Graph> enumerate_nonisomorphic_graphs_serial(int n, std::optional<EdgeRange> edges) {
  return enumerate(n, edges, false);
}

std::vector<std::uint64_t> enumerate_level_codes(int n, int edges) {
  check_order(n);
  const int total = n * (n - 1) / 2;
  if (edges < 0 || edges > total) return {};
  const int e = std::min(edges, total - edges);
  auto levels = lower_levels(n, e, true);
  return edges == e ? levels[e] : complement_level(n, levels[e]);
}

const std::vector<Graph>& graph_catalog(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<std::vector<Graph>>> cache;
  check_order(n);
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<std::vector<Graph>>(enumerate_nonisomorphic_graphs(n));
  return *slot;
}

}  // namespace satex
