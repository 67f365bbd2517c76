#include "satex/berge.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "satex/counting.hpp"
#include "satex/errors.hpp"
#include "satex/json_util.hpp"
#include "satex/search.hpp"

namespace satex {

Hypergraph::Hypergraph(int n, int r, std::vector<std::vector<int>> edges) : n_(n), r_(r) {
  if (n < 0 || n > 64) throw ParameterError("hypergraphs support 0 <= n <= 64");
  if (r < 1) throw ParameterError("uniformity must be at least 1");
  for (auto& e : edges) {
    if (static_cast<int>(e.size()) != r)
      throw ParameterError("hyperedge of size " + std::to_string(e.size()) + " in a " + std::to_string(r) +
                           "-uniform hypergraph");
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= n) throw ParameterError("hyperedge vertex out of range");
      if (i > 0 && e[i] == e[i - 1]) throw ParameterError("hyperedge repeats a vertex");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ParameterError("duplicate hyperedge");
  edges_ = std::move(edges);
  for (const auto& e : edges_) {
    std::uint64_t mask = 0;
    for (int v : e) mask |= std::uint64_t{1} << v;
    masks_.push_back(mask);
  }
}

Hypergraph complete_uniform_hypergraph(int n, int r) {
  if (n < 0 || r < 1 || r > n) throw ParameterError("complete hypergraph needs 1 <= r <= n");
  std::vector<std::vector<int>> edges;
  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    edges.push_back(pick);
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Hypergraph(n, r, std::move(edges));
}

Hypergraph berge_gadget(int k) {
  if (k < 1 || 3 * k + 3 > 64) throw ParameterError("gadget needs 1 <= k <= 20");
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < k; ++i) {
    edges.push_back({0, 1, 3 + i});
    edges.push_back({0, 2, 3 + k + i});
    edges.push_back({1, 2, 3 + 2 * k + i});
  }
  return Hypergraph(3 * k + 3, 3, std::move(edges));
}

Graph shadow_graph(const Hypergraph& h) {
  Graph g(h.order());
  for (const auto& e : h.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) g.add_edge(e[i], e[j]);
  return g;
}

namespace {

using Image = std::vector<std::uint32_t>;

struct EmbeddingTally {
  BigCount bijections = 0;
  std::uint64_t extendable = 0;
};

class BergeCounter {
 public:
  BergeCounter(const Hypergraph& h, const Graph& pattern) : h_(h), pattern_edges_(pattern.edges()) {}

  // Bijections for one embedding, and their images added to `images`.
  EmbeddingTally visit(std::span<const int> map, std::set<Image>& images) const {
    const int k = static_cast<int>(pattern_edges_.size());
    std::vector<std::vector<std::uint32_t>> candidates(k);
    std::vector<std::uint32_t> relevant;
    for (int e = 0; e < k; ++e) {
      const std::uint64_t pair = (std::uint64_t{1} << map[pattern_edges_[e].first]) |
                                 (std::uint64_t{1} << map[pattern_edges_[e].second]);
      for (std::uint32_t i = 0; i < h_.masks().size(); ++i) {
        if ((h_.masks()[i] & pair) == pair) {
          candidates[e].push_back(i);
          relevant.push_back(i);
        }
      }
      if (candidates[e].empty()) return {};
    }
    std::sort(relevant.begin(), relevant.end());
    relevant.erase(std::unique(relevant.begin(), relevant.end()), relevant.end());

    // ways[S]: injective assignments of the pattern edges in S to the hyperedges
    // seen so far, each edge inside its hyperedge.
    std::vector<BigCount> ways(std::size_t{1} << k, 0);
    ways[0] = 1;
    for (auto hyper : relevant) {
      std::uint32_t cover = 0;
      for (int e = 0; e < k; ++e)
        if (std::binary_search(candidates[e].begin(), candidates[e].end(), hyper)) cover |= 1U << e;
      for (std::size_t s = ways.size(); s-- > 0;) {
        if (ways[s] == 0) continue;
        for_each_bit(cover & ~static_cast<std::uint32_t>(s), [&](int e) { ways[s | (std::size_t{1} << e)] += ways[s]; });
      }
    }
    EmbeddingTally tally;
    tally.bijections = ways.back();
    if (tally.bijections == 0) return tally;
    tally.extendable = 1;

    std::vector<std::uint32_t> chosen;
    collect(candidates, 0, chosen, images);
    return tally;
  }

 private:
  void collect(const std::vector<std::vector<std::uint32_t>>& candidates, std::size_t e,
               std::vector<std::uint32_t>& chosen, std::set<Image>& images) const {
    if (e == candidates.size()) {
      Image image = chosen;
      std::sort(image.begin(), image.end());
      images.insert(std::move(image));
      return;
    }
    for (auto hyper : candidates[e]) {
      if (std::find(chosen.begin(), chosen.end(), hyper) != chosen.end()) continue;
      chosen.push_back(hyper);
      collect(candidates, e + 1, chosen, images);
      chosen.pop_back();
    }
  }

  const Hypergraph& h_;
  std::vector<std::pair<int, int>> pattern_edges_;
};

void check_pattern(const PatternSpec& f) {
  if (f.edge_count() > static_cast<std::size_t>(kMaxBergePatternEdges))
    throw SizeRefusal("Berge counting supports patterns with at most 12 edges");
}

std::vector<std::vector<int>> shadow_embeddings(const Hypergraph& h, const PatternSpec& f) {
  std::vector<std::vector<int>> maps;
  for_each_embedding(f.graph(), shadow_graph(h), [&](std::span<const int> map) {
    maps.emplace_back(map.begin(), map.end());
    return true;
  });
  return maps;
}

BergeCounts finish(const PatternSpec& f, const BigCount& bijections, std::uint64_t extendable, std::size_t images) {
  // Every copy in the shadow is reached once per automorphism of F.
  const BigCount& aut = f.automorphisms();
  return {BigCount(images), BigCount(extendable) / aut, bijections / aut};
}

}  // namespace

BergeCounts berge_counts(const Hypergraph& h, const PatternSpec& f) {
  check_pattern(f);
  if (f.edge_count() > h.size()) return {0, 0, 0};
  const auto maps = shadow_embeddings(h, f);
  const BergeCounter counter(h, f.graph());
  BigCount bijections = 0;
  std::uint64_t extendable = 0;
  std::set<Image> images;
  const auto size = static_cast<std::int64_t>(maps.size());
#pragma omp parallel
  {
    BigCount local_bijections = 0;
    std::uint64_t local_extendable = 0;
    std::set<Image> local_images;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t i = 0; i < size; ++i) {
      const auto tally = counter.visit(maps[i], local_images);
      local_bijections += tally.bijections;
      local_extendable += tally.extendable;
    }
#pragma omp critical(satex_berge_merge)
    {
      bijections += local_bijections;
      extendable += local_extendable;
      images.merge(local_images);
    }
  }
  return finish(f, bijections, extendable, images.size());
}

BergeCounts berge_counts_serial(const Hypergraph& h, const PatternSpec& f) {
  check_pattern(f);
  if (f.edge_count() > h.size()) return {0, 0, 0};
  const BergeCounter counter(h, f.graph());
  BigCount bijections = 0;
  std::uint64_t extendable = 0;
  std::set<Image> images;
  for (const auto& map : shadow_embeddings(h, f)) {
    const auto tally = counter.visit(map, images);
    bijections += tally.bijections;
    extendable += tally.extendable;
  }
  return finish(f, bijections, extendable, images.size());
}

namespace {

constexpr std::uint64_t kMaxBergeCandidates = 2'000'000;

BigCount pick_count(const BergeCounts& c, int which) {
  return which == 1 ? c.n1 : which == 2 ? c.n2 : c.n3;
}

}  // namespace

BergeSearchResult brute_satex_berge(int n, int r, int m, const PatternSpec& f, int which) {
  if (which < 1 || which > 3) throw ParameterError("Berge count index must be 1, 2 or 3");
  if (m < 0) throw ParameterError("m must be nonnegative");
  check_pattern(f);
  const Hypergraph all = complete_uniform_hypergraph(n, r);
  const int total = static_cast<int>(all.size());
  BergeSearchResult result;
  if (m > total) return result;
  const BigCount candidates = binomial(total, m);
  if (candidates > kMaxBergeCandidates)
    throw SizeRefusal("C(" + std::to_string(total) + ", " + std::to_string(m) + ") = " + to_string(candidates) +
                      " hypergraphs exceeds the brute-force limit of 2000000");

  std::vector<std::vector<int>> subsets;
  std::vector<int> pick(m);
  for (int i = 0; i < m; ++i) pick[i] = i;
  while (true) {
    subsets.push_back(pick);
    int i = m - 1;
    while (i >= 0 && pick[i] == total - m + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }

  auto build = [&](const std::vector<int>& subset) {
    std::vector<std::vector<int>> edges;
    for (int i : subset) edges.push_back(all.edges()[i]);
    return Hypergraph(n, r, std::move(edges));
  };
  std::vector<BigCount> values(subsets.size());
  const auto size = static_cast<std::int64_t>(subsets.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < size; ++i) values[i] = pick_count(berge_counts_serial(build(subsets[i]), f), which);

  const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  result.feasible = true;
  result.optimum = values[best];
  result.witness = build(subsets[best]);
  result.explored = subsets.size();
  return result;
}

SandwichReport berge_sandwich_check(int n, int r, int m, const PatternSpec& f) {
  if (m < 0) throw ParameterError("m must be nonnegative");
  const PatternSpec kr = PatternSpec::clique(r);
  const auto graph_side = exact_satex(n, kr, m, f);
  const auto s2 = brute_satex_berge(n, r, m, f, 2);
  const auto s1 = brute_satex_berge(n, r, m, f, 1);
  if (!graph_side.feasible || !s2.feasible || !s1.feasible)
    throw InfeasibleError("m = " + std::to_string(m) + " exceeds C(n, r)");
  const BigCount reduced = std::max(BigCount(0), BigCount(m) - binomial(n, 2));
  const auto lower = exact_satex(n, kr, reduced, f);

  SandwichReport report{n, r, m, {}, true};
  auto add = [&](std::string name, const BigCount& lhs, const BigCount& rhs) {
    const bool holds = lhs >= rhs;
    report.all_hold = report.all_hold && holds;
    report.inequalities.push_back({std::move(name), lhs, rhs, BigCount(lhs - rhs), holds});
  };
  add("satex(n,K_r:m,F) >= satex_2", graph_side.optimum, s2.optimum);
  add("satex_2 >= satex(n,K_r:m-C(n,2),F)", s2.optimum, lower.optimum);
  add("satex_1 >= satex(n,K_r:m-C(n,2),F)", s1.optimum, lower.optimum);
  return report;
}

nlohmann::ordered_json hypergraph_to_json(const Hypergraph& h) {
  nlohmann::ordered_json j;
  j["n"] = h.order();
  j["r"] = h.uniformity();
  j["edges"] = h.edges();
  return j;
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  try {
    return Hypergraph(j.at("n").get<int>(), j.at("r").get<int>(), j.at("edges").get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed hypergraph JSON: ") + e.what());
  }
}

nlohmann::ordered_json to_json(const BergeCounts& c) {
  nlohmann::ordered_json j;
  j["n1"] = bigcount_to_json(c.n1);
  j["n2"] = bigcount_to_json(c.n2);
  j["n3"] = bigcount_to_json(c.n3);
  return j;
}

nlohmann::ordered_json to_json(const BergeSearchResult& r) {
  nlohmann::ordered_json j;
  j["feasible"] = r.feasible;
  j["optimum"] = r.feasible ? bigcount_to_json(r.optimum) : nlohmann::ordered_json(nullptr);
  j["witness"] = r.feasible ? hypergraph_to_json(r.witness) : nlohmann::ordered_json(nullptr);
  j["explored"] = r.explored;
  j["exact"] = r.exact;
  return j;
}

nlohmann::ordered_json to_json(const SandwichReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["r"] = r.r;
  j["m"] = r.m;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& q : r.inequalities) {
    arr.push_back({{"name", q.name},
                   {"lhs", bigcount_to_json(q.lhs)},
                   {"rhs", bigcount_to_json(q.rhs)},
                   {"margin", to_string(q.margin)},
                   {"holds", q.holds}});
  }
  j["inequalities"] = arr;
  j["all_hold"] = r.all_hold;
  return j;
}

}  // namespace satex
