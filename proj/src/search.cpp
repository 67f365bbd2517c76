#include "satex/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "satex/counting.hpp"
#include "satex/csv.hpp"
#include "satex/enumerate.hpp"
#include "satex/errors.hpp"
#include "satex/families.hpp"
#include "satex/graph_io.hpp"
#include "satex/json_util.hpp"

namespace satex {

nlohmann::ordered_json to_json(const SearchResult& result) {
  nlohmann::ordered_json j;
  j["feasible"] = result.feasible;
  if (result.feasible) {
    j["optimum"] = bigcount_to_json(result.optimum);
    j["witness"] = encode_graph6(result.witness);
  } else {
    j["optimum"] = nullptr;
    j["witness"] = nullptr;
  }
  j["explored"] = result.explored;
  j["exact"] = result.exact;
  if (!result.note.empty()) j["note"] = result.note;
  return j;
}

std::vector<CountPair> count_over_catalog(int n, const PatternSpec& f, const PatternSpec& g) {
  const auto& catalog = graph_catalog(n);
  std::vector<CountPair> out(catalog.size());
  const auto size = static_cast<std::int64_t>(catalog.size());
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t i = 0; i < size; ++i) {
    out[i] = {count_subgraphs(f, catalog[i]), count_subgraphs(g, catalog[i])};
  }
  return out;
}

std::vector<CountPair> count_over_catalog_serial(int n, const PatternSpec& f, const PatternSpec& g) {
  const auto& catalog = graph_catalog(n);
  std::vector<CountPair> out;
  out.reserve(catalog.size());
  for (const auto& x : catalog) out.push_back({count_subgraphs(f, x), count_subgraphs(g, x)});
  return out;
}

SearchResult exact_satex(int n, const PatternSpec& f, const BigCount& m, const PatternSpec& g) {
  if (m < 0) throw ParameterError("m must be nonnegative");
  SearchResult result;
  result.exact = true;
  const auto& catalog = graph_catalog(n);
  const BigCount ceiling = count_subgraphs(f, Graph::complete(n));
  if (m > ceiling) {
    result.note = "infeasible: m exceeds N(F, K_n) = " + to_string(ceiling);
    return result;
  }
  const auto counts = count_over_catalog(n, f, g);
  result.explored = counts.size();
  std::size_t best = counts.size();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i].f < m) continue;
    if (best == counts.size() || counts[i].g < counts[best].g) best = i;
  }
  result.feasible = true;
  result.optimum = counts[best].g;
  result.witness = catalog[best];
  if (count_subgraphs(f, result.witness) < m || count_subgraphs(g, result.witness) != result.optimum)
    throw std::logic_error("satex witness failed re-verification");
  return result;
}

SearchResult exact_generalized_turan(int n, const PatternSpec& f, const PatternSpec& g) {
  SearchResult result;
  result.exact = true;
  const auto& catalog = graph_catalog(n);
  const auto counts = count_over_catalog(n, f, g);
  result.explored = counts.size();
  std::size_t best = counts.size();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i].g != 0) continue;
    if (best == counts.size() || counts[i].f > counts[best].f) best = i;
  }
  if (best == counts.size()) {
    result.note = "every n-vertex graph contains G";
    return result;
  }
  result.feasible = true;
  result.optimum = counts[best].f;
  result.witness = catalog[best];
  return result;
}

namespace {

// Fixed mapping from raw engine output so results do not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t k) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(engine_()) * k) >> 64);
  }

 private:
  std::mt19937_64 engine_;
};

struct Score {
  BigCount shortfall;
  BigCount g;
  BigCount f;
};

bool better(const Score& a, const Score& b) {
  if (a.shortfall != b.shortfall) return a.shortfall < b.shortfall;
  return a.g < b.g;
}

// Relative change on the first component that differs.
double energy_delta(const Score& from, const Score& to) {
  if (from.shortfall != to.shortfall) {
    const double base = std::max(1.0, to_double(from.shortfall));
    return to_double(BigCount(to.shortfall - from.shortfall)) / base;
  }
  const double base = std::max(1.0, to_double(from.g));
  return to_double(BigCount(to.g - from.g)) / base;
}

}  // namespace

SearchResult local_search_satex(int n, const PatternSpec& f, const BigCount& m, const PatternSpec& g,
                                const AnnealingOptions& options) {
  if (n < 0) throw ParameterError("vertex count must be nonnegative");
  if (options.budget == 0) throw ParameterError("budget must be positive");
  if (options.restarts < 1) throw ParameterError("restarts must be at least 1");
  if (!(options.cooling > 0 && options.cooling <= 1)) throw ParameterError("cooling must lie in (0, 1]");
  if (!(options.initial_temperature > 0)) throw ParameterError("initial temperature must be positive");
  if (m < 0) throw ParameterError("m must be nonnegative");

  SearchResult result;
  result.exact = false;
  if (m == 0) {
    result.feasible = true;
    result.witness = Graph(n);
    result.optimum = count_subgraphs(g, result.witness);
    result.explored = 1;
    return result;
  }
  const int pairs = n * (n - 1) / 2;
  if (pairs == 0) {
    result.witness = Graph(n);
    const BigCount cf = count_subgraphs(f, result.witness);
    result.explored = 1;
    if (cf >= m) {
      result.feasible = true;
      result.optimum = count_subgraphs(g, result.witness);
    } else {
      result.note = "budget exhausted without reaching m";
    }
    return result;
  }
  std::vector<std::pair<int, int>> slots;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);

  auto score_of = [&](const Graph& x) {
    const BigCount cf = count_subgraphs(f, x);
    return Score{cf >= m ? BigCount(0) : BigCount(m - cf), count_subgraphs(g, x), cf};
  };

  Rng rng(options.seed);
  const std::uint64_t per_restart = std::max<std::uint64_t>(1, options.budget / options.restarts);
  const std::uint64_t patience = std::max<std::uint64_t>(64, per_restart / 4);
  std::optional<Score> best_score;
  Graph best;

  for (int r = 0; r < options.restarts; ++r) {
    Graph x(n);
    if (r == 0) {
      x = Graph::complete(n);
    } else {
      const double density = 0.3 + 0.7 * rng.uniform();
      for (auto [i, j] : slots)
        if (rng.uniform() < density) x.add_edge(i, j);
    }
    Score current = score_of(x);
    ++result.explored;
    if (!best_score || better(current, *best_score)) {
      best_score = current;
      best = x;
    }
    double temperature = options.initial_temperature;
    std::uint64_t since_improvement = 0;
    for (std::uint64_t step = 0; step < per_restart; ++step) {
      const auto [i, j] = slots[rng.below(slots.size())];
      x.toggle_edge(i, j);
      const Score next = score_of(x);
      ++result.explored;
      const double delta = energy_delta(current, next);
      const bool accept = delta <= 0 || rng.uniform() < std::exp(-delta / temperature);
      if (accept) {
        current = next;
        if (better(current, *best_score)) {
          best_score = current;
          best = x;
          since_improvement = 0;
        }
      } else {
        x.toggle_edge(i, j);
      }
      temperature *= options.cooling;
      if (++since_improvement > patience) break;
    }
  }

  if (best_score->shortfall != 0) {
    result.note = "budget exhausted without reaching m";
    return result;
  }
  result.feasible = true;
  result.witness = best;
  result.optimum = best_score->g;
  if (count_subgraphs(f, best) < m || count_subgraphs(g, best) != result.optimum)
    throw std::logic_error("heuristic witness failed re-verification");
  return result;
}

const char* to_string(PhaseWinner w) {
  switch (w) {
    case PhaseWinner::QuasiClique:
      return "quasi-clique";
    case PhaseWinner::QuasiStar:
      return "quasi-star";
    case PhaseWinner::Tie:
      return "tie";
    case PhaseWinner::Infeasible:
      return "infeasible";
  }
  return "infeasible";
}

PhaseScan phase_transition_scan(int n, int s, int a, int b, const std::vector<BigCount>& m_grid) {
  if (n < 0) throw ParameterError("vertex count must be nonnegative");
  if (s < 1 || a < 1 || b < 1) throw ParameterError("phase scan needs s, a, b >= 1");
  const PatternSpec star = PatternSpec::star(s);
  const PatternSpec target = PatternSpec::complete_bipartite(a, b);

  std::vector<CountPair> clique_counts;
  std::vector<CountPair> star_counts;
  for (int t = 0; t <= n; ++t) {
    const Graph qc = build_family(family::QuasiClique{t}, n);
    const Graph qs = build_family(family::QuasiStar{t}, n);
    clique_counts.push_back({count_subgraphs(star, qc), count_subgraphs(target, qc)});
    star_counts.push_back({count_subgraphs(star, qs), count_subgraphs(target, qs)});
  }
  auto least = [](const std::vector<CountPair>& family_counts, const BigCount& m) {
    std::optional<BigCount> v;
    for (const auto& c : family_counts)
      if (c.f >= m && (!v || c.g < *v)) v = c.g;
    return v;
  };

  PhaseScan scan;
  scan.exploratory = !(b <= a && a < s);
  if (scan.exploratory) scan.notes.push_back("parameters outside b <= a < s: exploratory run");
  scan.notes.push_back("values are construction values from the two families, not the optimum");

  const double scale = std::pow(static_cast<double>(n), a + b);
  std::optional<std::pair<PhaseWinner, BigCount>> last;
  for (const auto& m : m_grid) {
    if (m < 0) throw ParameterError("grid values must be nonnegative");
    PhasePoint p;
    p.m = m;
    p.quasi_clique_value = least(clique_counts, m);
    p.quasi_star_value = least(star_counts, m);
    if (p.quasi_clique_value && p.quasi_star_value) {
      p.winner = *p.quasi_clique_value < *p.quasi_star_value   ? PhaseWinner::QuasiClique
                 : *p.quasi_star_value < *p.quasi_clique_value ? PhaseWinner::QuasiStar
                                                               : PhaseWinner::Tie;
    } else if (p.quasi_clique_value) {
      p.winner = PhaseWinner::QuasiClique;
    } else if (p.quasi_star_value) {
      p.winner = PhaseWinner::QuasiStar;
    }
    if (p.winner == PhaseWinner::QuasiClique || p.winner == PhaseWinner::QuasiStar) {
      if (!scan.zeta_hat && last && last->first != p.winner && scale > 0) {
        scan.zeta_hat = 0.5 * (to_double(last->second) + to_double(m)) / scale;
      }
      last = std::make_pair(p.winner, m);
    }
    scan.points.push_back(std::move(p));
  }
  return scan;
}

std::string phase_csv_header() { return csv_row({"m", "quasi_clique_value", "quasi_star_value", "winner"}); }

std::string to_csv_row(const PhasePoint& point) {
  return csv_row({to_string(point.m), point.quasi_clique_value ? to_string(*point.quasi_clique_value) : "",
                  point.quasi_star_value ? to_string(*point.quasi_star_value) : "", to_string(point.winner)});
}

}  // namespace satex
