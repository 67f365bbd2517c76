#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "satex/bigcount.hpp"
#include "satex/graph.hpp"
#include "satex/pattern.hpp"

namespace satex {

struct SearchResult {
  bool feasible = false;
  BigCount optimum = 0;
  Graph witness;  ///< canonical form for exact results
  std::uint64_t explored = 0;
  bool exact = false;
  std::string note;
};

/// {"feasible", "optimum", "witness" (graph6), "explored", "exact", "note"?}.
nlohmann::ordered_json to_json(const SearchResult& result);

/// (N(F, X), N(G, X)) for one catalog graph X.
struct CountPair {
  BigCount f;
  BigCount g;
};

/// Counts F and G on every graph of graph_catalog(n), in catalog order.
/// OpenMP-parallel; the serial variant is the reference.
std::vector<CountPair> count_over_catalog(int n, const PatternSpec& f, const PatternSpec& g);
std::vector<CountPair> count_over_catalog_serial(int n, const PatternSpec& f, const PatternSpec& g);

/// satex(n, F: m, G): min N(G, X) over n-vertex X with N(F, X) >= m. Ties go to
/// the first graph in catalog order (edge count, then canonical code). m above
/// N(F, K_n) gives feasible = false.
SearchResult exact_satex(int n, const PatternSpec& f, const BigCount& m, const PatternSpec& g);

/// ex(n, F, G): max N(F, X) over n-vertex X with N(G, X) = 0.
SearchResult exact_generalized_turan(int n, const PatternSpec& f, const PatternSpec& g);

struct AnnealingOptions {
  std::uint64_t budget = 20000;  ///< total edge toggles over all restarts
  std::uint64_t seed = 1;
  double initial_temperature = 1.0;
  double cooling = 0.999;
  int restarts = 8;
};

/// Simulated annealing over single edge toggles. The objective is
/// lexicographic: first the shortfall max(0, m - N(F, X)), then N(G, X). The
/// result is an upper bound on satex and is never marked exact; feasible is
/// false when no visited graph met the budget m.
SearchResult local_search_satex(int n, const PatternSpec& f, const BigCount& m, const PatternSpec& g,
                                const AnnealingOptions& options = {});

enum class PhaseWinner { QuasiClique, QuasiStar, Tie, Infeasible };

const char* to_string(PhaseWinner w);

struct PhasePoint {
  BigCount m;
  std::optional<BigCount> quasi_clique_value;
  std::optional<BigCount> quasi_star_value;
  PhaseWinner winner = PhaseWinner::Infeasible;
};

struct PhaseScan {
  std::vector<PhasePoint> points;
  /// m / n^(a+b) at the first switch between strict winners (midpoint of the
  /// two grid values), if any.
  std::optional<double> zeta_hat;
  bool exploratory = false;  ///< parameters outside b <= a < s
  std::vector<std::string> notes;
};

/// For each m: the least N(K_{a,b}, X) over quasi-cliques K_t^* and over
/// quasi-stars on n vertices with N(K_{1,s}, X) >= m, from built graphs.
PhaseScan phase_transition_scan(int n, int s, int a, int b, const std::vector<BigCount>& m_grid);

std::string phase_csv_header();
std::string to_csv_row(const PhasePoint& point);

}  // namespace satex
