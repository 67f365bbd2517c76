#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "satex/bigcount.hpp"
#include "satex/graph.hpp"
#include "satex/pattern.hpp"

namespace satex {

/// Certified values hold for every graph of the stated finite size. Asymptotic
/// values are main terms whose o(1) corrections were dropped; they are analysis
/// aids and never serve as finite-n certificates.
enum class BoundKind { Certified, Asymptotic };

const char* to_string(BoundKind kind);

struct BoundReport {
  std::string evaluator;
  double value = 0.0;
  std::optional<Rational> exact;  ///< set when the formula is rational
  BoundKind kind = BoundKind::Asymptotic;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<std::string> notes;
};

/// {"evaluator", "value", "exact"?, "kind", "params", "notes"}.
nlohmann::ordered_json to_json(const BoundReport& report);
std::string bound_csv_header();
/// One RFC-4180 row matching bound_csv_header().
std::string to_csv_row(const BoundReport& report);

/// C(x, b) for real x: the falling-factorial polynomial when x >= b-1, else 0.
/// Continuous and nondecreasing in x.
double truncated_binomial(double x, int b);

// --- Convexity lemma -------------------------------------------------------

struct PowerMeanCheck {
  double lhs;
  double rhs;
  bool holds;
};

/// lhs = (1/n) sum a! C(d_i, a);
/// rhs = [((s! sum C(d_i, s) / n)^(1/s) - a + 1)_+]^a.
/// Requires a >= s >= 1 and mean(d) >= a; otherwise ParameterError (the
/// inequality is then not claimed, so the check is vacuous rather than false).
PowerMeanCheck lemma_powermean_check(std::span<const std::int64_t> d, int a, int s);

// --- Star versus complete bipartite ----------------------------------------

/// Lower bound on the number of K_{a,b} in any n-vertex graph with at least m
/// copies of K_{1,s}, a >= s. Halved when a == b (part-swap symmetry).
BoundReport csillag1_lower_bound(std::int64_t n, double m, int s, int a, int b);

// --- Clique versus clique --------------------------------------------------

/// Lower convex envelope through (t(q,n,k), t(q,n,r)), q = k-1..n, evaluated at
/// m; r > k >= 2, 0 <= m <= C(n,k) (else InfeasibleError). Exact rational.
BoundReport bollobas_interpolated_bound(int n, int k, int r, const BigCount& m);

/// Lovasz form of Kruskal-Katona: C(x, r) where C(x, k) = m, x >= k; r < k.
BoundReport kruskal_katona_bound(double m, int k, int r);

/// Real x >= k with C(x, k) = m, by bisection (1e-12 absolute, 200 iterations).
double kruskal_katona_root(double m, int k);

// --- Tilings -----------------------------------------------------------------

/// Smallest t with t disjoint copies of F spanning H, or nullopt.
std::optional<int> spanning_tiling(const Graph& host_pattern, const Graph& tile);

/// N(F, K_q) for the smallest q <= n with N(H, K_q) >= m. Requires a spanning
/// tiling of H by copies of F (HypothesisError otherwise); m > N(H, K_n) is
/// InfeasibleError.
BoundReport spanning_satex_estimate(int n, const PatternSpec& h, const PatternSpec& f, const BigCount& m);

// --- Matrix inequality -------------------------------------------------------

/// Dense symmetric matrix, row-major.
struct SymmetricMatrix {
  int n = 0;
  std::vector<double> a;
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

struct BlakleyRoyCheck {
  double lhs;  ///< <u, S u>^q
  double rhs;  ///< <u, u>^(q-1) <u, S^q u>
  bool holds;  ///< lhs <= rhs up to 1e-9 relative
};

BlakleyRoyCheck blakley_roy_check(const SymmetricMatrix& s, std::span<const double> u, int q);

// --- Paths -------------------------------------------------------------------

/// (1/2)(2m)^q / n^(q-1), the main term for P_t with t = q(k-1)+1 given m copies of P_k.
BoundReport pathpath_main_term(double n, int k, int q, double m);

/// Main-term lower bound on disjoint pairs in a family of set_count (k-1)-sets
/// over an (n-1)-set: (C(beta,2) + (beta - floor beta) floor beta) C(n-1,k-2)^2 ((k-1)!)^2.
BoundReport fkr_disjoint_pairs_bound(int n, int k, double set_count);

/// Exact number of unordered disjoint pairs; sets are bitmasks over a ground set
/// of at most 64 elements. OpenMP-parallel over the first member of each pair.
BigCount disjoint_pairs(std::span<const std::uint64_t> family);
/// Serial reference for disjoint_pairs().
BigCount disjoint_pairs_serial(std::span<const std::uint64_t> family);

/// (1/k)(m/n)^2: C_{2k} given m copies of P_{k+1}.
BoundReport pathcycle_lower_bound(double n, int k, double m);
/// (1/(4k))(2m/n)^(2q): C_{2qk} given m copies of P_{k+1}.
BoundReport pathcycle_corollary_bound(double n, int k, int q, double m);

/// K_{2,t} given m copies of P_{2k+1}, t >= k. The sum of d(u,v)^t over
/// unordered pairs is at least C(n,2) (m / ((n-2)_(k-1) C(n,2)))^(t/k) for every
/// graph (params "codegree_power_sum"); the value is that / t!, and / 4 when t = 2.
BoundReport pk2t_lower_bound(double n, int k, int t, double m);

/// K_{r,s} given m copies of K_{q,t}, s <= t, r <= q:
/// C(n,r) C(n,s) / (C(n,t) C(n,q)) * m, halved when the step t -> s has q = s
/// or the step q -> r has r = s (part-swap symmetry). Exact rational.
BoundReport kqt_projection_bound(int n, int q, int t, int s, int r, const BigCount& m);

enum class StarBranch { QuasiClique, QuasiStar, Tie };

struct ReiherWagnerReport {
  BoundReport report;
  StarBranch branch;
};

/// max(gamma^((k+1)/2), eta + (1-eta) eta^k) n^(k+1) / k! with gamma = m / C(n,2)
/// and eta = 1 - sqrt(1 - gamma).
ReiherWagnerReport reiher_wagner_max_stars(double n, double m, int k);

/// Edge density in (0,1) where the two branches cross, by bisection.
double reiher_wagner_crossing_density(int k);

/// C(k-1, 2) C(n, t).
BoundReport c2k_k2t_reference(double n, int k, int t);

}  // namespace satex
