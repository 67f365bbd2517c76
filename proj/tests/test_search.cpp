#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "satex/canonical.hpp"
#include "satex/counting.hpp"
#include "satex/enumerate.hpp"
#include "satex/errors.hpp"
#include "satex/families.hpp"
#include "satex/graph_io.hpp"
#include "satex/search.hpp"

using namespace satex;

TEST_CASE("canonical codes induce the same classes as the all-permutations oracle") {
  for (int n = 0; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::map<std::uint64_t, std::uint64_t> to_oracle;
    std::map<std::uint64_t, std::uint64_t> from_oracle;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = oracle::graph_from_mask(n, mask);
      const auto form = canonical_form(g);
      const std::uint64_t brute = oracle::canonical_code(g);
      const auto [a, fresh_a] = to_oracle.emplace(form.code, brute);
      const auto [b, fresh_b] = from_oracle.emplace(brute, form.code);
      REQUIRE(a->second == brute);
      REQUIRE(b->second == form.code);
      if (mask % 17 == 0) {
        CHECK(adjacency_code(g, form.position) == form.code);
        CHECK(graph_from_code(n, form.code) == canonical_graph(g));
        CHECK(oracle::canonical_code(canonical_graph(g)) == brute);
      }
    }
    CHECK(to_oracle.size() == oracle::class_count(n));
  }
}

TEST_CASE("canonical codes are invariant under relabeling at larger orders") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 7 + static_cast<int>(seed % 5);
    const Graph g = oracle::random_graph(n, 0.2 + 0.003 * static_cast<double>(seed), seed);
    const Graph h = g.permuted(oracle::random_permutation(n, seed * 31 + 1));
    CHECK(canonical_code(g) == canonical_code(h));
  }
  // Regular graphs defeat refinement alone.
  const Graph petersen = decode_graph6("IheA@GUAo");
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    CHECK(canonical_code(petersen.permuted(oracle::random_permutation(10, seed))) == canonical_code(petersen));
  CHECK_THROWS_AS(canonical_form(Graph(12)), SizeRefusal);
}

TEST_CASE("enumeration class counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) CHECK(enumerate_nonisomorphic_graphs(n).size() == expected[n]);
  for (int n = 1; n <= 5; ++n) CHECK(enumerate_nonisomorphic_graphs(n).size() == oracle::class_count(n));
  CHECK(enumerate_nonisomorphic_graphs(6, EdgeRange{9, 9}).size() == oracle::class_count(6, 9));
  CHECK(enumerate_level_codes(6, 9).size() == oracle::class_count(6, 9));
  CHECK_THROWS_AS(enumerate_nonisomorphic_graphs(10), SizeRefusal);
}

TEST_CASE("enumeration output is canonical, sorted and identical across kernels") {
  for (int n = 1; n <= 7; ++n) {
    const auto par = enumerate_nonisomorphic_graphs(n);
    const auto ser = enumerate_nonisomorphic_graphs_serial(n);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
      CHECK(par[i] == ser[i]);
      CHECK(canonical_graph(par[i]) == par[i]);
      if (i > 0) {
        const auto a = std::make_pair(par[i - 1].edge_count(), canonical_code(par[i - 1]));
        const auto b = std::make_pair(par[i].edge_count(), canonical_code(par[i]));
        CHECK(a < b);
      }
    }
  }
  const auto band = enumerate_nonisomorphic_graphs(7, EdgeRange{3, 5});
  for (const auto& g : band) CHECK((g.edge_count() >= 3 && g.edge_count() <= 5));
  CHECK(&graph_catalog(6) == &graph_catalog(6));
}

TEST_CASE("catalog counts agree across kernels") {
  const auto par = count_over_catalog(7, PatternSpec::path(3), PatternSpec::cycle(4));
  const auto ser = count_over_catalog_serial(7, PatternSpec::path(3), PatternSpec::cycle(4));
  REQUIRE(par.size() == 1044);
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].f == ser[i].f);
    CHECK(par[i].g == ser[i].g);
  }
}

TEST_CASE("exact satex examples") {
  const auto a = exact_satex(4, PatternSpec::clique(2), 5, PatternSpec::clique(3));
  CHECK(a.feasible);
  CHECK(a.exact);
  CHECK(a.optimum == 2);
  CHECK(a.witness.edge_count() == 5);
  CHECK(a.explored == 11);

  const auto b = exact_satex(6, PatternSpec::clique(2), 9, PatternSpec::clique(3));
  CHECK(b.optimum == 0);
  CHECK(canonical_code(b.witness) == canonical_code(build_family(family::CompleteBipartite{3}, 6)));

  const auto c = exact_satex(6, PatternSpec::clique(2), 12, PatternSpec::clique(3));
  CHECK(c.optimum == 8);

  const auto z = exact_satex(5, PatternSpec::path(3), 0, PatternSpec::clique(3));
  CHECK(z.optimum == 0);
  CHECK(z.witness.edge_count() == 0);

  const auto inf = exact_satex(4, PatternSpec::clique(2), 7, PatternSpec::clique(3));
  CHECK_FALSE(inf.feasible);
  CHECK_FALSE(inf.note.empty());
  CHECK_THROWS_AS(exact_satex(10, PatternSpec::clique(2), 1, PatternSpec::clique(3)), SizeRefusal);
}

TEST_CASE("exact satex agrees with brute force over labeled graphs") {
  const std::vector<PatternSpec> pats{PatternSpec::clique(2), PatternSpec::path(3), PatternSpec::clique(3),
                                      PatternSpec::cycle(4), PatternSpec::star(3)};
  for (int n = 3; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (const auto& f : pats) {
      for (const auto& g : pats) {
        const std::uint64_t top = oracle::count(f.graph(), Graph::complete(n));
        for (std::uint64_t m = 0; m <= top; ++m) {
          std::uint64_t best = ~std::uint64_t{0};
          for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            const Graph x = oracle::graph_from_mask(n, mask);
            if (oracle::count(f.graph(), x) >= m) best = std::min(best, oracle::count(g.graph(), x));
          }
          const auto r = exact_satex(n, f, m, g);
          if (r.optimum != best) FAIL(n << " " << f.label() << " " << m << " " << g.label());
          CHECK(count_subgraphs(f, r.witness) >= m);
          CHECK(count_subgraphs(g, r.witness) == r.optimum);
        }
      }
    }
  }
}

TEST_CASE("generalized Turan numbers and the zero threshold") {
  CHECK(exact_generalized_turan(5, PatternSpec::clique(2), PatternSpec::clique(3)).optimum == 6);
  for (int n = 2; n <= 6; ++n)
    CHECK(exact_generalized_turan(n, PatternSpec::clique(2), PatternSpec::clique(2)).optimum == 0);
  for (int n = 3; n <= 7; ++n) {
    CHECK(exact_generalized_turan(n, PatternSpec::clique(2), PatternSpec::clique(3)).optimum == n * n / 4);
    for (auto [f, g] : std::vector<std::pair<PatternSpec, PatternSpec>>{
             {PatternSpec::clique(2), PatternSpec::clique(3)},
             {PatternSpec::path(3), PatternSpec::cycle(4)},
             {PatternSpec::clique(3), PatternSpec::clique(4)}}) {
      const BigCount ex = exact_generalized_turan(n, f, g).optimum;
      CHECK(exact_satex(n, f, ex, g).optimum == 0);
      if (ex < count_subgraphs(f, Graph::complete(n))) CHECK(exact_satex(n, f, ex + 1, g).optimum > 0);
    }
  }
}

TEST_CASE("exact satex is nondecreasing in m") {
  for (int n = 4; n <= 7; ++n) {
    const BigCount top = binomial(n, 2);
    BigCount previous = 0;
    for (BigCount m = 0; m <= top; ++m) {
      const BigCount v = exact_satex(n, PatternSpec::clique(2), m, PatternSpec::cycle(4)).optimum;
      CHECK(v >= previous);
      previous = v;
    }
  }
}

TEST_CASE("annealing dominates the exact value and usually meets it") {
  const std::vector<PatternSpec> pats{PatternSpec::clique(2), PatternSpec::path(3), PatternSpec::clique(3),
                                      PatternSpec::cycle(4), PatternSpec::star(3), PatternSpec::path(4)};
  std::mt19937_64 rng(7);
  int equal = 0;
  for (int c = 0; c < 50; ++c) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const PatternSpec f = pats[rng() % pats.size()];
    const PatternSpec g = pats[rng() % pats.size()];
    const auto top = static_cast<std::uint64_t>(count_subgraphs(f, Graph::complete(n)));
    const BigCount m = rng() % (top + 1);
    const auto exact = exact_satex(n, f, m, g);
    const auto heur = local_search_satex(n, f, m, g, {20000, 100 + static_cast<std::uint64_t>(c)});
    CHECK_FALSE(heur.exact);
    if (!heur.feasible) continue;
    CHECK(heur.optimum >= exact.optimum);
    CHECK(count_subgraphs(f, heur.witness) >= m);
    CHECK(count_subgraphs(g, heur.witness) == heur.optimum);
    equal += heur.optimum == exact.optimum ? 1 : 0;
  }
  CHECK(equal >= 45);
}

TEST_CASE("annealing is deterministic per seed and handles m = 0") {
  const AnnealingOptions opt{5000, 42};
  const auto a = local_search_satex(12, PatternSpec::clique(2), 40, PatternSpec::clique(3), opt);
  const auto b = local_search_satex(12, PatternSpec::clique(2), 40, PatternSpec::clique(3), opt);
  CHECK(a.optimum == b.optimum);
  CHECK(a.witness == b.witness);
  CHECK(a.explored == b.explored);
  CHECK(to_json(a).dump() == to_json(b).dump());
  const auto z = local_search_satex(12, PatternSpec::clique(2), 0, PatternSpec::clique(3), opt);
  CHECK(z.feasible);
  CHECK(z.optimum == 0);
  CHECK(z.witness.edge_count() == 0);
}

TEST_CASE("phase scan for cherries against edges") {
  const int n = 7;
  std::vector<BigCount> grid;
  for (int m = 0; m <= 105; m += 5) grid.push_back(m);
  const auto scan = phase_transition_scan(n, 2, 1, 1, grid);
  CHECK_FALSE(scan.exploratory);
  // The first strict winner is the quasi-star and the quasi-clique takes over
  // later. Integer t makes the winners alternate near the top at finite n.
  PhaseWinner first = PhaseWinner::Tie;
  bool clique_later = false;
  for (const auto& p : scan.points) {
    const bool strict = p.winner == PhaseWinner::QuasiStar || p.winner == PhaseWinner::QuasiClique;
    if (strict && first == PhaseWinner::Tie) first = p.winner;
    if (first == PhaseWinner::QuasiStar && p.winner == PhaseWinner::QuasiClique) clique_later = true;
  }
  CHECK(first == PhaseWinner::QuasiStar);
  CHECK(clique_later);
  CHECK(scan.zeta_hat.has_value());
  const auto& last = scan.points.back();
  CHECK(last.m == 105);
  CHECK(last.quasi_clique_value == BigCount(21));
}

TEST_CASE("constructions never beat the exact minimum") {
  for (int n = 4; n <= 7; ++n) {
    for (auto [s, a, b] : std::vector<std::tuple<int, int, int>>{{2, 1, 1}, {3, 2, 1}, {3, 1, 1}}) {
      const BigCount top = count_subgraphs(PatternSpec::star(s), Graph::complete(n));
      std::vector<BigCount> grid;
      for (BigCount m = 0; m <= top; m += 1 + top / 12) grid.push_back(m);
      const auto scan = phase_transition_scan(n, s, a, b, grid);
      for (const auto& p : scan.points) {
        const auto exact = exact_satex(n, PatternSpec::star(s), p.m, PatternSpec::complete_bipartite(a, b));
        if (p.quasi_clique_value) CHECK(*p.quasi_clique_value >= exact.optimum);
        if (p.quasi_star_value) CHECK(*p.quasi_star_value >= exact.optimum);
      }
    }
  }
  CHECK(phase_transition_scan(6, 2, 3, 1, {BigCount(3)}).exploratory);
}

TEST_CASE("search results serialize") {
  const auto r = exact_satex(4, PatternSpec::clique(2), 5, PatternSpec::clique(3));
  const auto j = to_json(r);
  CHECK(j["optimum"] == 2);
  CHECK(j["exact"] == true);
  CHECK(decode_graph6(j["witness"].get<std::string>()) == r.witness);
  CHECK(phase_csv_header().rfind("m,", 0) == 0);
}
