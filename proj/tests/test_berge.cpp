#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "satex/berge.hpp"
#include "satex/counting.hpp"
#include "satex/errors.hpp"
#include "satex/search.hpp"

using namespace satex;

namespace {

Hypergraph random_hypergraph(int n, int r, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  const Hypergraph all = complete_uniform_hypergraph(n, r);
  std::vector<std::vector<int>> edges;
  for (const auto& e : all.edges())
    if (coin(rng)) edges.push_back(e);
  return Hypergraph(n, r, edges);
}

void check_against_oracle(const Hypergraph& h, const PatternSpec& f) {
  const auto expected = oracle::berge(h.order(), h.edges(), f.graph());
  const auto got = berge_counts(h, f);
  CHECK(got.n1 == expected.n1);
  CHECK(got.n2 == expected.n2);
  CHECK(got.n3 == expected.n3);
  CHECK(berge_counts_serial(h, f) == got);
}

}  // namespace

TEST_CASE("hypergraph construction and validation") {
  const Hypergraph h(5, 3, {{2, 1, 0}, {4, 3, 2}});
  CHECK(h.edges()[0] == std::vector<int>{0, 1, 2});
  CHECK(h.masks()[1] == 0b11100);
  CHECK(complete_uniform_hypergraph(6, 3).size() == 20);
  CHECK_THROWS_AS(Hypergraph(5, 3, {{0, 1}}), ParameterError);
  CHECK_THROWS_AS(Hypergraph(5, 3, {{0, 1, 1}}), ParameterError);
  CHECK_THROWS_AS(Hypergraph(5, 3, {{0, 1, 5}}), ParameterError);
  CHECK_THROWS_AS(Hypergraph(5, 3, {{0, 1, 2}, {2, 1, 0}}), ParameterError);
  CHECK_THROWS_AS(Hypergraph(65, 2, {}), ParameterError);
}

TEST_CASE("shadow graphs") {
  CHECK(shadow_graph(complete_uniform_hypergraph(4, 3)) == Graph::complete(4));
  CHECK(shadow_graph(Hypergraph(3, 3, {{0, 1, 2}})) == Graph::complete(3));
  // Each hyperedge is a shadow triangle too; abc is the only one that extends.
  const Graph s = shadow_graph(berge_gadget(3));
  CHECK(count_subgraphs(PatternSpec::clique(3), s) == 1 + 3 * 3);
  CHECK(s.adjacent(0, 1));
  CHECK(s.adjacent(0, 2));
  CHECK(s.adjacent(1, 2));
}

TEST_CASE("Berge count anchors") {
  const auto k43 = berge_counts(complete_uniform_hypergraph(4, 3), PatternSpec::path(3));
  CHECK(k43.n1 == 6);
  CHECK(k43.n2 == 12);
  CHECK(k43.n3 == 36);
  for (int k = 1; k <= 4; ++k) {
    const auto g = berge_counts(berge_gadget(k), PatternSpec::clique(3));
    CHECK(g.n2 == 1);
    CHECK(g.n1 == k * k * k);
    CHECK(g.n3 == k * k * k);
  }
  const auto single = berge_counts(Hypergraph(3, 3, {{0, 1, 2}}), PatternSpec::clique(2));
  CHECK(single.n1 == 1);
  CHECK(single.n2 == 3);
  CHECK(single.n3 == 3);
}

TEST_CASE("2-uniform hypergraphs reduce to subgraph counts") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Hypergraph h = random_hypergraph(7, 2, 0.5, seed);
    const Graph g = shadow_graph(h);
    for (const auto& f : {PatternSpec::clique(2), PatternSpec::path(3), PatternSpec::clique(3), PatternSpec::cycle(4)}) {
      const auto c = berge_counts(h, f);
      const BigCount expected = count_subgraphs(f, g);
      CHECK(c.n1 == expected);
      CHECK(c.n2 == expected);
      CHECK(c.n3 == expected);
    }
  }
}

TEST_CASE("Berge counts match the definition on random hypergraphs") {
  const std::vector<PatternSpec> pats{PatternSpec::clique(2), PatternSpec::path(3), PatternSpec::clique(3),
                                      PatternSpec::path(4), PatternSpec::cycle(4), PatternSpec::star(3)};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 4 + static_cast<int>(seed % 3);
    const int r = 3 + static_cast<int>(seed % 2);
    const Hypergraph h = random_hypergraph(n, r, 0.45, seed);
    for (const auto& f : pats) {
      CAPTURE(seed);
      CAPTURE(f.label());
      check_against_oracle(h, f);
    }
  }
  check_against_oracle(berge_gadget(2), PatternSpec::clique(3));
  check_against_oracle(complete_uniform_hypergraph(5, 3), PatternSpec::path(4));
}

TEST_CASE("Berge count comparisons") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int r = 3 + static_cast<int>(seed % 2);
    const Hypergraph h = random_hypergraph(6, r, 0.4, seed + 500);
    for (const auto& f : {PatternSpec::path(3), PatternSpec::clique(3), PatternSpec::path(4)}) {
      const auto c = berge_counts(h, f);
      CHECK(c.n1 <= c.n3);
      CHECK(c.n2 <= c.n3);
      BigCount factor = 1;
      for (std::size_t i = 0; i < f.edge_count(); ++i) factor *= binomial(r, 2);
      CHECK(c.n3 <= factor * c.n1);
    }
  }
}

TEST_CASE("Berge pattern size guard") {
  CHECK_THROWS_AS(berge_counts(complete_uniform_hypergraph(8, 3), PatternSpec::clique(6)), SizeRefusal);
}

TEST_CASE("brute-force Berge minimum") {
  for (int which = 1; which <= 3; ++which) {
    const auto zero = brute_satex_berge(5, 3, 0, PatternSpec::path(3), which);
    CHECK(zero.optimum == 0);
    CHECK(zero.witness.size() == 0);
  }
  const auto full = brute_satex_berge(4, 3, 4, PatternSpec::path(3), 2);
  CHECK(full.optimum == 12);
  CHECK(full.explored == 1);
  const auto two = brute_satex_berge(5, 3, 2, PatternSpec::clique(3), 1);
  CHECK(two.optimum == 0);
  CHECK(berge_counts(two.witness, PatternSpec::clique(3)).n1 == 0);

  // Exhaustive check of the minimum over all labeled choices at n = 5.
  const auto all = complete_uniform_hypergraph(5, 3).edges();
  for (int m = 0; m <= 10; ++m) {
    BigCount best[3] = {-1, -1, -1};
    for (std::uint32_t mask = 0; mask < (1U << all.size()); ++mask) {
      if (std::popcount(mask) != m) continue;
      std::vector<std::vector<int>> edges;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1U) edges.push_back(all[i]);
      const auto o = oracle::berge(5, edges, PatternSpec::path(3).graph());
      const BigCount v[3] = {o.n1, o.n2, o.n3};
      for (int i = 0; i < 3; ++i)
        if (best[i] < 0 || v[i] < best[i]) best[i] = v[i];
    }
    for (int which = 1; which <= 3; ++which)
      CHECK(brute_satex_berge(5, 3, m, PatternSpec::path(3), which).optimum == best[which - 1]);
  }
  CHECK_THROWS_AS(brute_satex_berge(9, 3, 10, PatternSpec::path(3), 1), SizeRefusal);
  CHECK_THROWS_AS(brute_satex_berge(5, 3, 2, PatternSpec::path(3), 4), ParameterError);
}

TEST_CASE("sandwich inequalities") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& f : {PatternSpec::path(3), PatternSpec::clique(3)}) {
      for (int m = 0; m <= static_cast<int>(binomial(n, 3)); ++m) {
        const auto rep = berge_sandwich_check(n, 3, m, f);
        CAPTURE(n);
        CAPTURE(m);
        CHECK(rep.all_hold);
        CHECK(rep.inequalities.size() == 3);
        for (const auto& q : rep.inequalities) CHECK(q.margin == q.lhs - q.rhs);
      }
    }
  }
  const auto rep = berge_sandwich_check(4, 3, 4, PatternSpec::path(3));
  CHECK(rep.inequalities[0].lhs == 12);
  CHECK(rep.inequalities[0].rhs == 12);
  // m <= C(n,2) clamps the right side of the lower comparisons at zero.
  const auto low = berge_sandwich_check(5, 3, 3, PatternSpec::path(3));
  CHECK(low.inequalities[1].rhs == 0);
  CHECK(low.inequalities[2].rhs == 0);
}

TEST_CASE("Berge JSON") {
  const Hypergraph h = berge_gadget(2);
  const auto j = hypergraph_to_json(h);
  CHECK(j["n"] == 9);
  CHECK(j["r"] == 3);
  CHECK(hypergraph_from_json(nlohmann::json::parse(j.dump())) == h);
  CHECK(to_json(BergeCounts{6, 12, 36}).dump() == R"({"n1":6,"n2":12,"n3":36})");
  CHECK_THROWS_AS(hypergraph_from_json(nlohmann::json::parse(R"({"n":4,"r":3,"edges":[[0,1]]})")), ParameterError);
  CHECK_THROWS_AS(hypergraph_from_json(nlohmann::json::parse(R"({"n":4,"edges":[]})")), ParameterError);
}
