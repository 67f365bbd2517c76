#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "oracles.hpp"
#include "satex/counting.hpp"
#include "satex/errors.hpp"
#include "satex/families.hpp"

using namespace satex;

namespace {

std::map<int, int> degree_histogram(const Graph& g) {
  std::map<int, int> h;
  for (int v = 0; v < g.order(); ++v) ++h[g.degree(v)];
  return h;
}

}  // namespace

TEST_CASE("quasi-clique and quasi-star") {
  const Graph qc = build_family(family::QuasiClique{3}, 5);
  CHECK(qc.edge_count() == 3);
  CHECK(count_subgraphs(PatternSpec::clique(3), qc) == 1);
  CHECK(qc.degree(3) == 0);
  CHECK(qc.degree(4) == 0);
  for (int n = 0; n <= 9; ++n) {
    for (int t = 0; t <= n; ++t) {
      CHECK(build_family(family::QuasiStar{t}, n) == build_family(family::QuasiClique{t}, n).complement());
    }
  }
  CHECK_THROWS_AS(build_family(family::QuasiClique{6}, 5), ParameterError);
  CHECK_THROWS_AS(build_family(family::QuasiStar{-1}, 5), ParameterError);
}

TEST_CASE("Turan graphs and their clique counts") {
  CHECK(turan_clique_count(2, 6, 2) == 9);
  CHECK(turan_clique_count(3, 6, 3) == 8);
  CHECK(turan_clique_count(2, 6, 3) == 0);
  CHECK(turan_part_sizes(3, 7) == std::vector<int>{3, 2, 2});
  for (int n = 1; n <= 10; ++n) {
    for (int q = 1; q <= n; ++q) {
      const Graph t = build_family(family::Turan{q}, n);
      for (int k = 1; k <= 4; ++k) CHECK(turan_clique_count(q, n, k) == count_subgraphs(PatternSpec::clique(k), t));
    }
  }
  CHECK_THROWS_AS(build_family(family::Turan{0}, 4), ParameterError);
}

TEST_CASE("complete bipartite family") {
  const Graph g = build_family(family::CompleteBipartite{2}, 7);
  CHECK(g.edge_count() == 10);
  CHECK(count_subgraphs(PatternSpec::clique(3), g) == 0);
  CHECK(build_family(family::CompleteBipartite{0}, 4).edge_count() == 0);
}

TEST_CASE("Furedi graphs meet the stated degree profile and are K_{2,r+1}-free") {
  const std::vector<std::pair<int, int>> params{{5, 2}, {7, 2}, {7, 3}, {13, 3}, {5, 1}, {7, 6}, {11, 5}};
  for (auto [p, r] : params) {
    CAPTURE(p);
    CAPTURE(r);
    const family::Furedi spec{p, r};
    const int n = p * (p - 1) / r;
    CHECK(forced_order(spec) == n);
    const Graph g = build_family(spec, n);
    CHECK(g.order() == n);
    const auto h = degree_histogram(g);
    CHECK(h.at(p - 2) == p - 1);
    CHECK(h.at(p - 1) == n - (p - 1));
    CHECK(h.size() == 2);
    CHECK(count_subgraphs(PatternSpec::complete_bipartite(2, r + 1), g) == 0);
  }
  CHECK_THROWS_AS(build_family(family::Furedi{5, 2}, 9), ParameterError);
  CHECK_THROWS_AS(build_family(family::Furedi{9, 2}, 36), ParameterError);
  CHECK_THROWS_AS(build_family(family::Furedi{7, 4}, 10), ParameterError);
}

TEST_CASE("polarity graphs are C4-free") {
  for (int q : {2, 3, 5, 7}) {
    CAPTURE(q);
    const family::Polarity spec{q};
    const int n = q * q + q + 1;
    const Graph g = build_family(spec, n);
    CHECK(g.order() == n);
    CHECK(oracle::count(PatternSpec::cycle(4).graph(), g) == 0);
    CHECK(count_subgraphs(PatternSpec::cycle(4), g) == 0);
    // q+1 absolute points lose their loop.
    const auto h = degree_histogram(g);
    CHECK(h.at(q) == q + 1);
    CHECK(h.at(q + 1) == n - (q + 1));
  }
  CHECK_THROWS_AS(build_family(family::Polarity{4}, 21), ParameterError);
  CHECK_THROWS_AS(build_family(family::Polarity{3}, 12), ParameterError);
}

TEST_CASE("family JSON round trip") {
  const std::vector<FamilySpec> specs{family::QuasiClique{3}, family::QuasiStar{2}, family::Turan{4},
                                      family::CompleteBipartite{1}, family::Furedi{7, 3}, family::Polarity{3}};
  for (const auto& s : specs) {
    const auto j = family_to_json(s);
    const auto back = family_from_json(nlohmann::json::parse(j.dump()));
    CHECK(family_to_json(back).dump() == j.dump());
  }
  CHECK(family_to_json(family::Turan{4}).dump() == R"({"family":"turan","params":{"q":4}})");
  CHECK_THROWS_AS(family_from_json(nlohmann::json::parse(R"({"family":"moebius","params":{}})")), ParameterError);
  CHECK_THROWS_AS(family_from_json(nlohmann::json::parse(R"({"family":"turan","params":{}})")), ParameterError);
}

TEST_CASE("main-term worked values") {
  const MainTermQuery clique{0.5, PatternSpec::path(3), MainTermFamily::Clique};
  CHECK(closed_form_main_term(clique, 16) == doctest::Approx(256));
  CHECK(count_subgraphs(PatternSpec::path(3), Graph::complete(8)) == 168);

  const MainTermQuery bip{0.5, PatternSpec::path(4), MainTermFamily::Bipartite};
  CHECK(closed_form_main_term(bip, 10) == doctest::Approx(10000.0 / 16));

  for (double lambda : {0.2, 0.5, 0.9}) {
    const MainTermQuery qs{lambda, PatternSpec::path(2), MainTermFamily::QuasiStar};
    CHECK(closed_form_main_term(qs, 1) == doctest::Approx(0.5 * (2 * lambda - lambda * lambda)));
  }
  CHECK_THROWS_AS(closed_form_main_term({0.5, PatternSpec::cycle(4), MainTermFamily::Clique}, 10),
                  NotImplementedError);
  CHECK_THROWS_AS(
      closed_form_main_term({0.5, PatternSpec::path(4), MainTermFamily::Bipartite, MainTermRow::LambdaNearOne}, 10),
      NotImplementedError);
  CHECK_THROWS_AS(closed_form_main_term({0.0, PatternSpec::path(4), MainTermFamily::Clique}, 10), ParameterError);
}

TEST_CASE("clique-row ratio approaches one as n grows") {
  double previous = 0.0;
  for (int n : {16, 32, 64}) {
    const MainTermQuery q{0.5, PatternSpec::path(3), MainTermFamily::Clique};
    const double exact = to_double(count_subgraphs(PatternSpec::path(3), Graph::complete(n / 2)));
    const double ratio = exact / closed_form_main_term(q, n);
    CHECK(ratio > previous);
    CHECK(ratio < 1.0);
    previous = ratio;
  }
}

TEST_CASE("main terms track exact counts on built families") {
  // lambda = 1/2 keeps lambda n integral; relative error must shrink with n.
  for (int k : {3, 4, 5}) {
    for (auto fam : {MainTermFamily::Clique, MainTermFamily::QuasiStar, MainTermFamily::Bipartite}) {
      double previous = 1e9;
      for (int n : {8, 12, 16}) {
        Graph g;
        if (fam == MainTermFamily::Clique) g = build_family(family::QuasiClique{n / 2}, n);
        if (fam == MainTermFamily::QuasiStar) g = build_family(family::QuasiStar{n / 2}, n);
        if (fam == MainTermFamily::Bipartite) g = build_family(family::CompleteBipartite{n / 2}, n);
        const double exact = to_double(count_subgraphs(PatternSpec::path(k), g));
        const double main = closed_form_main_term({0.5, PatternSpec::path(k), fam}, n);
        const double err = std::abs(exact - main) / main;
        CHECK(err < previous);
        previous = err;
      }
    }
  }
}

TEST_CASE("star main terms track exact counts") {
  for (auto fam : {MainTermFamily::Clique, MainTermFamily::QuasiStar, MainTermFamily::Bipartite}) {
    double previous = 1e9;
    for (int n : {8, 16, 32, 64}) {
      Graph g;
      if (fam == MainTermFamily::Clique) g = build_family(family::QuasiClique{n / 2}, n);
      if (fam == MainTermFamily::QuasiStar) g = build_family(family::QuasiStar{n / 2}, n);
      if (fam == MainTermFamily::Bipartite) g = build_family(family::CompleteBipartite{n / 2}, n);
      const double exact = to_double(count_subgraphs(PatternSpec::star(3), g));
      const double main = closed_form_main_term({0.5, PatternSpec::star(3), fam}, n);
      const double err = std::abs(exact - main) / main;
      CHECK(err < previous);
      previous = err;
    }
  }
}
