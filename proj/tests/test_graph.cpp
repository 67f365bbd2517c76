#include <doctest.h>

#include <string>

#include "oracles.hpp"
#include "satex/errors.hpp"
#include "satex/graph.hpp"
#include "satex/graph_io.hpp"
#include "satex/pattern.hpp"

using namespace satex;

TEST_CASE("graph invariants hold through mutation") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(3, 1);
  CHECK(g.adjacent(1, 0));
  CHECK(g.adjacent(1, 3));
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
  g.toggle_edge(0, 1);
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK(g.valid());
  CHECK_THROWS_AS(g.add_edge(2, 2), ParameterError);
  CHECK_THROWS_AS(g.add_edge(0, 5), ParameterError);
}

TEST_CASE("wide graphs keep the same semantics past 64 vertices") {
  Graph g = Graph::complete(70);
  CHECK(g.words() == 2);
  CHECK(g.edge_count() == 70 * 69 / 2);
  CHECK(g.is_complete());
  g.remove_edge(3, 68);
  CHECK_FALSE(g.adjacent(68, 3));
  CHECK(g.complement().edge_count() == 1);
  CHECK(g.valid());
}

TEST_CASE("complement, permutation and induced subgraphs") {
  const Graph g = oracle::random_graph(9, 0.4, 3);
  CHECK(g.complement().complement() == g);
  CHECK(g.complement().edge_count() + g.edge_count() == 36);
  const auto perm = oracle::random_permutation(9, 11);
  const Graph h = g.permuted(perm);
  for (int u = 0; u < 9; ++u)
    for (int v = 0; v < 9; ++v)
      if (u != v) CHECK(g.adjacent(u, v) == h.adjacent(perm[u], perm[v]));
  const std::vector<int> keep{4, 0, 7};
  const Graph sub = g.induced(keep);
  CHECK(sub.order() == 3);
  CHECK(sub.adjacent(0, 1) == g.adjacent(4, 0));
  CHECK(sub.adjacent(1, 2) == g.adjacent(0, 7));
}

TEST_CASE("graph6 fixed encodings") {
  CHECK(encode_graph6(Graph(0)) == "?");
  CHECK(encode_graph6(Graph::complete(2)) == "A_");
  CHECK(encode_graph6(Graph(1)) == "@");
  CHECK(encode_graph6(Graph::complete(3)) == "Bw");
  // Petersen graph as printed by standard tools.
  const Graph petersen = decode_graph6("IheA@GUAo");
  CHECK(petersen.order() == 10);
  CHECK(petersen.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);
}

TEST_CASE("graph6 round trip over random graphs") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Graph g = oracle::random_graph(30, 0.5, seed);
    REQUIRE(decode_graph6(encode_graph6(g)) == g);
  }
  const Graph big = oracle::random_graph(100, 0.1, 5);
  CHECK(encode_graph6(big).substr(0, 1) == "~");
  CHECK(decode_graph6(encode_graph6(big)) == big);
}

TEST_CASE("graph6 accepts the optional prefix and a trailing newline") {
  CHECK(decode_graph6(">>graph6<<A_") == Graph::complete(2));
  CHECK(decode_graph6("A_\n") == Graph::complete(2));
}

TEST_CASE("graph6 errors name the byte offset") {
  try {
    decode_graph6("A\x7f");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
  CHECK_THROWS_AS(decode_graph6(""), ParseError);
  CHECK_THROWS_AS(decode_graph6("Bww"), ParseError);
  CHECK_THROWS_AS(decode_graph6("B"), ParseError);
  // K_2 with a padding bit set.
  CHECK_THROWS_AS(decode_graph6("A`"), ParseError);
}

TEST_CASE("JSON edge list round trip") {
  const Graph g = oracle::random_graph(12, 0.3, 9);
  CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK(graph_to_json(Graph::complete(2)).dump() == R"({"n":2,"edges":[[0,1]]})");
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[1,1]]})")), ParameterError);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"edges":[]})")), ParameterError);
}

TEST_CASE("pattern automorphism counts match brute force") {
  const std::vector<std::string> labels{"K1", "K3", "K5", "K2,3", "K3,3", "K1,4", "S1", "S4", "P2", "P5", "C4", "C6"};
  for (const auto& label : labels) {
    const PatternSpec p = PatternSpec::parse(label);
    CAPTURE(label);
    CHECK(p.automorphisms() == oracle::injections(p.graph(), p.graph()));
  }
  CHECK(PatternSpec::clique(4).automorphisms() == 24);
  CHECK(PatternSpec::cycle(5).automorphisms() == 10);
  CHECK(PatternSpec::complete_bipartite(2, 2).automorphisms() == 8);
  CHECK(PatternSpec::complete_bipartite(2, 3).automorphisms() == 12);
  CHECK(PatternSpec::star(3).automorphisms() == 6);
  // K_{1,1} is an edge: swapping its ends is an automorphism the s! form misses.
  CHECK(PatternSpec::star(1).automorphisms() == 2);
}

TEST_CASE("explicit pattern automorphisms divide the vertex factorial") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = oracle::random_graph(6, 0.5, seed);
    const PatternSpec p = PatternSpec::explicit_graph(g);
    CHECK(720 % p.automorphisms() == 0);
    CHECK(p.automorphisms() == oracle::injections(g, g));
  }
}

TEST_CASE("pattern labels parse and round trip") {
  for (const std::string label : {"K4", "K2,3", "S3", "P4", "C5"}) CHECK(PatternSpec::parse(label).label() == label);
  const PatternSpec e = PatternSpec::parse("g6:Bw");
  CHECK(e.vertex_count() == 3);
  CHECK(e.edge_count() == 3);
  CHECK(PatternSpec::parse(e.label()).graph() == e.graph());
  CHECK_THROWS_AS(PatternSpec::parse("Q4"), ParameterError);
  CHECK_THROWS_AS(PatternSpec::parse("K"), ParameterError);
  CHECK_THROWS_AS(PatternSpec::parse("Kx"), ParameterError);
  CHECK(PatternSpec::path(4).edge_count() == 3);
  CHECK(PatternSpec::cycle(4).edge_count() == 4);
}
