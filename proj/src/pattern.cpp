#include "satex/pattern.hpp"

#include <charconv>

#include "satex/counting.hpp"
#include "satex/errors.hpp"
#include "satex/graph_io.hpp"

namespace satex {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

Graph complete_bipartite_graph(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

void require(bool ok, const char* what) {
  if (!ok) throw ParameterError(what);
}

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
    throw ParameterError("cannot parse pattern '" + std::string(whole) + "'");
  return v;
}

}  // namespace

PatternSpec::PatternSpec(PatternShape shape) : shape_(std::move(shape)) {
  std::visit(Overloaded{
                 [&](const Clique& c) {
                   require(c.k >= 0, "clique size must be >= 0");
                   graph_ = Graph::complete(c.k);
                   aut_ = factorial(c.k);
                 },
                 [&](const CompleteBipartite& c) {
                   require(c.a >= 0 && c.b >= 0, "part sizes must be >= 0");
                   graph_ = complete_bipartite_graph(c.a, c.b);
                   if (c.a == 0 || c.b == 0) {
                     aut_ = factorial(c.a + c.b);
                   } else if (c.a == c.b) {
                     aut_ = 2 * factorial(c.a) * factorial(c.a);
                   } else {
                     aut_ = factorial(c.a) * factorial(c.b);
                   }
                 },
                 [&](const Star& s) {
                   require(s.s >= 0, "star size must be >= 0");
                   graph_ = complete_bipartite_graph(1, s.s);
                   // K_{1,1} is an edge, whose two ends can be swapped.
                   aut_ = s.s == 1 ? BigCount(2) : factorial(s.s);
                 },
                 [&](const Path& p) {
                   require(p.k >= 0, "path size must be >= 0");
                   graph_ = Graph(p.k);
                   for (int i = 0; i + 1 < p.k; ++i) graph_.add_edge(i, i + 1);
                   aut_ = p.k >= 2 ? 2 : 1;
                 },
                 [&](const Cycle& c) {
                   require(c.k >= 3, "cycle needs at least 3 vertices");
                   graph_ = Graph(c.k);
                   for (int i = 0; i < c.k; ++i) graph_.add_edge(i, (i + 1) % c.k);
                   aut_ = 2 * c.k;
                 },
                 [&](const Explicit& e) {
                   graph_ = e.graph;
                   aut_ = count_automorphisms(graph_);
                 },
             },
             shape_);
}

PatternSpec PatternSpec::parse(std::string_view text) {
  if (text.starts_with("g6:")) return explicit_graph(decode_graph6(text.substr(3)));
  if (text.size() < 2) throw ParameterError("cannot parse pattern '" + std::string(text) + "'");
  const char head = text[0];
  const std::string_view rest = text.substr(1);
  switch (head) {
    case 'K': {
      const auto comma = rest.find(',');
      if (comma == std::string_view::npos) return clique(parse_int(rest, text));
      return complete_bipartite(parse_int(rest.substr(0, comma), text), parse_int(rest.substr(comma + 1), text));
    }
    case 'S':
      return star(parse_int(rest, text));
    case 'P':
      return path(parse_int(rest, text));
    case 'C':
      return cycle(parse_int(rest, text));
    default:
      throw ParameterError("cannot parse pattern '" + std::string(text) + "'");
  }
}

std::string PatternSpec::label() const {
  return std::visit(Overloaded{
                        [](const Clique& c) { return "K" + std::to_string(c.k); },
                        [](const CompleteBipartite& c) {
                          return "K" + std::to_string(c.a) + "," + std::to_string(c.b);
                        },
                        [](const Star& s) { return "S" + std::to_string(s.s); },
                        [](const Path& p) { return "P" + std::to_string(p.k); },
                        [](const Cycle& c) { return "C" + std::to_string(c.k); },
                        [](const Explicit& e) { return "g6:" + encode_graph6(e.graph); },
                    },
                    shape_);
}

BigCount count_automorphisms(const Graph& g) {
  // Same edge count on both sides, so every injective homomorphism is an automorphism.
  return count_embeddings(g, g);
}

}  // namespace satex
