#include "satex/graph_io.hpp"

#include <cstdint>

#include "satex/errors.hpp"

namespace satex {

namespace {

constexpr char kOffset = 63;

void put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
}

int sextet(std::string_view s, std::size_t pos, std::size_t base) {
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6 character outside 63..126", base + pos);
  return c - 63;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  put_size(out, static_cast<std::uint64_t>(n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

Graph decode_graph6(std::string_view text) {
  std::size_t base = 0;
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (text.starts_with(kPrefix)) {
    text.remove_prefix(kPrefix.size());
    base = kPrefix.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string", base);

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(text, 0, base));
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8) throw ParseError("truncated graph6 size header", base + text.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, i, base));
    pos = 8;
  } else {
    if (text.size() < 4) throw ParseError("truncated graph6 size header", base + text.size());
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, i, base));
    pos = 4;
  }
  if (n > 1u << 20) throw ParseError("graph6 vertex count too large", base);

  const std::uint64_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (text.size() - pos != body) {
    const std::size_t at = text.size() - pos < body ? text.size() : pos + body;
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(body),
                     base + at);
  }

  Graph g(static_cast<int>(n));
  std::uint64_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + k / 6;
      const int v = sextet(text, at, base);
      if ((v >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = text.size() - 1;
    const int v = sextet(text, last, base);
    const int pad = static_cast<int>(6 - bits % 6);
    if ((v & ((1 << pad) - 1)) != 0) throw ParseError("nonzero graph6 padding bits", base + last);
  }
  return g;
}

nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.order();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParameterError("graph JSON needs \"n\" and \"edges\"");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0)
    throw ParameterError("graph JSON \"n\" must be a nonnegative integer");
  Graph g(j["n"].get<int>());
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParameterError("graph JSON edge must be a pair of integers");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

}  // namespace satex
