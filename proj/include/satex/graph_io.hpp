#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "satex/graph.hpp"

namespace satex {

/// graph6 encoding: N(n) header followed by the upper triangle in column order
/// (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each byte offset by 63.
std::string encode_graph6(const Graph& g);

/// Decodes one graph6 string. An optional ">>graph6<<" prefix is accepted and a
/// trailing newline is ignored. Throws ParseError naming the byte offset on a bad
/// header, a character outside 63..126, a wrong body length or nonzero padding bits.
Graph decode_graph6(std::string_view text);

/// {"n": int, "edges": [[u, v], ...]} with u < v, edges in row-major order.
nlohmann::ordered_json graph_to_json(const Graph& g);
/// Accepts either endpoint order; rejects loops, duplicates are merged.
Graph graph_from_json(const nlohmann::json& j);

}  // namespace satex
