#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "graphgeo/graph.hpp"

namespace graphgeo {

// Edge-list text:
//   # comment
//   N
//   i j w
// 0-based indices, decimal weights, whitespace separated. Throws ParseError
// naming the offending line.
WeightedGraph parse_graph(std::string_view text);

// {"nodes": N, "edges": [[i, j, w], ...]}
WeightedGraph parse_graph_json(std::string_view text);

// Dispatches on extension: ".json" uses the JSON form, anything else edge-list.
WeightedGraph load_graph(const std::filesystem::path& path);

// Edge-list text accepted by parse_graph; weights at round-trip precision.
std::string format_graph(const WeightedGraph& g);

}  // namespace graphgeo
