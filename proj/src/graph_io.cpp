#include "graphgeo/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "graphgeo/error.hpp"

namespace graphgeo {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

bool parse_integer(std::string_view token, long long& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

// Shared by both input forms so they reject the same things the same way.
class EdgeCollector {
 public:
  explicit EdgeCollector(std::size_t node_count) : node_count_(node_count) {}

  void add(long long i, long long j, double w, std::size_t line, const std::string& where) {
    if (i < 0 || j < 0 || static_cast<unsigned long long>(i) >= node_count_ ||
        static_cast<unsigned long long>(j) >= node_count_) {
      throw ParseError(ParseErrorKind::IndexOutOfRange, line,
                       where + "edge (" + std::to_string(i) + ", " + std::to_string(j) +
                           ") with " + std::to_string(node_count_) + " nodes");
    }
    if (i == j) {
      throw ParseError(ParseErrorKind::SelfLoop, line, where + "node " + std::to_string(i));
    }
    if (!std::isfinite(w)) {
      throw ParseError(ParseErrorKind::NonFiniteWeight, line, where);
    }
    if (w == 0.0) {
      throw ParseError(ParseErrorKind::ZeroWeight, line, where);
    }
    const auto a = static_cast<NodeIndex>(std::min(i, j));
    const auto b = static_cast<NodeIndex>(std::max(i, j));
    if (!seen_.emplace(a, b).second) {
      throw ParseError(ParseErrorKind::DuplicateEdge, line,
                       where + "(" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    edges_.push_back({static_cast<NodeIndex>(i), static_cast<NodeIndex>(j), w});
  }

  WeightedGraph finish() && { return WeightedGraph(node_count_, std::move(edges_)); }

 private:
  std::size_t node_count_;
  std::set<std::pair<NodeIndex, NodeIndex>> seen_;
  std::vector<Edge> edges_;
};

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
  std::optional<EdgeCollector> collector;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!collector) {
      long long n = 0;
      if (tokens.size() != 1 || !parse_integer(tokens[0], n) || n <= 0) {
        throw ParseError(ParseErrorKind::InvalidNodeCount, line_no,
                         "expected a single positive integer, got '" + std::string(line) + "'");
      }
      collector.emplace(static_cast<std::size_t>(n));
      continue;
    }

    if (tokens.size() != 3) {
      throw ParseError(ParseErrorKind::MalformedLine, line_no,
                       "expected 'i j w', got '" + std::string(line) + "'");
    }
    long long i = 0;
    long long j = 0;
    if (!parse_integer(tokens[0], i) || !parse_integer(tokens[1], j)) {
      throw ParseError(ParseErrorKind::MalformedLine, line_no,
                       "node indices must be integers, got '" + std::string(line) + "'");
    }
    double w = 0.0;
    const char* end = tokens[2].data() + tokens[2].size();
    auto [ptr, ec] = std::from_chars(tokens[2].data(), end, w);
    if (ec != std::errc{} || ptr != end) {
      throw ParseError(ParseErrorKind::NonNumericWeight, line_no, "'" + std::string(tokens[2]) + "'");
    }
    collector->add(i, j, w, line_no, "");
  }
  if (!collector) {
    throw ParseError(ParseErrorKind::MissingNodeCount, 0, "document has no node-count line");
  }
  return std::move(*collector).finish();
}

WeightedGraph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ParseErrorKind::InvalidJson, 0, e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes")) {
    throw ParseError(ParseErrorKind::MissingNodeCount, 0, "expected an object with a \"nodes\" field");
  }
  const auto& nodes = doc["nodes"];
  if (!nodes.is_number_integer() || nodes.get<long long>() <= 0) {
    throw ParseError(ParseErrorKind::InvalidNodeCount, 0, "\"nodes\" must be a positive integer");
  }
  EdgeCollector collector(nodes.get<std::size_t>());
  if (doc.contains("edges")) {
    const auto& edges = doc["edges"];
    if (!edges.is_array()) {
      throw ParseError(ParseErrorKind::InvalidJson, 0, "\"edges\" must be an array");
    }
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto& e = edges[k];
      const std::string where = "edges[" + std::to_string(k) + "] ";
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw ParseError(ParseErrorKind::MalformedLine, 0, where + "must be [i, j, w] with integer i, j");
      }
      if (!e[2].is_number()) {
        throw ParseError(ParseErrorKind::NonNumericWeight, 0, where);
      }
      collector.add(e[0].get<long long>(), e[1].get<long long>(), e[2].get<double>(), 0, where);
    }
  }
  return std::move(collector).finish();
}

WeightedGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(ParseErrorKind::Io, 0, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (path.extension() == ".json") return parse_graph_json(text);
  return parse_graph(text);
}

std::string format_graph(const WeightedGraph& g) {
  std::string out = std::to_string(g.node_count()) + "\n";
  char buf[64];
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof buf, "%.17g", e.weight);
    out += std::to_string(e.i) + " " + std::to_string(e.j) + " " + buf + "\n";
  }
  return out;
}

}  // namespace graphgeo
