#include "graphgeo/error.hpp"

namespace graphgeo {

const char* to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::MissingNodeCount: return "missing node count";
    case ParseErrorKind::InvalidNodeCount: return "invalid node count";
    case ParseErrorKind::MalformedLine: return "malformed line";
    case ParseErrorKind::NonNumericWeight: return "non-numeric weight";
    case ParseErrorKind::NonFiniteWeight: return "non-finite weight";
    case ParseErrorKind::ZeroWeight: return "zero weight";
    case ParseErrorKind::IndexOutOfRange: return "index out of range";
    case ParseErrorKind::SelfLoop: return "self-loop";
    case ParseErrorKind::DuplicateEdge: return "duplicate edge";
    case ParseErrorKind::InvalidJson: return "invalid json";
    case ParseErrorKind::Io: return "i/o error";
  }
  return "unknown";
}

namespace {

std::string parse_message(ParseErrorKind kind, std::size_t line, const std::string& detail) {
  std::string msg = line > 0 ? "line " + std::to_string(line) + ": " : std::string{};
  msg += to_string(kind);
  if (!detail.empty()) {
    msg += ": " + detail;
  }
  return msg;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : Error(parse_message(kind, line, detail)), kind_(kind), line_(line) {}

SizeCapError::SizeCapError(std::size_t node_count, std::size_t cap)
    : Error("brute-force enumeration over 2^" + std::to_string(node_count) +
            " configurations exceeds the node cap of " + std::to_string(cap)),
      node_count_(node_count),
      cap_(cap) {}

}  // namespace graphgeo
