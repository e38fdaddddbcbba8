#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphgeo {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph construction rejected (bad index, self-loop, duplicate, zero weight).
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

// Caller passed an argument outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  MissingNodeCount,
  InvalidNodeCount,
  MalformedLine,
  NonNumericWeight,
  NonFiniteWeight,
  ZeroWeight,
  IndexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  InvalidJson,
  Io,
};

const char* to_string(ParseErrorKind kind) noexcept;

class ParseError : public Error {
 public:
  // line is 1-based; 0 means "no specific line" (e.g. I/O or whole-document JSON errors).
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

// Curvature and torsion divide by <dH^2>^2; raised for graphs without edges.
class ZeroVarianceError : public Error {
 public:
  using Error::Error;
};

// Brute-force enumeration refused: node count above the configured cap.
class SizeCapError : public Error {
 public:
  SizeCapError(std::size_t node_count, std::size_t cap);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t node_count_;
  std::size_t cap_;
};

// Least-squares fit has too few distinct abscissae.
class FitError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphgeo
