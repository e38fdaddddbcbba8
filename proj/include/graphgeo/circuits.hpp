#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graphgeo/graph.hpp"

namespace graphgeo {

struct Hadamard {
  std::size_t qubit = 0;
};

// exp(-i angle Z_a Z_b / 2)
struct Rzz {
  double angle = 0.0;
  std::size_t a = 0;
  std::size_t b = 0;
};

struct Measure {
  std::size_t qubit = 0;
  std::size_t bit = 0;
};

using Gate = std::variant<Hadamard, Rzz, Measure>;

struct CircuitMetadata {
  std::string protocol;
  // source_nodes[q] is the graph node carried by qubit q.
  std::vector<NodeIndex> source_nodes;
  // Evolution time in units of hbar/J (phi = J t / hbar); absent for
  // protocols without an evolution step.
  std::optional<double> time;
  std::size_t graph_edges = 0;
};

struct CircuitDescription {
  std::size_t qubit_count = 0;
  std::vector<Gate> gates;
  CircuitMetadata metadata;
};

struct GateCounts {
  std::size_t hadamard = 0;
  std::size_t rzz = 0;
  std::size_t measure = 0;
};

GateCounts count_gates(const CircuitDescription& c);

// Throws InvalidArgument: zero qubits, index out of range, rzz on one qubit,
// a qubit or classical bit measured twice, or a gate after a measurement.
void validate(const CircuitDescription& c);

// H on every qubit, one RZZ(2 J_ij t) per edge in input order, H on every
// qubit, measure all. The all-zeros outcome frequency estimates |<U>|^2.
CircuitDescription build_usquared_protocol(const WeightedGraph& g, double t);

// H on both qubits then measure; <++|Z_i Z_j|++> = p00 - p01 - p10 + p11.
// Qubit 0 carries node i and qubit 1 carries node j.
CircuitDescription build_correlator_protocol(NodeIndex i, NodeIndex j);

// OpenQASM 2.0 text. Angles at 17 significant digits; output is a pure
// function of the circuit.
std::string to_qasm(const CircuitDescription& c);

// Exact statevector of the unitary part (measurements ignored), starting
// from |0...0>. Bit q of the basis index is qubit q.
std::vector<std::complex<double>> simulate_statevector(const CircuitDescription& c);

// Distribution over the qubit_count-bit classical register; entry k has bit
// b set iff the qubit measured into bit b reads 1.
std::vector<double> outcome_probabilities(const CircuitDescription& c);

inline constexpr std::size_t kMaxSimulatedQubits = 24;

}  // namespace graphgeo
