#include "graphgeo/circuits.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <numbers>
#include <set>
#include <string>

#include "graphgeo/error.hpp"

namespace graphgeo {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void check_qubit(std::size_t q, std::size_t count) {
  if (q >= count) {
    throw InvalidArgument("qubit " + std::to_string(q) + " out of range for " + std::to_string(count) + " qubits");
  }
}

}  // namespace

GateCounts count_gates(const CircuitDescription& c) {
  GateCounts counts;
  for (const Gate& gate : c.gates) {
    std::visit(overloaded{[&](const Hadamard&) { ++counts.hadamard; },
                          [&](const Rzz&) { ++counts.rzz; },
                          [&](const Measure&) { ++counts.measure; }},
               gate);
  }
  return counts;
}

void validate(const CircuitDescription& c) {
  if (c.qubit_count == 0) throw InvalidArgument("circuit has no qubits");
  std::set<std::size_t> measured;
  std::set<std::size_t> bits;
  for (const Gate& gate : c.gates) {
    std::visit(overloaded{
                   [&](const Hadamard& h) {
                     check_qubit(h.qubit, c.qubit_count);
                     if (!measured.empty()) throw InvalidArgument("gate after measurement");
                   },
                   [&](const Rzz& r) {
                     check_qubit(r.a, c.qubit_count);
                     check_qubit(r.b, c.qubit_count);
                     if (r.a == r.b) throw InvalidArgument("rzz needs two distinct qubits");
                     if (!std::isfinite(r.angle)) throw InvalidArgument("rzz angle is not finite");
                     if (!measured.empty()) throw InvalidArgument("gate after measurement");
                   },
                   [&](const Measure& m) {
                     check_qubit(m.qubit, c.qubit_count);
                     check_qubit(m.bit, c.qubit_count);
                     if (!measured.insert(m.qubit).second) {
                       throw InvalidArgument("qubit " + std::to_string(m.qubit) + " measured twice");
                     }
                     if (!bits.insert(m.bit).second) {
                       throw InvalidArgument("classical bit " + std::to_string(m.bit) + " written twice");
                     }
                   }},
               gate);
  }
}

CircuitDescription build_usquared_protocol(const WeightedGraph& g, double t) {
  CircuitDescription c;
  c.qubit_count = g.node_count();
  c.metadata.protocol = "usquared";
  c.metadata.time = t;
  c.metadata.graph_edges = g.edge_count();
  for (NodeIndex q = 0; q < g.node_count(); ++q) c.metadata.source_nodes.push_back(q);

  for (std::size_t q = 0; q < c.qubit_count; ++q) c.gates.emplace_back(Hadamard{q});
  for (const Edge& e : g.edges()) c.gates.emplace_back(Rzz{2.0 * e.weight * t, e.i, e.j});
  for (std::size_t q = 0; q < c.qubit_count; ++q) c.gates.emplace_back(Hadamard{q});
  for (std::size_t q = 0; q < c.qubit_count; ++q) c.gates.emplace_back(Measure{q, q});
  return c;
}

CircuitDescription build_correlator_protocol(NodeIndex i, NodeIndex j) {
  if (i == j) {
    throw InvalidArgument("correlator protocol needs two distinct nodes, got (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
  }
  CircuitDescription c;
  c.qubit_count = 2;
  c.metadata.protocol = "correlator";
  c.metadata.source_nodes = {i, j};
  c.gates = {Hadamard{0}, Hadamard{1}, Measure{0, 0}, Measure{1, 1}};
  return c;
}

std::string to_qasm(const CircuitDescription& c) {
  validate(c);
  const GateCounts counts = count_gates(c);
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  if (!c.metadata.protocol.empty()) out += "// protocol: " + c.metadata.protocol + "\n";
  if (!c.metadata.source_nodes.empty()) {
    out += "// graph nodes:";
    for (std::size_t q = 0; q < c.metadata.source_nodes.size(); ++q) {
      out += " q[" + std::to_string(q) + "]=" + std::to_string(c.metadata.source_nodes[q]);
    }
    out += "\n";
  }
  if (c.metadata.time) out += "// t: " + format_real(*c.metadata.time) + " (hbar/J)\n";
  if (counts.rzz > 0) out += "// rzz(theta) a,b == cx a,b; rz(theta) b; cx a,b;\n";

  const std::string n = std::to_string(c.qubit_count);
  out += "qreg q[" + n + "];\n";
  out += "creg c[" + n + "];\n";
  for (const Gate& gate : c.gates) {
    std::visit(overloaded{[&](const Hadamard& h) { out += "h q[" + std::to_string(h.qubit) + "];\n"; },
                          [&](const Rzz& r) {
                            out += "rzz(" + format_real(r.angle) + ") q[" + std::to_string(r.a) + "],q[" +
                                   std::to_string(r.b) + "];\n";
                          },
                          [&](const Measure& m) {
                            out += "measure q[" + std::to_string(m.qubit) + "] -> c[" + std::to_string(m.bit) +
                                   "];\n";
                          }},
               gate);
  }
  return out;
}

std::vector<std::complex<double>> simulate_statevector(const CircuitDescription& c) {
  validate(c);
  if (c.qubit_count > kMaxSimulatedQubits) {
    throw InvalidArgument("statevector simulation limited to " + std::to_string(kMaxSimulatedQubits) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << c.qubit_count;
  std::vector<std::complex<double>> psi(dim, 0.0);
  psi[0] = 1.0;
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

  for (const Gate& gate : c.gates) {
    std::visit(overloaded{[&](const Hadamard& h) {
                            const std::size_t mask = std::size_t{1} << h.qubit;
                            for (std::size_t k = 0; k < dim; ++k) {
                              if (k & mask) continue;
                              const auto a0 = psi[k];
                              const auto a1 = psi[k | mask];
                              psi[k] = (a0 + a1) * inv_sqrt2;
                              psi[k | mask] = (a0 - a1) * inv_sqrt2;
                            }
                          },
                          [&](const Rzz& r) {
                            const std::complex<double> aligned = std::polar(1.0, -0.5 * r.angle);
                            const std::complex<double> anti = std::conj(aligned);
                            for (std::size_t k = 0; k < dim; ++k) {
                              const bool differ = (((k >> r.a) ^ (k >> r.b)) & 1U) != 0;
                              psi[k] *= differ ? anti : aligned;
                            }
                          },
                          [](const Measure&) {}},
               gate);
  }
  return psi;
}

std::vector<double> outcome_probabilities(const CircuitDescription& c) {
  const auto psi = simulate_statevector(c);
  std::vector<Measure> readout;
  for (const Gate& gate : c.gates) {
    if (const auto* m = std::get_if<Measure>(&gate)) readout.push_back(*m);
  }
  // The classical register has qubit_count bits; unmeasured bits read 0.
  std::vector<double> probs(psi.size(), 0.0);
  for (std::size_t k = 0; k < psi.size(); ++k) {
    std::size_t outcome = 0;
    for (const Measure& m : readout) {
      if ((k >> m.qubit) & 1U) outcome |= std::size_t{1} << m.bit;
    }
    probs[outcome] += std::norm(psi[k]);
  }
  return probs;
}

}  // namespace graphgeo
