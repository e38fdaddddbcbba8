#include "graphgeo/serialize.hpp"

#include <cstdio>

namespace graphgeo {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

nlohmann::json tool_info() { return {{"name", kToolName}, {"version", kToolVersion}}; }

nlohmann::json to_json(const SweepResult& result, const WeightedGraph& g) {
  nlohmann::json points = nlohmann::json::array();
  for (const SweepPoint& p : result.points) {
    points.push_back({{"phi", p.phi},
                      {"p_exact", p.exact},
                      {"p_est", p.probability},
                      {"stderr", p.standard_error},
                      {"zero_count", p.zero_count}});
  }
  return {
      {"tool", tool_info()},
      {"graph", {{"nodes", g.node_count()}, {"edges", g.edge_count()}}},
      {"config",
       {{"shots", result.shots}, {"seed", result.seed}, {"ideal", result.ideal}, {"rng_algorithm", result.rng_algorithm}}},
      {"points", points},
      {"fit", {{"model", "p = b - a*phi^2"}, {"a", result.fit.a}, {"b", result.fit.b}}},
      {"inferred_m2", result.inferred_m2},
      {"inferred_sum_n2", result.inferred_sum_n2},
      {"mean_standard_error", result.mean_standard_error},
      // Published superconducting-hardware run of the same protocol on the
      // 1-2 chain. Includes gate and readout noise that is not simulated here.
      {"hardware_reference",
       {{"a", 4.08}, {"b", 0.94}, {"sum_n2", 10.36}, {"note", "hardware measurement; not a simulation target"}}},
  };
}

std::string sweep_to_csv(const SweepResult& result) {
  std::string out = "phi,p_est,stderr\n";
  char buf[96];
  for (const SweepPoint& p : result.points) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p.phi, p.probability, p.standard_error);
    out += buf;
  }
  return out;
}

nlohmann::json to_json(const CircuitDescription& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& gate : c.gates) {
    std::visit(overloaded{[&](const Hadamard& h) { gates.push_back({{"op", "h"}, {"qubits", {h.qubit}}}); },
                          [&](const Rzz& r) {
                            gates.push_back({{"op", "rzz"}, {"angle", r.angle}, {"qubits", {r.a, r.b}}});
                          },
                          [&](const Measure& m) {
                            gates.push_back({{"op", "measure"}, {"qubits", {m.qubit}}, {"bit", m.bit}});
                          }},
               gate);
  }
  nlohmann::json doc = {
      {"qubits", c.qubit_count},
      {"protocol", c.metadata.protocol},
      {"source_nodes", c.metadata.source_nodes},
      {"gates", gates},
  };
  if (c.metadata.time) doc["time"] = *c.metadata.time;
  return doc;
}

}  // namespace graphgeo
