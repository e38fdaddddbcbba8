#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphgeo/circuits.hpp"
#include "graphgeo/error.hpp"
#include "graphgeo/experiment.hpp"
#include "graphgeo/geometry.hpp"
#include "graphgeo/graph.hpp"
#include "graphgeo/graph_io.hpp"
#include "graphgeo/oracle.hpp"
#include "graphgeo/serialize.hpp"

namespace graphgeo::cli {

namespace {

using nlohmann::json;

struct AnalyzeOptions {
  std::string graph_file;
  bool oracle = false;
  bool pretty = false;
};

struct SimulateOptions {
  std::string graph_file;
  std::uint64_t shots = 1024;
  std::uint64_t seed = 0;
  std::optional<double> phi_min;
  std::optional<double> phi_max;
  std::optional<double> phi_step;
  bool phi_in_pi = false;
  bool ideal = false;
  std::string format = "json";
  bool pretty = false;
  std::string out_file;
};

struct EmitOptions {
  std::string graph_file;
  std::optional<double> phi;
  bool phi_in_pi = false;
  std::string protocol = "usquared";
  std::vector<std::size_t> qubits;
  std::string format = "qasm";
  std::string out_file;
};

OracleOptions oracle_options_from_env() {
  OracleOptions options;
  if (const char* raw = std::getenv(kOracleCapEnv); raw != nullptr && *raw != '\0') {
    std::size_t cap = 0;
    const char* end = raw + std::char_traits<char>::length(raw);
    auto [ptr, ec] = std::from_chars(raw, end, cap);
    if (ec != std::errc{} || ptr != end || cap == 0 || cap > kMaxOracleCap) {
      throw InvalidArgument(std::string(kOracleCapEnv) + " must be an integer in [1, " +
                            std::to_string(kMaxOracleCap) + "]");
    }
    options.max_nodes = cap;
  }
  return options;
}

// Largest deviation of the formula moments from the oracle, each measured
// against the natural scale of that moment (m2, m2^1.5, m2^2).
double moment_deviation(const EnergyMoments& formula, const EnergyMoments& oracle) {
  const double m2 = std::abs(oracle.m2);
  if (m2 == 0.0) {
    return std::max({std::abs(formula.m2), std::abs(formula.m3), std::abs(formula.m4)});
  }
  return std::max({std::abs(formula.m2 - oracle.m2) / m2, std::abs(formula.m3 - oracle.m3) / std::pow(m2, 1.5),
                   std::abs(formula.m4 - oracle.m4) / (m2 * m2)});
}

void write_output(const std::string& text, const std::string& out_file, std::ostream& out) {
  if (out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_file, std::ios::binary);
  if (!file) throw InvalidArgument("cannot write '" + out_file + "'");
  file << text;
}

std::string fmt_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
  const WeightedGraph g = load_graph(opt.graph_file);
  const GraphInvariants inv = graph_invariants(g);
  const EnergyMoments moments = moments_from_invariants(inv);

  json doc = {
      {"tool", tool_info()},
      {"graph", {{"nodes", g.node_count()}, {"edges", g.edge_count()}}},
      {"invariants",
       {{"sum_n2", inv.sum_n2},
        {"sum_n3", inv.sum_n3},
        {"sum_n4", inv.sum_n4},
        {"s3", inv.s3},
        {"s4", inv.s4},
        {"traces", {{"a2", adjacency_trace(g, 2)}, {"a3", adjacency_trace(g, 3)}, {"a4", adjacency_trace(g, 4)}}}}},
      {"moments", {{"m2", moments.m2}, {"m3", moments.m3}, {"m4", moments.m4}}},
      {"provenance", {{"moments", "graph-invariant formulas"}}},
  };

  const bool has_variance = moments.m2 > 0.0;
  if (has_variance) {
    doc["geometry"] = {
        {"velocity", std::sqrt(moments.m2)},
        {"curvature", curvature_from_moments(moments)},
        {"torsion", torsion_from_moments(moments)},
        {"curvature_closed_form", curvature_closed_form(inv)},
        {"torsion_closed_form", torsion_closed_form(inv)},
    };
  } else {
    doc["geometry_unavailable"] = "graph has no edges: energy variance is zero, curvature and torsion are undefined";
  }

  if (opt.oracle) {
    const EnergyMoments brute = oracle_moments(g, oracle_options_from_env());
    doc["oracle"] = {{"m2", brute.m2},
                     {"m3", brute.m3},
                     {"m4", brute.m4},
                     {"max_relative_deviation", moment_deviation(moments, brute)}};
    doc["provenance"]["oracle"] = "brute-force enumeration of 2^N spin configurations";
  }

  if (opt.pretty) {
    out << "graph      N=" << g.node_count() << " |E|=" << g.edge_count() << "\n"
        << "sum n2     " << fmt_real(inv.sum_n2) << "\n"
        << "sum n3     " << fmt_real(inv.sum_n3) << "\n"
        << "sum n4     " << fmt_real(inv.sum_n4) << "\n"
        << "S3         " << fmt_real(inv.s3) << "\n"
        << "S4         " << fmt_real(inv.s4) << "\n"
        << "<dH^2>     " << fmt_real(moments.m2) << "\n"
        << "<dH^3>     " << fmt_real(moments.m3) << "\n"
        << "<dH^4>     " << fmt_real(moments.m4) << "\n";
    if (has_variance) {
      out << "velocity   " << fmt_real(doc["geometry"]["velocity"].get<double>()) << "\n"
          << "curvature  " << fmt_real(doc["geometry"]["curvature"].get<double>()) << "\n"
          << "torsion    " << fmt_real(doc["geometry"]["torsion"].get<double>()) << "\n";
    }
    if (opt.oracle) {
      out << "oracle dev " << fmt_real(doc["oracle"]["max_relative_deviation"].get<double>()) << "\n";
    }
  } else {
    out << doc.dump(2) << "\n";
  }

  if (!has_variance) {
    err << "graphgeo: zero energy variance: curvature and torsion are undefined for a graph without edges\n";
    return kZeroVariance;
  }
  return kOk;
}

int cmd_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream&) {
  const WeightedGraph g = load_graph(opt.graph_file);
  const double unit = opt.phi_in_pi ? std::numbers::pi : 1.0;

  std::vector<double> grid;
  if (!opt.phi_min && !opt.phi_max && !opt.phi_step) {
    grid = default_phi_grid();
  } else {
    const double default_min = -3.0 * std::numbers::pi / 32.0;
    const double default_max = 3.0 * std::numbers::pi / 32.0;
    const double default_step = std::numbers::pi / 64.0;
    grid = phi_grid(opt.phi_min ? *opt.phi_min * unit : default_min, opt.phi_max ? *opt.phi_max * unit : default_max,
                    opt.phi_step ? *opt.phi_step * unit : default_step);
  }

  SweepConfig config{g, grid, opt.shots, opt.seed, opt.ideal, oracle_options_from_env()};
  const SweepResult result = run_sweep(config);

  std::string text;
  if (opt.format == "csv") {
    text = sweep_to_csv(result);
  } else if (opt.pretty) {
    text = "phi                  p_est        stderr\n";
    for (const SweepPoint& p : result.points) {
      char line[96];
      std::snprintf(line, sizeof line, "%-20.12g %-12.6f %.6f\n", p.phi, p.probability, p.standard_error);
      text += line;
    }
    text += "fit: p = " + fmt_real(result.fit.b) + " - " + fmt_real(result.fit.a) + " phi^2\n";
    text += "inferred <dH^2> = " + fmt_real(result.inferred_m2) + " J^2, sum n2 = " + fmt_real(result.inferred_sum_n2) +
            " J^2\n";
    text += "hardware reference: a = 4.08, b = 0.94, sum n2 = 10.36 (not a simulation target)\n";
  } else {
    text = to_json(result, g).dump(2) + "\n";
  }
  write_output(text, opt.out_file, out);
  return kOk;
}

int cmd_emit(const EmitOptions& opt, std::ostream& out, std::ostream&) {
  std::optional<WeightedGraph> g;
  if (!opt.graph_file.empty()) g = load_graph(opt.graph_file);

  CircuitDescription circuit;
  if (opt.protocol == "usquared") {
    if (!g) throw InvalidArgument("the usquared protocol needs a graph file");
    if (!opt.phi) throw InvalidArgument("the usquared protocol needs --phi");
    circuit = build_usquared_protocol(*g, *opt.phi * (opt.phi_in_pi ? std::numbers::pi : 1.0));
  } else {
    if (opt.qubits.size() != 2) throw InvalidArgument("--qubits expects exactly two indices, e.g. 0,2");
    if (g && (opt.qubits[0] >= g->node_count() || opt.qubits[1] >= g->node_count())) {
      throw InvalidArgument("--qubits index outside the graph");
    }
    circuit = build_correlator_protocol(opt.qubits[0], opt.qubits[1]);
  }

  const std::string text = opt.format == "json" ? to_json(circuit).dump(2) + "\n" : to_qasm(circuit);
  write_output(text, opt.out_file, out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Velocity, curvature and torsion of weighted graph states of Ising spin systems"};
  app.name("graphgeo");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "graph invariants, energy moments and geometry");
  analyze_cmd->add_option("graph", analyze.graph_file, "edge-list or .json graph file")->required();
  analyze_cmd->add_flag("--oracle", analyze.oracle, "cross-check moments by brute-force enumeration");
  analyze_cmd->add_flag("--pretty", analyze.pretty, "human-readable table instead of JSON");

  SimulateOptions simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "shot-noise sweep of |<U>|^2 and quadratic fit");
  simulate_cmd->add_option("graph", simulate.graph_file, "edge-list or .json graph file")->required();
  simulate_cmd->add_option("--shots", simulate.shots, "shots per grid point")->capture_default_str();
  simulate_cmd->add_option("--seed", simulate.seed, "random seed")->capture_default_str();
  simulate_cmd->add_option("--phi-min", simulate.phi_min, "first grid value (default -3pi/32)");
  simulate_cmd->add_option("--phi-max", simulate.phi_max, "last grid value (default 3pi/32)");
  simulate_cmd->add_option("--phi-step", simulate.phi_step, "grid step (default pi/64)");
  simulate_cmd->add_flag("--phi-in-pi", simulate.phi_in_pi, "phi values are multiples of pi");
  simulate_cmd->add_flag("--ideal", simulate.ideal, "exact probabilities, no shot noise");
  simulate_cmd->add_option("--format", simulate.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  simulate_cmd->add_flag("--pretty", simulate.pretty, "human-readable table instead of JSON");
  simulate_cmd->add_option("--out", simulate.out_file, "write to file instead of standard output");

  EmitOptions emit;
  auto* emit_cmd = app.add_subcommand("emit", "OpenQASM 2.0 for a measurement protocol");
  emit_cmd->add_option("graph", emit.graph_file, "edge-list or .json graph file");
  emit_cmd->add_option("--phi", emit.phi, "phi = J t / hbar (radians)");
  emit_cmd->add_flag("--phi-in-pi", emit.phi_in_pi, "--phi is a multiple of pi");
  emit_cmd->add_option("--protocol", emit.protocol, "usquared or correlator")
      ->check(CLI::IsMember({"usquared", "correlator"}))
      ->capture_default_str();
  emit_cmd->add_option("--qubits", emit.qubits, "node pair for the correlator protocol, e.g. 0,2")->delimiter(',');
  emit_cmd->add_option("--format", emit.format, "qasm or json")
      ->check(CLI::IsMember({"qasm", "json"}))
      ->capture_default_str();
  emit_cmd->add_option("--out", emit.out_file, "write to file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze, out, err);
    if (*simulate_cmd) return cmd_simulate(simulate, out, err);
    return cmd_emit(emit, out, err);
  } catch (const ParseError& e) {
    err << "graphgeo: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidGraph& e) {
    err << "graphgeo: " << e.what() << "\n";
    return kInputError;
  } catch (const ZeroVarianceError& e) {
    err << "graphgeo: " << e.what() << "\n";
    return kZeroVariance;
  } catch (const SizeCapError& e) {
    err << "graphgeo: " << e.what() << " (set " << kOracleCapEnv << " to raise it)\n";
    return kOracleCap;
  } catch (const Error& e) {
    err << "graphgeo: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace graphgeo::cli
