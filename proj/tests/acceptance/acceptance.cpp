// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "../../tools/cli.hpp"
#include "graphgeo/circuits.hpp"
#include "graphgeo/experiment.hpp"
#include "graphgeo/geometry.hpp"
#include "graphgeo/oracle.hpp"
#include "test_support.hpp"

using namespace graphgeo;
using namespace graphgeo::testing;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned tolerances.
constexpr double kChainTol = 1e-12;          // absolute
constexpr double kOracleTol = 1e-9;          // relative, natural scale
constexpr double kTraceTol = 1e-9;           // relative, natural scale
constexpr double kCountTol = 1e-12;          // relative, floor 1
constexpr double kPositivityTol = 1e-12;     // relative to m2^3
constexpr double kSmallTimeTol = 1e-5;       // relative
constexpr double kSmallTimeStep = 1e-4;
constexpr double kReadoutTol = 1e-6;         // absolute
constexpr double kStderrTol = 5e-5;          // absolute, against the rounded 0.0074
constexpr double kRoundTripTol = 1e-12;      // absolute on probabilities
constexpr double kSumN2Rel = 0.05;

constexpr std::uint64_t kCorpusSeed = 20240611;
constexpr std::size_t kCorpusSize = 240;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

const std::vector<WeightedGraph>& corpus() {
  static const auto c = random_corpus(kCorpusSize, kCorpusSeed);
  return c;
}

Outcome chain_reproduction() {
  const auto t0 = Clock::now();
  const std::string path = std::string(GRAPHGEO_TEST_DIR) + "/data/chain.txt";
  const char* argv[] = {"graphgeo", "analyze", path.c_str()};
  std::ostringstream out, err;
  const int code = cli::run(3, argv, out, err);
  const double elapsed = seconds_since(t0);
  if (code != 0) return {false, "analyze exited " + std::to_string(code) + ": " + err.str()};

  const auto doc = nlohmann::json::parse(out.str());
  struct Want {
    const char* name;
    double got, want;
  };
  const Want wants[] = {
      {"sum_n2", doc["invariants"]["sum_n2"].get<double>(), 10.0},
      {"m2", doc["moments"]["m2"].get<double>(), 5.0},
      {"m3", doc["moments"]["m3"].get<double>(), 0.0},
      {"m4", doc["moments"]["m4"].get<double>(), 41.0},
      {"curvature", doc["geometry"]["curvature"].get<double>(), 0.64},
      {"torsion", doc["geometry"]["torsion"].get<double>(), 0.64},
  };
  Outcome o;
  for (const auto& w : wants) {
    if (std::abs(w.got - w.want) > kChainTol) {
      o.pass = false;
      o.detail += fmt("%s=%.17g (want %.17g) ", w.name, w.got, w.want);
    }
  }
  if (elapsed >= 1.0) {
    o.pass = false;
    o.detail += fmt("runtime %.3fs ", elapsed);
  }
  if (o.pass) o.detail = fmt("sum_n2=10 m2=5 m3=0 m4=41 curvature=torsion=0.64, %.3fs", elapsed);
  return o;
}

Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (const auto& g : corpus()) {
    const auto f = energy_moments(g);
    const auto b = oracle_moments(g);
    const double m2 = b.m2;
    const auto rel = [](double x, double y, double scale) {
      const double s = std::max({std::abs(x), std::abs(y), scale});
      return s == 0.0 ? 0.0 : std::abs(x - y) / s;
    };
    worst = std::max({worst, rel(f.m2, b.m2, 0.0), rel(f.m3, b.m3, std::pow(m2, 1.5)), rel(f.m4, b.m4, m2 * m2)});
  }
  const double elapsed = seconds_since(t0);
  const bool pass = worst <= kOracleTol && elapsed < 60.0;
  return {pass, fmt("%zu graphs, max rel deviation %.3g, %.2fs", corpus().size(), worst, elapsed)};
}

Outcome trace_identities() {
  double worst = 0.0;
  for (const auto& g : corpus()) {
    const auto inv = graph_invariants(g);
    const double a3 = dense_trace_power(g, 3);
    const double a4 = dense_trace_power(g, 4);
    double sq = 0.0;
    for (double d : brute_degrees(g, 2)) sq += d * d;
    const double rhs4 = a4 - 2.0 * sq + inv.sum_n4;
    const double scale3 = std::pow(inv.sum_n2, 1.5);
    const double scale4 = std::max(inv.sum_n2 * inv.sum_n2, a4);
    const auto rel = [](double x, double y, double scale) {
      const double s = std::max({std::abs(x), std::abs(y), scale});
      return s == 0.0 ? 0.0 : std::abs(x - y) / s;
    };
    worst = std::max({worst, rel(6.0 * inv.s3, a3, scale3), rel(8.0 * inv.s4, rhs4, scale4)});
  }
  return {worst <= kTraceTol, fmt("%zu graphs, max rel deviation %.3g", corpus().size(), worst)};
}

Outcome unweighted_reduction() {
  std::mt19937_64 rng(kCorpusSeed + 1);
  std::uniform_int_distribution<std::size_t> size(2, 12);
  constexpr int kGraphs = 60;
  int bad = 0;
  for (int k = 0; k < kGraphs; ++k) {
    const auto g = random_unweighted_graph(rng, size(rng), 0.5);
    const auto shapes = count_shapes(g);
    const double k2 = static_cast<double>(shapes.edges);
    const double m3 = 6.0 * static_cast<double>(shapes.triangles);
    const double m4 = k2 + 3.0 * k2 * (k2 - 1.0) + 24.0 * static_cast<double>(shapes.squares);
    const auto got = energy_moments(g);
    if (!close_to(got.m3, m3, kCountTol, 1.0) || !close_to(got.m4, m4, kCountTol, 1.0)) ++bad;
  }
  return {bad == 0, fmt("%d graphs, %d mismatches", kGraphs, bad)};
}

Outcome positivity() {
  int bad = 0, checked = 0;
  for (const auto& g : corpus()) {
    const auto m = energy_moments(g);
    if (m.m2 < 0.0) ++bad;
    if (m.m2 == 0.0) continue;
    ++checked;
    const double scale = m.m2 * m.m2 * m.m2;
    if (m.m4 < m.m2 * m.m2 * (1.0 - kPositivityTol)) ++bad;
    if (m.m4 * m.m2 - scale - m.m3 * m.m3 < -kPositivityTol * scale) ++bad;
    const double c = curvature_from_moments(m);
    const double t = torsion_from_moments(m);
    if (c < -kPositivityTol || t < -kPositivityTol || t > c + kPositivityTol * std::max(1.0, c)) ++bad;
  }
  return {bad == 0, fmt("%d graphs with edges, %d violations", checked, bad)};
}

Outcome small_time_law() {
  const auto graphs = random_corpus(20, kCorpusSeed + 2, 10);
  double worst = 0.0;
  const double h = kSmallTimeStep;
  for (const auto& g : graphs) {
    const double fd = (loschmidt_echo(g, h) - 2.0 * loschmidt_echo(g, 0.0) + loschmidt_echo(g, -h)) / (h * h);
    const double want = -2.0 * moment2(g);
    const double s = std::max(std::abs(fd), std::abs(want));
    if (s > 0.0) worst = std::max(worst, std::abs(fd - want) / s);
  }
  return {worst <= kSmallTimeTol, fmt("20 graphs, h=%g, max rel deviation %.3g", h, worst)};
}

Outcome sweep_fit() {
  const auto chain = chain_1_2();
  SweepConfig ideal{.graph = chain, .phi_values = default_phi_grid(), .ideal = true};
  const auto r = run_sweep(ideal);
  const bool a_ok = r.fit.a >= 4.7 && r.fit.a <= 5.0;
  const bool b_ok = r.fit.b >= 0.99 && r.fit.b <= 1.0;

  constexpr int kSeeds = 100;
  double sum = 0.0;
  for (int s = 0; s < kSeeds; ++s) {
    SweepConfig cfg{.graph = chain, .phi_values = default_phi_grid(), .shots = 1024, .seed = std::uint64_t(s)};
    sum += run_sweep(cfg).inferred_sum_n2;
  }
  const double mean = sum / kSeeds;
  const bool mean_ok = std::abs(mean - 10.0) <= kSumN2Rel * 10.0;

  Outcome o{a_ok && b_ok && mean_ok,
            fmt("ideal a=%.6f [4.7,5.0] %s, b=%.6f [0.99,1.0] %s, mean sum_n2=%.4f over %d seeds (10 +/- 5%%) %s",
                r.fit.a, a_ok ? "ok" : "out", r.fit.b, b_ok ? "ok" : "out", mean, kSeeds, mean_ok ? "ok" : "out")};
  o.detail += "; hardware reference a=4.08 sum_n2=10.36 curvature=0.649 torsion=0.619 (not asserted)";
  return o;
}

Outcome error_budget_check() {
  const std::vector<double> readout{0.0099, 0.0261, 0.0129};
  const auto b = error_budget({}, readout, 1024, 0.94);
  const bool readout_ok = std::abs(b.readout_error - 0.0489) <= kReadoutTol;

  const double se = standard_error(0.94, 1024);
  const bool se_ok = std::abs(se - std::sqrt(0.94 * 0.06 / 1024.0)) <= 1e-15 && std::abs(se - 0.0074) <= kStderrTol;

  // Mean standard error is the plain average of per-point errors sqrt(p(1-p)/shots).
  SweepConfig cfg{.graph = chain_1_2(), .phi_values = default_phi_grid(), .shots = 1024, .seed = 7};
  const auto r = run_sweep(cfg);
  double mean = 0.0;
  bool per_point_ok = true;
  for (const auto& p : r.points) {
    per_point_ok &= std::abs(p.standard_error - standard_error(p.probability, r.shots)) <= 1e-15;
    mean += p.standard_error;
  }
  mean /= static_cast<double>(r.points.size());
  const bool mean_ok = per_point_ok && std::abs(mean - r.mean_standard_error) <= 1e-15;

  return {readout_ok && se_ok && mean_ok,
          fmt("readout=%.6f, stderr(0.94,1024)=%.6f, mean stderr formula %s (hardware average 0.011 not asserted)",
              b.readout_error, se, mean_ok ? "consistent" : "inconsistent")};
}

Outcome circuit_round_trip() {
  const auto graphs = random_corpus(40, kCorpusSeed + 3, 10);
  double worst = 0.0;
  for (const auto& g : graphs) {
    for (double t : {0.05, 0.3, 1.1}) {
      const double p0 = outcome_probabilities(build_usquared_protocol(g, t)).front();
      worst = std::max(worst, std::abs(p0 - loschmidt_echo(g, t)));
    }
  }
  const std::string golden = read_file(std::string(GRAPHGEO_TEST_DIR) + "/golden/chain_usquared_pi16.qasm");
  const bool golden_ok = !golden.empty() && to_qasm(build_usquared_protocol(chain_1_2(), std::numbers::pi / 16)) == golden;
  return {worst <= kRoundTripTol && golden_ok,
          fmt("40 graphs x 3 times, max |p0 - echo| %.3g; chain QASM at pi/16 %s", worst,
              golden_ok ? "byte-exact" : "differs from golden")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {1, "chain reproduction", chain_reproduction},
      {2, "oracle equivalence", oracle_equivalence},
      {3, "trace identities", trace_identities},
      {4, "unweighted reduction", unweighted_reduction},
      {5, "moment positivity", positivity},
      {6, "small-time law", small_time_law},
      {7, "sweep fit", sweep_fit},
      {8, "error budget", error_budget_check},
      {9, "circuit round-trip", circuit_round_trip},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
