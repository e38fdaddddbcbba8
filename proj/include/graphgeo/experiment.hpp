#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "graphgeo/graph.hpp"
#include "graphgeo/oracle.hpp"

namespace graphgeo {

// Identifier of the random source recorded in every sweep result.
inline constexpr const char* kRngAlgorithm =
    "mt19937_64 seeded by std::seed_seq{seed_lo, seed_hi, index_lo, index_hi}; std::binomial_distribution";

struct SweepConfig {
  WeightedGraph graph;
  std::vector<double> phi_values;  // phi = J t / hbar
  std::uint64_t shots = 1024;
  std::uint64_t seed = 0;
  bool ideal = false;
  OracleOptions oracle = {};
};

struct SweepPoint {
  double phi = 0.0;
  double exact = 0.0;         // |<U>|^2 from the oracle
  double probability = 0.0;   // reported estimate (== exact when ideal)
  double standard_error = 0.0;
  std::uint64_t zero_count = 0;  // all-zeros outcomes (shots * exact when ideal, rounded)
};

// Model p(phi) = b - a phi^2.
struct QuadraticFit {
  double a = 0.0;
  double b = 0.0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  QuadraticFit fit;
  double inferred_m2 = 0.0;      // a, in units of J^2
  double inferred_sum_n2 = 0.0;  // 2 a
  double mean_standard_error = 0.0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  bool ideal = false;
  std::string rng_algorithm;
};

// Inclusive grid min, min + step, ... up to max (endpoint kept when within
// step * 1e-9). Throws InvalidArgument for step <= 0 or max < min.
std::vector<double> phi_grid(double min, double max, double step);

// -3 pi/32 .. 3 pi/32 in steps of pi/64 (13 points, built as k pi / 64).
std::vector<double> default_phi_grid();

// Ordinary least squares for b - a phi^2. Throws FitError with fewer than
// three distinct phi values.
QuadraticFit fit_quadratic(std::span<const double> phi, std::span<const double> p);

double standard_error(double p, std::uint64_t shots);

// Throws InvalidArgument for an empty grid or zero shots, SizeCapError from
// the oracle, FitError for a degenerate grid.
SweepResult run_sweep(const SweepConfig& config);

struct CorrelatorEstimate {
  // Outcome counts indexed by (bit of node i) + 2 (bit of node j).
  std::array<std::uint64_t, 4> counts{};
  std::uint64_t shots = 0;
  double value = 0.0;  // p00 - p01 - p10 + p11
};

// p00 - p01 - p10 + p11 for a distribution indexed like CorrelatorEstimate::counts.
double correlator_from_probabilities(std::span<const double, 4> p);

// Exact value of the correlator protocol (infinite shots).
double ideal_correlator(const WeightedGraph& g, NodeIndex i, NodeIndex j);

// Samples the correlator protocol's four outcomes with multinomial shot noise.
CorrelatorEstimate estimate_correlator(const WeightedGraph& g, NodeIndex i, NodeIndex j, std::uint64_t shots,
                                       std::uint64_t seed);

struct ErrorBudget {
  double gate_error = 0.0;
  double readout_error = 0.0;
  double standard_error = 0.0;
  double total = 0.0;
};

// gate_error and readout_error are plain sums of the supplied per-gate and
// per-qubit rates; standard_error = sqrt(p (1 - p) / shots).
ErrorBudget error_budget(std::span<const double> gate_errors, std::span<const double> readout_errors,
                         std::uint64_t shots, double p);

}  // namespace graphgeo
