#include "graphgeo/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <string>

#include "graphgeo/circuits.hpp"
#include "graphgeo/error.hpp"

namespace graphgeo {

namespace {

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::uint64_t draw_binomial(std::mt19937_64& rng, std::uint64_t trials, double p) {
  if (trials == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  std::binomial_distribution<std::uint64_t> dist(trials, p);
  return dist(rng);
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("probability " + std::to_string(p) + " outside [0, 1]");
}

void check_shots(std::uint64_t shots) {
  if (shots == 0) throw InvalidArgument("shots must be at least 1");
}

}  // namespace

std::vector<double> phi_grid(double min, double max, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw InvalidArgument("phi step must be positive");
  if (!std::isfinite(min) || !std::isfinite(max) || max < min) throw InvalidArgument("need phi_min <= phi_max");
  const double span = (max - min) / step;
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t k = 0; k < count; ++k) grid.push_back(min + static_cast<double>(k) * step);
  return grid;
}

std::vector<double> default_phi_grid() {
  std::vector<double> grid;
  for (int k = -6; k <= 6; ++k) grid.push_back(k * std::numbers::pi / 64.0);
  return grid;
}

QuadraticFit fit_quadratic(std::span<const double> phi, std::span<const double> p) {
  if (phi.size() != p.size()) throw InvalidArgument("phi and p sizes differ");
  if (std::set<double>(phi.begin(), phi.end()).size() < 3) {
    throw FitError("quadratic fit needs at least three distinct phi values");
  }
  // Regress p on x = phi^2: p = b + slope x with slope = -a.
  const auto n = static_cast<double>(phi.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t k = 0; k < phi.size(); ++k) {
    mean_x += phi[k] * phi[k];
    mean_y += p[k];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t k = 0; k < phi.size(); ++k) {
    const double dx = phi[k] * phi[k] - mean_x;
    sxx += dx * dx;
    sxy += dx * (p[k] - mean_y);
  }
  const double slope = sxy / sxx;
  return {-slope, mean_y - slope * mean_x};
}

double standard_error(double p, std::uint64_t shots) {
  check_probability(p);
  check_shots(shots);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
}

SweepResult run_sweep(const SweepConfig& config) {
  if (config.phi_values.empty()) throw InvalidArgument("phi grid is empty");
  check_shots(config.shots);

  SweepResult result;
  result.shots = config.shots;
  result.seed = config.seed;
  result.ideal = config.ideal;
  result.rng_algorithm = config.ideal ? "none (ideal)" : kRngAlgorithm;

  std::vector<double> estimates;
  double se_sum = 0.0;
  for (std::size_t k = 0; k < config.phi_values.size(); ++k) {
    SweepPoint point;
    point.phi = config.phi_values[k];
    // Weights are in units of J, so t = phi.
    point.exact = std::clamp(loschmidt_echo(config.graph, point.phi, config.oracle), 0.0, 1.0);
    if (config.ideal) {
      point.probability = point.exact;
      point.zero_count = static_cast<std::uint64_t>(std::llround(point.exact * static_cast<double>(config.shots)));
    } else {
      auto rng = substream(config.seed, k);
      point.zero_count = draw_binomial(rng, config.shots, point.exact);
      point.probability = static_cast<double>(point.zero_count) / static_cast<double>(config.shots);
    }
    point.standard_error = standard_error(point.probability, config.shots);
    se_sum += point.standard_error;
    estimates.push_back(point.probability);
    result.points.push_back(point);
  }

  result.fit = fit_quadratic(config.phi_values, estimates);
  result.inferred_m2 = result.fit.a;
  result.inferred_sum_n2 = 2.0 * result.fit.a;
  result.mean_standard_error = se_sum / static_cast<double>(result.points.size());
  return result;
}

double correlator_from_probabilities(std::span<const double, 4> p) { return p[0] - p[1] - p[2] + p[3]; }

double ideal_correlator(const WeightedGraph& g, NodeIndex i, NodeIndex j) {
  if (i >= g.node_count() || j >= g.node_count()) throw InvalidArgument("correlator node out of range");
  const auto probs = outcome_probabilities(build_correlator_protocol(i, j));
  return correlator_from_probabilities(std::span<const double, 4>(probs.data(), 4));
}

CorrelatorEstimate estimate_correlator(const WeightedGraph& g, NodeIndex i, NodeIndex j, std::uint64_t shots,
                                       std::uint64_t seed) {
  if (i >= g.node_count() || j >= g.node_count()) throw InvalidArgument("correlator node out of range");
  check_shots(shots);
  const auto probs = outcome_probabilities(build_correlator_protocol(i, j));

  // Multinomial draw as a chain of conditional binomials.
  auto rng = substream(seed, 0);
  CorrelatorEstimate est;
  est.shots = shots;
  std::uint64_t remaining = shots;
  double mass_left = 1.0;
  for (std::size_t k = 0; k < 3; ++k) {
    const double q = mass_left > 0.0 ? std::clamp(probs[k] / mass_left, 0.0, 1.0) : 0.0;
    est.counts[k] = draw_binomial(rng, remaining, q);
    remaining -= est.counts[k];
    mass_left -= probs[k];
  }
  est.counts[3] = remaining;

  std::array<double, 4> freq{};
  for (std::size_t k = 0; k < 4; ++k) freq[k] = static_cast<double>(est.counts[k]) / static_cast<double>(shots);
  est.value = correlator_from_probabilities(freq);
  return est;
}

ErrorBudget error_budget(std::span<const double> gate_errors, std::span<const double> readout_errors,
                         std::uint64_t shots, double p) {
  auto total_of = [](std::span<const double> rates, const char* what) {
    double sum = 0.0;
    for (double r : rates) {
      if (!(r >= 0.0) || !std::isfinite(r)) throw InvalidArgument(std::string(what) + " must be finite and >= 0");
      sum += r;
    }
    return sum;
  };
  ErrorBudget budget;
  budget.gate_error = total_of(gate_errors, "gate error");
  budget.readout_error = total_of(readout_errors, "readout error");
  budget.standard_error = standard_error(p, shots);
  budget.total = budget.gate_error + budget.readout_error + budget.standard_error;
  return budget;
}

}  // namespace graphgeo
