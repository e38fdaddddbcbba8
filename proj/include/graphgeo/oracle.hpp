#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "graphgeo/geometry.hpp"
#include "graphgeo/graph.hpp"

namespace graphgeo {

// Brute-force reference. H_I is diagonal in the computational basis and
// |+...+> weights every configuration equally, so each expectation value is
// an average over the 2^N spin configurations. Bit i of a configuration set
// means spin i is down (z_i = -1).

inline constexpr std::size_t kDefaultOracleCap = 24;
inline constexpr std::size_t kMaxOracleCap = 40;

struct OracleOptions {
  std::size_t max_nodes = kDefaultOracleCap;
  unsigned threads = 0;  // 0: std::thread::hardware_concurrency()
};

using Configuration = std::uint64_t;

// E(z) = sum over edges of J_ij z_i z_j, in units of J.
double configuration_energy(const WeightedGraph& g, Configuration z) noexcept;

class EnergySpectrum {
 public:
  EnergySpectrum(WeightedGraph graph, std::vector<double> energies);

  const WeightedGraph& graph() const noexcept { return graph_; }
  std::span<const double> energies() const noexcept { return energies_; }
  double energy(Configuration z) const { return energies_.at(z); }
  std::size_t size() const noexcept { return energies_.size(); }

 private:
  WeightedGraph graph_;
  std::vector<double> energies_;
};

// All 2^N energies, materialised. Throws SizeCapError above options.max_nodes.
EnergySpectrum spectrum(const WeightedGraph& g, const OracleOptions& options = {});

// 2^-N sum_z E(z)^n for n in {1, 2, 3, 4}; n = 1 is exactly 0.
double oracle_moment(const WeightedGraph& g, int n, const OracleOptions& options = {});

// m2, m3, m4 in a single pass over the configurations.
EnergyMoments oracle_moments(const WeightedGraph& g, const OracleOptions& options = {});

// <psi0| exp(-i H t) |psi0>, t in units of hbar/J. Exactly 1 at t = 0.
std::complex<double> loschmidt_amplitude(const WeightedGraph& g, double t, const OracleOptions& options = {});

// |<U>|^2
double loschmidt_echo(const WeightedGraph& g, double t, const OracleOptions& options = {});

// <psi(t)| Z_i Z_j |psi(t)> with |psi(t)> = exp(-i H t)|+...+>.
double zz_correlator(const WeightedGraph& g, std::size_t i, std::size_t j, double t,
                     const OracleOptions& options = {});

}  // namespace graphgeo
