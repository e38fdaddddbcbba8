#include "graphgeo/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>
#include <utility>

#include "graphgeo/error.hpp"
#include "graphgeo/summation.hpp"

namespace graphgeo {

namespace {

// Fixed block size: the reduction tree depends only on N, never on the
// number of workers, so results are bit-identical across thread counts.
constexpr Configuration kBlockSize = Configuration{1} << 14;

void check_cap(const WeightedGraph& g, const OracleOptions& options) {
  const std::size_t cap = std::min(options.max_nodes, kMaxOracleCap);
  if (g.node_count() > cap) throw SizeCapError(g.node_count(), cap);
}

// block(first, last) -> Acc for each fixed-size block; blocks are combined
// in ascending order with Acc::add.
template <typename Acc, typename BlockFn>
Acc reduce_configurations(std::size_t node_count, const OracleOptions& options, BlockFn block) {
  const Configuration total = Configuration{1} << node_count;
  const Configuration blocks = (total + kBlockSize - 1) / kBlockSize;
  std::vector<Acc> partial(static_cast<std::size_t>(blocks));

  unsigned workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  workers = static_cast<unsigned>(std::clamp<Configuration>(workers, 1, blocks));

  std::atomic<Configuration> next{0};
  auto run = [&] {
    for (Configuration b = next.fetch_add(1); b < blocks; b = next.fetch_add(1)) {
      const Configuration first = b * kBlockSize;
      partial[static_cast<std::size_t>(b)] = block(first, std::min(first + kBlockSize, total));
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  }

  Acc result;
  for (const Acc& p : partial) result.add(p);
  return result;
}

struct MomentAcc {
  CompensatedSum s2;
  CompensatedSum s3;
  CompensatedSum s4;

  void add(const MomentAcc& o) noexcept {
    s2.add(o.s2);
    s3.add(o.s3);
    s4.add(o.s4);
  }
};

struct ComplexAcc {
  CompensatedComplexSum sum;
  void add(const ComplexAcc& o) noexcept { sum.add(o.sum); }
};

struct RealAcc {
  CompensatedSum sum;
  void add(const RealAcc& o) noexcept { sum.add(o.sum); }
};

double inverse_count(std::size_t node_count) { return std::ldexp(1.0, -static_cast<int>(node_count)); }

}  // namespace

double configuration_energy(const WeightedGraph& g, Configuration z) noexcept {
  double e = 0.0;
  for (const Edge& edge : g.edges()) {
    const bool anti = (((z >> edge.i) ^ (z >> edge.j)) & 1U) != 0;
    e += anti ? -edge.weight : edge.weight;
  }
  return e;
}

EnergySpectrum::EnergySpectrum(WeightedGraph graph, std::vector<double> energies)
    : graph_(std::move(graph)), energies_(std::move(energies)) {
  if (energies_.size() != (std::size_t{1} << graph_.node_count())) {
    throw InvalidArgument("spectrum size must be 2^N");
  }
}

EnergySpectrum spectrum(const WeightedGraph& g, const OracleOptions& options) {
  check_cap(g, options);
  std::vector<double> energies(std::size_t{1} << g.node_count());
  for (Configuration z = 0; z < energies.size(); ++z) energies[z] = configuration_energy(g, z);
  return EnergySpectrum(g, std::move(energies));
}

EnergyMoments oracle_moments(const WeightedGraph& g, const OracleOptions& options) {
  check_cap(g, options);
  const auto acc = reduce_configurations<MomentAcc>(g.node_count(), options, [&](Configuration first, Configuration last) {
    MomentAcc a;
    for (Configuration z = first; z < last; ++z) {
      const double e = configuration_energy(g, z);
      const double e2 = e * e;
      a.s2.add(e2);
      a.s3.add(e2 * e);
      a.s4.add(e2 * e2);
    }
    return a;
  });
  const double scale = inverse_count(g.node_count());
  return {acc.s2.value() * scale, acc.s3.value() * scale, acc.s4.value() * scale};
}

double oracle_moment(const WeightedGraph& g, int n, const OracleOptions& options) {
  if (n < 1 || n > 4) throw InvalidArgument("moment order must be in [1, 4], got " + std::to_string(n));
  if (n == 1) {
    // Count aligned minus anti-aligned configurations per edge in integers;
    // the mean is then exact.
    check_cap(g, options);
    const Configuration total = Configuration{1} << g.node_count();
    double mean = 0.0;
    for (const Edge& edge : g.edges()) {
      long long balance = 0;
      for (Configuration z = 0; z < total; ++z) {
        balance += (((z >> edge.i) ^ (z >> edge.j)) & 1U) != 0 ? -1 : 1;
      }
      mean += edge.weight * static_cast<double>(balance);
    }
    return mean * inverse_count(g.node_count());
  }
  const EnergyMoments m = oracle_moments(g, options);
  return n == 2 ? m.m2 : n == 3 ? m.m3 : m.m4;
}

std::complex<double> loschmidt_amplitude(const WeightedGraph& g, double t, const OracleOptions& options) {
  check_cap(g, options);
  const auto acc = reduce_configurations<ComplexAcc>(g.node_count(), options, [&](Configuration first, Configuration last) {
    ComplexAcc a;
    for (Configuration z = first; z < last; ++z) {
      const double phase = -configuration_energy(g, z) * t;
      a.sum.add({std::cos(phase), std::sin(phase)});
    }
    return a;
  });
  return acc.sum.value() * inverse_count(g.node_count());
}

double loschmidt_echo(const WeightedGraph& g, double t, const OracleOptions& options) {
  return std::norm(loschmidt_amplitude(g, t, options));
}

double zz_correlator(const WeightedGraph& g, std::size_t i, std::size_t j, double t, const OracleOptions& options) {
  if (i >= g.node_count() || j >= g.node_count() || i == j) {
    throw InvalidArgument("correlator needs two distinct nodes in range, got (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
  }
  check_cap(g, options);
  const double amplitude = std::sqrt(inverse_count(g.node_count()));
  const auto acc = reduce_configurations<RealAcc>(g.node_count(), options, [&](Configuration first, Configuration last) {
    RealAcc a;
    for (Configuration z = first; z < last; ++z) {
      const double phase = -configuration_energy(g, z) * t;
      const double weight = std::norm(std::polar(amplitude, phase));
      const bool anti = (((z >> i) ^ (z >> j)) & 1U) != 0;
      a.sum.add(anti ? -weight : weight);
    }
    return a;
  });
  return acc.sum.value();
}

}  // namespace graphgeo
