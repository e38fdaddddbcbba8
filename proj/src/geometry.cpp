#include "graphgeo/geometry.hpp"

#include <cmath>

#include "graphgeo/error.hpp"

namespace graphgeo {

namespace {

void require_variance(double m2) {
  if (!(m2 > 0.0)) {
    throw ZeroVarianceError("energy variance is zero (graph has no edges); curvature and torsion are undefined");
  }
}

}  // namespace

GraphInvariants graph_invariants(const WeightedGraph& g) {
  GraphInvariants inv;
  inv.sum_n2 = weighted_degree_sum(g, 2);
  inv.sum_n3 = weighted_degree_sum(g, 3);
  inv.sum_n4 = weighted_degree_sum(g, 4);
  inv.s3 = triangle_weight_sum(g);
  inv.s4 = square_weight_sum(g);
  return inv;
}

double moment2(const WeightedGraph& g) { return 0.5 * weighted_degree_sum(g, 2); }

double moment3(const WeightedGraph& g) { return 6.0 * triangle_weight_sum(g); }

double moment4(const WeightedGraph& g) {
  const double x = weighted_degree_sum(g, 2);
  return 24.0 * square_weight_sum(g) + 0.75 * x * x - weighted_degree_sum(g, 4);
}

EnergyMoments moments_from_invariants(const GraphInvariants& inv) {
  return {0.5 * inv.sum_n2, 6.0 * inv.s3, 24.0 * inv.s4 + 0.75 * inv.sum_n2 * inv.sum_n2 - inv.sum_n4};
}

EnergyMoments energy_moments(const WeightedGraph& g) { return {moment2(g), moment3(g), moment4(g)}; }

double velocity(const WeightedGraph& g) { return std::sqrt(moment2(g)); }

double curvature_from_moments(const EnergyMoments& m) {
  require_variance(m.m2);
  const double m2sq = m.m2 * m.m2;
  return (m.m4 - m2sq) / m2sq;
}

double torsion_from_moments(const EnergyMoments& m) {
  return curvature_from_moments(m) - m.m3 * m.m3 / (m.m2 * m.m2 * m.m2);
}

double curvature(const WeightedGraph& g) { return curvature_from_moments(energy_moments(g)); }

double torsion(const WeightedGraph& g) { return torsion_from_moments(energy_moments(g)); }

double curvature_closed_form(const GraphInvariants& inv) {
  require_variance(inv.sum_n2);
  const double x2 = inv.sum_n2 * inv.sum_n2;
  return (96.0 * inv.s4 + 2.0 * x2 - 4.0 * inv.sum_n4) / x2;
}

double torsion_closed_form(const GraphInvariants& inv) {
  const double x3 = inv.sum_n2 * inv.sum_n2 * inv.sum_n2;
  return curvature_closed_form(inv) - 288.0 * inv.s3 * inv.s3 / x3;
}

GeometryReport geometry_report(const WeightedGraph& g) {
  GeometryReport r;
  r.invariants = graph_invariants(g);
  r.moments = moments_from_invariants(r.invariants);
  r.velocity = std::sqrt(r.moments.m2);
  r.curvature = curvature_from_moments(r.moments);
  r.torsion = torsion_from_moments(r.moments);
  return r;
}

}  // namespace graphgeo
