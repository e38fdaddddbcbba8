#pragma once

#include "graphgeo/graph.hpp"

namespace graphgeo {

// Central energy moments of the Ising Hamiltonian in |+...+>, in powers of J.
// <H> vanishes in that state, so these equal the raw moments <H^n>.
struct EnergyMoments {
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
};

// Graph quantities the closed forms consume.
struct GraphInvariants {
  double sum_n2 = 0.0;  // sum_i n_i^(2)
  double sum_n3 = 0.0;  // sum_i n_i^(3)
  double sum_n4 = 0.0;  // sum_i n_i^(4)
  double s3 = 0.0;      // triangle weight sum
  double s4 = 0.0;      // 4-cycle weight sum
};

// gamma = hbar = 1 throughout. Curvature and torsion are the dimensionless
// gamma^2/R^2 and tau-bar; velocity is in units of J.
struct GeometryReport {
  double velocity = 0.0;
  double curvature = 0.0;
  double torsion = 0.0;
  EnergyMoments moments;
  GraphInvariants invariants;
};

GraphInvariants graph_invariants(const WeightedGraph& g);

// <dH^2> = sum_i n_i^(2) / 2
double moment2(const WeightedGraph& g);
// <dH^3> = 3! S_3
double moment3(const WeightedGraph& g);
// <dH^4> = 4! S_4 + 3/4 (sum_i n_i^(2))^2 - sum_i n_i^(4)
double moment4(const WeightedGraph& g);

EnergyMoments moments_from_invariants(const GraphInvariants& inv);
EnergyMoments energy_moments(const WeightedGraph& g);

double velocity(const WeightedGraph& g);

// (m4 - m2^2) / m2^2. Throws ZeroVarianceError when m2 == 0.
double curvature(const WeightedGraph& g);
// curvature - m3^2 / m2^3. Throws ZeroVarianceError when m2 == 0.
double torsion(const WeightedGraph& g);

double curvature_from_moments(const EnergyMoments& m);
double torsion_from_moments(const EnergyMoments& m);

// Same quantities written directly in graph invariants:
//   (96 S_4 + 2 X^2 - 4 Y) / X^2                  X = sum n^(2), Y = sum n^(4)
//   (96 S_4 + 2 X^2 - 4 Y) / X^2 - 288 S_3^2 / X^3
double curvature_closed_form(const GraphInvariants& inv);
double torsion_closed_form(const GraphInvariants& inv);

// Throws ZeroVarianceError for graphs without edges.
GeometryReport geometry_report(const WeightedGraph& g);

}  // namespace graphgeo
