#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace graphgeo {

using NodeIndex = std::size_t;

// One undirected Ising coupling J_ij, in units of a reference coupling J.
struct Edge {
  NodeIndex i = 0;
  NodeIndex j = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeIndex node = 0;
  double weight = 0.0;
};

// Simple undirected weighted graph. Immutable after construction.
//
// Edges keep their input order (the circuit builder relies on it); a CSR
// adjacency sorted by neighbour index is built alongside for the invariant
// computations.
class WeightedGraph {
 public:
  // Throws InvalidGraph on node_count == 0, out-of-range index, self-loop,
  // duplicate unordered pair, or a zero / non-finite weight.
  WeightedGraph(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Sorted by neighbour index. Throws InvalidArgument for a bad index.
  std::span<const Neighbor> neighbors(NodeIndex i) const;

  std::optional<double> weight(NodeIndex i, NodeIndex j) const;

  // Every weight multiplied by factor (factor != 0).
  WeightedGraph scaled(double factor) const;

  // Node i becomes permutation[i]. Edge order is preserved.
  WeightedGraph relabeled(std::span<const NodeIndex> permutation) const;

 private:
  std::size_t node_count_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

// G^(k): same node and edge set as the base graph, weights raised to k.
// Holds a reference; the base graph must outlive it.
class PowerGraph {
 public:
  PowerGraph(const WeightedGraph& base, int power);

  const WeightedGraph& base() const noexcept { return *base_; }
  int power() const noexcept { return power_; }

  double weight(const Edge& e) const noexcept;
  double weighted_degree(NodeIndex i) const;
  double weighted_degree_sum() const;

 private:
  const WeightedGraph* base_;
  int power_;
};

// w^k for small non-negative k by repeated multiplication.
double ipow(double w, int k) noexcept;

// n_i^(k) = sum_j J_ij^k, k in {1,2,3,4}.
double weighted_degree(const WeightedGraph& g, int k, NodeIndex i);

// sum_i n_i^(k), accumulated node by node (so it equals the per-node sum bit for bit).
double weighted_degree_sum(const WeightedGraph& g, int k);

// S_3: each unordered triangle once, product of its three weights.
double triangle_weight_sum(const WeightedGraph& g);

// S_4: each 4-cycle on four distinct vertices once, product of its four weights.
double square_weight_sum(const WeightedGraph& g);

// tr(A^k), k in {2,3,4}, from explicit dense matrix powers.
double adjacency_trace(const WeightedGraph& g, int k);

}  // namespace graphgeo
