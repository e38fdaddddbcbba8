#include "graphgeo/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "graphgeo/error.hpp"

namespace graphgeo {

namespace {

void check_power(int k, int lo, int hi) {
  if (k < lo || k > hi) {
    throw InvalidArgument("power " + std::to_string(k) + " outside [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  }
}

void check_node(const WeightedGraph& g, NodeIndex i) {
  if (i >= g.node_count()) {
    throw InvalidArgument("node " + std::to_string(i) + " out of range for graph with " +
                          std::to_string(g.node_count()) + " nodes");
  }
}

// Row-major dense N x N product.
std::vector<double> multiply(const std::vector<double>& a, const std::vector<double>& b, std::size_t n) {
  std::vector<double> c(n * n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const double ark = a[r * n + k];
      if (ark == 0.0) continue;
      for (std::size_t col = 0; col < n; ++col) {
        c[r * n + col] += ark * b[k * n + col];
      }
    }
  }
  return c;
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ == 0) {
    throw InvalidGraph("graph must have at least one node");
  }
  std::set<std::pair<NodeIndex, NodeIndex>> seen;
  for (const Edge& e : edges_) {
    if (e.i >= node_count_ || e.j >= node_count_) {
      throw InvalidGraph("edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                         ") references a node outside [0, " + std::to_string(node_count_) + ")");
    }
    if (e.i == e.j) {
      throw InvalidGraph("self-loop on node " + std::to_string(e.i));
    }
    if (!std::isfinite(e.weight) || e.weight == 0.0) {
      throw InvalidGraph("edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                         ") has a zero or non-finite weight");
    }
    if (!seen.emplace(std::min(e.i, e.j), std::max(e.i, e.j)).second) {
      throw InvalidGraph("duplicate edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ")");
    }
  }

  offsets_.assign(node_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.i + 1];
    ++offsets_[e.j + 1];
  }
  for (std::size_t v = 0; v < node_count_; ++v) {
    offsets_[v + 1] += offsets_[v];
  }
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[cursor[e.i]++] = {e.j, e.weight};
    adjacency_[cursor[e.j]++] = {e.i, e.weight};
  }
  for (std::size_t v = 0; v < node_count_; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }
}

std::span<const Neighbor> WeightedGraph::neighbors(NodeIndex i) const {
  check_node(*this, i);
  return std::span<const Neighbor>(adjacency_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
}

std::optional<double> WeightedGraph::weight(NodeIndex i, NodeIndex j) const {
  if (i >= node_count_ || j >= node_count_) return std::nullopt;
  const auto row = neighbors(i);
  const auto it = std::lower_bound(row.begin(), row.end(), j,
                                   [](const Neighbor& n, NodeIndex key) { return n.node < key; });
  if (it == row.end() || it->node != j) return std::nullopt;
  return it->weight;
}

WeightedGraph WeightedGraph::scaled(double factor) const {
  std::vector<Edge> out(edges_.begin(), edges_.end());
  for (Edge& e : out) e.weight *= factor;
  return WeightedGraph(node_count_, std::move(out));
}

WeightedGraph WeightedGraph::relabeled(std::span<const NodeIndex> permutation) const {
  if (permutation.size() != node_count_) {
    throw InvalidArgument("permutation size does not match node count");
  }
  std::vector<bool> hit(node_count_, false);
  for (NodeIndex p : permutation) {
    if (p >= node_count_ || hit[p]) throw InvalidArgument("not a permutation");
    hit[p] = true;
  }
  std::vector<Edge> out(edges_.begin(), edges_.end());
  for (Edge& e : out) {
    e.i = permutation[e.i];
    e.j = permutation[e.j];
  }
  return WeightedGraph(node_count_, std::move(out));
}

PowerGraph::PowerGraph(const WeightedGraph& base, int power) : base_(&base), power_(power) {
  check_power(power, 2, 4);
}

double PowerGraph::weight(const Edge& e) const noexcept { return ipow(e.weight, power_); }

double PowerGraph::weighted_degree(NodeIndex i) const {
  double sum = 0.0;
  for (const Neighbor& n : base_->neighbors(i)) sum += ipow(n.weight, power_);
  return sum;
}

double PowerGraph::weighted_degree_sum() const {
  double sum = 0.0;
  for (NodeIndex i = 0; i < base_->node_count(); ++i) sum += weighted_degree(i);
  return sum;
}

double ipow(double w, int k) noexcept {
  double r = 1.0;
  for (int p = 0; p < k; ++p) r *= w;
  return r;
}

double weighted_degree(const WeightedGraph& g, int k, NodeIndex i) {
  check_power(k, 1, 4);
  check_node(g, i);
  double sum = 0.0;
  for (const Neighbor& n : g.neighbors(i)) sum += ipow(n.weight, k);
  return sum;
}

double weighted_degree_sum(const WeightedGraph& g, int k) {
  check_power(k, 1, 4);
  double sum = 0.0;
  for (NodeIndex i = 0; i < g.node_count(); ++i) sum += weighted_degree(g, k, i);
  return sum;
}

double triangle_weight_sum(const WeightedGraph& g) {
  // Orient every triangle u < v < w and find w by merging the two sorted rows.
  double sum = 0.0;
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    const auto nu = g.neighbors(u);
    for (const Neighbor& uv : nu) {
      if (uv.node <= u) continue;
      const auto nv = g.neighbors(uv.node);
      auto a = nu.begin();
      auto b = nv.begin();
      while (a != nu.end() && b != nv.end()) {
        if (a->node < b->node) {
          ++a;
        } else if (b->node < a->node) {
          ++b;
        } else {
          if (a->node > uv.node) sum += uv.weight * a->weight * b->weight;
          ++a;
          ++b;
        }
      }
    }
  }
  return sum;
}

double square_weight_sum(const WeightedGraph& g) {
  // For every pair {i, k} with i < k, the 2-paths i-j-k have products p_j.
  // Each pair j < l of such paths closes the 4-cycle i-j-k-l. Summing
  // p_j * p_l = ((sum p)^2 - sum p^2) / 2 over pairs {i, k} visits each
  // 4-cycle twice, once per diagonal.
  const std::size_t n = g.node_count();
  std::vector<double> path_sum(n, 0.0);
  std::vector<double> path_sq(n, 0.0);
  std::vector<char> marked(n, 0);
  std::vector<NodeIndex> touched;
  double total = 0.0;
  for (NodeIndex i = 0; i < n; ++i) {
    touched.clear();
    for (const Neighbor& ij : g.neighbors(i)) {
      for (const Neighbor& jk : g.neighbors(ij.node)) {
        if (jk.node <= i) continue;
        const double p = ij.weight * jk.weight;
        if (!marked[jk.node]) {
          marked[jk.node] = 1;
          touched.push_back(jk.node);
        }
        path_sum[jk.node] += p;
        path_sq[jk.node] += p * p;
      }
    }
    for (NodeIndex k : touched) {
      total += 0.5 * (path_sum[k] * path_sum[k] - path_sq[k]);
      path_sum[k] = 0.0;
      path_sq[k] = 0.0;
      marked[k] = 0;
    }
  }
  return 0.5 * total;
}

double adjacency_trace(const WeightedGraph& g, int k) {
  check_power(k, 2, 4);
  const std::size_t n = g.node_count();
  std::vector<double> a(n * n, 0.0);
  for (const Edge& e : g.edges()) {
    a[e.i * n + e.j] = e.weight;
    a[e.j * n + e.i] = e.weight;
  }
  std::vector<double> power = a;
  for (int p = 1; p < k; ++p) power = multiply(power, a, n);
  double trace = 0.0;
  for (std::size_t v = 0; v < n; ++v) trace += power[v * n + v];
  return trace;
}

}  // namespace graphgeo
