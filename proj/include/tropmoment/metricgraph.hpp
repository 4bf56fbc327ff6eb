#pragma once

#include <optional>
#include <vector>

#include "tropmoment/lattice.hpp"

namespace tropmoment {

struct Edge {
  std::size_t tail = 0;
  std::size_t head = 0;
  Rational length;
};

/// Compact connected metric graph. Loops and multi-edges are allowed.
class MetricGraph {
 public:
  // Throws InvalidGraph for out-of-range endpoints or non-positive lengths and
  // DisconnectedGraph when the underlying graph is not connected.
  static MetricGraph create(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t betti_number() const noexcept {
    return edges_.size() + 1 - vertex_count_;
  }

 private:
  MetricGraph() = default;

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// A point at arclength `offset` from the tail of edge `edge`.
struct GraphPoint {
  std::size_t edge = 0;
  Rational offset;
};

// Some point representing the vertex (offset 0 or length on an incident
// edge). Returns nullopt for the single-vertex graph without edges.
std::optional<GraphPoint> vertex_point(const MetricGraph& graph, std::size_t v);

Rational total_length(const MetricGraph& graph);

// Exact effective resistance with conductance 1/length on every edge.
Rational effective_resistance(const MetricGraph& graph, const GraphPoint& p,
                              const GraphPoint& q);

// The tau invariant, the integral of (f')^2 with f = r(., q) / 2.
Rational tau(const MetricGraph& graph, const GraphPoint& q);
Rational tau(const MetricGraph& graph);  // base point at vertex 0

// Per-edge terms of tau, in edge order. r(., q) is fitted on each edge by the
// quadratic through the ends and midpoint of each segment (the edge holding q is split at q) and checked at the quarter point; a mismatch throws
// DomainError.
std::vector<Rational> tau_terms(const MetricGraph& graph, const GraphPoint& q);

// Integer cycle vectors, one per edge outside a DFS spanning tree.
struct CycleBasis {
  std::vector<std::vector<int>> cycles;  // coefficient per edge
  std::vector<std::size_t> tree_edges;
};

enum class EdgeOrder { Ascending, Descending };

// DFS spanning tree from `root`; neighbours are explored by edge index in the
// given order.
CycleBasis cycle_basis(const MetricGraph& graph, std::size_t root = 0,
                       EdgeOrder order = EdgeOrder::Ascending);

// Gram matrix sum_e length(e) c_i(e) c_j(e) of the tropical Jacobian. Throws
// RankZero for trees.
GramLattice jacobian_gram(const MetricGraph& graph, const CycleBasis& basis);
GramLattice jacobian_gram(const MetricGraph& graph);

// Second moment of the tropical Jacobian; zero for trees.
Rational graph_second_moment(const MetricGraph& graph);
Rational graph_second_moment(const MetricGraph& graph, const CycleBasis& basis);

// I(Jac) - (total_length / 8 - tau / 2).
Rational remarkable_residual(const MetricGraph& graph);

struct GraphReport {
  Rational total_length;
  Rational tau;
  std::vector<Rational> tau_terms;
  std::size_t betti = 0;
  RationalMatrix gram;  // empty for trees
  Rational moment;
  Rational residual;
};

GraphReport graph_report(const MetricGraph& graph);

}  // namespace tropmoment
