#include "tropmoment/metricgraph.hpp"

#include <algorithm>
#include <functional>

#include "tropmoment/error.hpp"
#include "tropmoment/linalg.hpp"
#include "tropmoment/polytope.hpp"

namespace tropmoment {

MetricGraph MetricGraph::create(std::size_t vertex_count, std::vector<Edge> edges) {
  if (vertex_count == 0) {
    throw Error(ErrorCode::InvalidGraph, "metricgraph",
                "graph needs at least one vertex");
  }
  std::vector<std::size_t> parent(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) parent[v] = v;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    if (e.tail >= vertex_count || e.head >= vertex_count) {
      throw Error(ErrorCode::InvalidGraph, "metricgraph",
                  "edge " + std::to_string(k) + " has an endpoint out of range",
                  "/edges/" + std::to_string(k));
    }
    if (e.length <= 0) {
      throw Error(ErrorCode::InvalidGraph, "metricgraph",
                  "edge " + std::to_string(k) + " has non-positive length",
                  "/edges/" + std::to_string(k) + "/length");
    }
    parent[find(e.tail)] = find(e.head);
  }
  for (std::size_t v = 1; v < vertex_count; ++v) {
    if (find(v) != find(0)) {
      throw Error(ErrorCode::DisconnectedGraph, "metricgraph",
                  "vertex " + std::to_string(v) + " is not connected to vertex 0");
    }
  }
  MetricGraph g;
  g.vertex_count_ = vertex_count;
  g.edges_ = std::move(edges);
  return g;
}

std::optional<GraphPoint> vertex_point(const MetricGraph& graph, std::size_t v) {
  if (v >= graph.vertex_count()) {
    throw Error(ErrorCode::OutOfRange, "metricgraph", "vertex id out of range");
  }
  for (std::size_t k = 0; k < graph.edges().size(); ++k) {
    const Edge& e = graph.edges()[k];
    if (e.tail == v) return GraphPoint{k, Rational(0)};
    if (e.head == v) return GraphPoint{k, e.length};
  }
  return std::nullopt;
}

Rational total_length(const MetricGraph& graph) {
  Rational total = 0;
  for (const auto& e : graph.edges()) total += e.length;
  return total;
}

namespace {

void check_point(const MetricGraph& graph, const GraphPoint& p) {
  if (p.edge >= graph.edges().size()) {
    throw Error(ErrorCode::OutOfRange, "metricgraph", "point on unknown edge");
  }
  if (p.offset < 0 || p.offset > graph.edges()[p.edge].length) {
    throw Error(ErrorCode::OutOfRange, "metricgraph",
                "point offset outside [0, length]");
  }
}

struct Resistor {
  std::size_t a;
  std::size_t b;
  Rational resistance;
};

// Resistor network of the graph with the given points inserted as nodes.
// Returns the network and the node id of each point.
std::pair<std::vector<Resistor>, std::vector<std::size_t>> subdivide(
    const MetricGraph& graph, std::size_t& node_count,
    const std::vector<GraphPoint>& points) {
  node_count = graph.vertex_count();
  std::vector<std::size_t> ids(points.size());
  std::vector<Resistor> network;
  for (std::size_t k = 0; k < graph.edges().size(); ++k) {
    const Edge& e = graph.edges()[k];
    // Interior cut positions on this edge, deduplicated and sorted.
    std::vector<Rational> cuts;
    for (const auto& p : points) {
      if (p.edge == k && p.offset > 0 && p.offset < e.length) {
        cuts.push_back(p.offset);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<std::size_t> nodes{e.tail};
    for (std::size_t c = 0; c < cuts.size(); ++c) nodes.push_back(node_count++);
    nodes.push_back(e.head);
    Rational previous = 0;
    for (std::size_t c = 0; c <= cuts.size(); ++c) {
      const Rational next = c < cuts.size() ? cuts[c] : e.length;
      network.push_back({nodes[c], nodes[c + 1], next - previous});
      previous = next;
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      const GraphPoint& p = points[i];
      if (p.edge != k) continue;
      if (p.offset == 0) {
        ids[i] = e.tail;
      } else if (p.offset == e.length) {
        ids[i] = e.head;
      } else {
        const auto pos = std::lower_bound(cuts.begin(), cuts.end(), p.offset);
        ids[i] = nodes[1 + static_cast<std::size_t>(pos - cuts.begin())];
      }
    }
  }
  return {std::move(network), std::move(ids)};
}

}  // namespace

Rational effective_resistance(const MetricGraph& graph, const GraphPoint& p,
                              const GraphPoint& q) {
  check_point(graph, p);
  check_point(graph, q);
  std::size_t n = 0;
  const auto [network, ids] = subdivide(graph, n, {p, q});
  const std::size_t source = ids[0];
  const std::size_t ground = ids[1];
  if (source == ground) return 0;

  // Reduced Laplacian with the ground node removed.
  const auto index = [&](std::size_t v) { return v < ground ? v : v - 1; };
  RationalMatrix lap(n - 1, RationalVector(n - 1, Rational(0)));
  for (const auto& r : network) {
    if (r.a == r.b) continue;
    const Rational c = 1 / r.resistance;
    if (r.a != ground) lap[index(r.a)][index(r.a)] += c;
    if (r.b != ground) lap[index(r.b)][index(r.b)] += c;
    if (r.a != ground && r.b != ground) {
      lap[index(r.a)][index(r.b)] -= c;
      lap[index(r.b)][index(r.a)] -= c;
    }
  }
  RationalVector current(n - 1, Rational(0));
  current[index(source)] = 1;
  const auto potential = linalg::solve(lap, current);
  if (!potential) {
    throw Error(ErrorCode::DisconnectedGraph, "metricgraph",
                "singular Laplacian; graph is disconnected");
  }
  return (*potential)[index(source)];
}

std::vector<Rational> tau_terms(const MetricGraph& graph, const GraphPoint& q) {
  check_point(graph, q);
  std::vector<std::optional<Rational>> at_vertex(graph.vertex_count());
  const auto resistance = [&](std::size_t k, const Rational& x) -> Rational {
    const Edge& e = graph.edges()[k];
    const bool end = x == 0 || x == e.length;
    if (!end) return effective_resistance(graph, {k, x}, q);
    const std::size_t v = x == 0 ? e.tail : e.head;
    if (!at_vertex[v]) {
      at_vertex[v] = effective_resistance(graph, *vertex_point(graph, v), q);
    }
    return *at_vertex[v];
  };

  std::vector<Rational> terms;
  for (std::size_t k = 0; k < graph.edges().size(); ++k) {
    const Rational& len = graph.edges()[k].length;
    // r(., q) is quadratic on each edge, except for a kink at q itself.
    std::vector<Rational> cuts{0};
    if (q.edge == k && q.offset > 0 && q.offset < len) cuts.push_back(q.offset);
    cuts.push_back(len);

    Rational term = 0;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
      const Rational x0 = cuts[s];
      const Rational seg = cuts[s + 1] - x0;
      const Rational h = seg / 2;
      const Rational r0 = resistance(k, x0);
      const Rational r1 = resistance(k, x0 + h);
      const Rational r2 = resistance(k, cuts[s + 1]);
      // r(x0 + t) = a t^2 + b t + r0 through t = 0, h, 2h.
      const Rational a = (r2 - 2 * r1 + r0) / (2 * h * h);
      const Rational b = (4 * r1 - r2 - 3 * r0) / (2 * h);

      const Rational t = seg / 4;
      if (a * t * t + b * t + r0 != resistance(k, x0 + t)) {
        throw Error(ErrorCode::DomainError, "metricgraph",
                    "resistance profile on edge " + std::to_string(k) +
                        " is not quadratic");
      }
      // f' = (2 a t + b) / 2 integrated in closed form over [0, seg].
      term += a * a * seg * seg * seg / 3 + a * b * seg * seg / 2 + b * b * seg / 4;
    }
    terms.push_back(term);
  }
  return terms;
}

Rational tau(const MetricGraph& graph, const GraphPoint& q) {
  Rational total = 0;
  for (const auto& t : tau_terms(graph, q)) total += t;
  return total;
}

Rational tau(const MetricGraph& graph) {
  const auto q = vertex_point(graph, 0);
  if (!q) return 0;
  return tau(graph, *q);
}

CycleBasis cycle_basis(const MetricGraph& graph, std::size_t root, EdgeOrder order) {
  const std::size_t n = graph.vertex_count();
  const auto& edges = graph.edges();
  if (root >= n) {
    throw Error(ErrorCode::OutOfRange, "metricgraph", "root vertex out of range");
  }
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    incident[edges[k].tail].push_back(k);
    if (edges[k].head != edges[k].tail) incident[edges[k].head].push_back(k);
  }
  if (order == EdgeOrder::Descending) {
    for (auto& list : incident) std::reverse(list.begin(), list.end());
  }

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_edge(n, none);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<bool> in_tree(edges.size(), false);
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    seen[v] = true;
    for (auto k : incident[v]) {
      const std::size_t w = edges[k].tail == v ? edges[k].head : edges[k].tail;
      if (seen[w]) continue;
      in_tree[k] = true;
      parent_edge[w] = k;
      depth[w] = depth[v] + 1;
      dfs(w);
    }
  };
  dfs(root);

  const auto parent = [&](std::size_t v) {
    const Edge& e = edges[parent_edge[v]];
    return e.tail == v ? e.head : e.tail;
  };

  CycleBasis basis;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (in_tree[k]) {
      basis.tree_edges.push_back(k);
      continue;
    }
    // Close e: tail -> head with the tree path head -> tail.
    std::vector<int> c(edges.size(), 0);
    c[k] += 1;
    std::size_t from = edges[k].head;
    std::size_t to = edges[k].tail;
    while (from != to) {
      if (depth[from] >= depth[to]) {
        const std::size_t t = parent_edge[from];
        c[t] += edges[t].tail == from ? 1 : -1;  // walking from -> parent
        from = parent(from);
      } else {
        const std::size_t t = parent_edge[to];
        c[t] += edges[t].head == to ? 1 : -1;  // walking parent -> to
        to = parent(to);
      }
    }
    basis.cycles.push_back(std::move(c));
  }
  return basis;
}

GramLattice jacobian_gram(const MetricGraph& graph, const CycleBasis& basis) {
  const std::size_t b = basis.cycles.size();
  if (b == 0) {
    throw Error(ErrorCode::RankZero, "metricgraph",
                "graph is a tree; its Jacobian has rank zero");
  }
  RationalMatrix gram(b, RationalVector(b, Rational(0)));
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      for (std::size_t k = 0; k < graph.edges().size(); ++k) {
        const int w = basis.cycles[i][k] * basis.cycles[j][k];
        if (w != 0) gram[i][j] += graph.edges()[k].length * w;
      }
    }
  }
  return GramLattice::validate(std::move(gram));
}

GramLattice jacobian_gram(const MetricGraph& graph) {
  return jacobian_gram(graph, cycle_basis(graph));
}

Rational graph_second_moment(const MetricGraph& graph, const CycleBasis& basis) {
  if (basis.cycles.empty()) return 0;
  return second_moment(jacobian_gram(graph, basis));
}

Rational graph_second_moment(const MetricGraph& graph) {
  return graph_second_moment(graph, cycle_basis(graph));
}

Rational remarkable_residual(const MetricGraph& graph) {
  return graph_second_moment(graph) - (total_length(graph) / 8 - tau(graph) / 2);
}

GraphReport graph_report(const MetricGraph& graph) {
  GraphReport report;
  report.total_length = total_length(graph);
  if (const auto q = vertex_point(graph, 0)) report.tau_terms = tau_terms(graph, *q);
  for (const auto& t : report.tau_terms) report.tau += t;
  report.betti = graph.betti_number();
  const CycleBasis basis = cycle_basis(graph);
  if (!basis.cycles.empty()) {
    const GramLattice jac = jacobian_gram(graph, basis);
    report.gram = jac.gram();
    report.moment = second_moment(jac);
  }
  report.residual = report.moment - (report.total_length / 8 - report.tau / 2);
  return report;
}

}  // namespace tropmoment
