#include "tropmoment/random_instances.hpp"

#include <algorithm>
#include <numeric>

namespace tropmoment::random {
namespace {

long uniform(Engine& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace

Rational positive_rational(Engine& rng, long max_num, long max_den) {
  return make_rational(uniform(rng, 1, max_num), uniform(rng, 1, max_den));
}

Rational signed_rational(Engine& rng, long bound, long max_den) {
  const long den = uniform(rng, 1, max_den);
  return make_rational(uniform(rng, -bound * den, bound * den), den);
}

AmbientPoint point(Engine& rng, std::size_t g, long bound, long max_den) {
  AmbientPoint p;
  for (std::size_t i = 0; i < g; ++i) p.push_back(signed_rational(rng, bound, max_den));
  return p;
}

LatticeVector lattice_vector(Engine& rng, std::size_t g, long bound) {
  LatticeVector v;
  for (std::size_t i = 0; i < g; ++i) v.push_back(uniform(rng, -bound, bound));
  return v;
}

MetricGraph connected_graph(Engine& rng, std::size_t max_vertices, std::size_t max_edges) {
  const auto n = static_cast<std::size_t>(
      uniform(rng, 1, static_cast<long>(std::min(max_vertices, max_edges + 1))));
  const auto m = static_cast<std::size_t>(
      uniform(rng, static_cast<long>(std::max<std::size_t>(n - 1, 1)),
              static_cast<long>(max_edges)));

  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    const auto parent = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(v) - 1));
    edges.push_back({parent, v, positive_rational(rng)});
  }
  while (edges.size() < m) {
    const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    const auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    edges.push_back({a, b, positive_rational(rng)});
  }
  for (auto& e : edges) {
    if (uniform(rng, 0, 1) == 1) std::swap(e.tail, e.head);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return MetricGraph::create(n, std::move(edges));
}

GramLattice lattice(Engine& rng, std::size_t rank) {
  std::vector<std::vector<long>> a(rank, std::vector<long>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) a[i][i] = 1;
  if (rank > 1) {
    for (std::size_t step = 0; step < 2 * rank; ++step) {
      const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(rank) - 1));
      auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(rank) - 2));
      if (j >= i) ++j;
      const long c = uniform(rng, 0, 1) == 1 ? 1 : -1;
      for (std::size_t k = 0; k < rank; ++k) a[i][k] += c * a[j][k];
    }
  }
  RationalVector d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(positive_rational(rng, 6, 3));

  RationalMatrix g(rank, RationalVector(rank, Rational(0)));
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      for (std::size_t k = 0; k < rank; ++k) {
        g[i][j] += d[k] * a[k][i] * a[k][j];
      }
    }
  }
  return GramLattice::validate(std::move(g));
}

}  // namespace tropmoment::random
