#pragma once

#include <random>

#include "tropmoment/lattice.hpp"
#include "tropmoment/metricgraph.hpp"

namespace tropmoment::random {

using Engine = std::mt19937_64;

// p/q with 1 <= p <= max_num, 1 <= q <= max_den.
Rational positive_rational(Engine& rng, long max_num = 9, long max_den = 4);

// Rational in [-bound, bound] with denominator at most max_den.
Rational signed_rational(Engine& rng, long bound = 3, long max_den = 12);

AmbientPoint point(Engine& rng, std::size_t g, long bound = 3, long max_den = 12);
LatticeVector lattice_vector(Engine& rng, std::size_t g, long bound = 2);

// Connected multigraph with 1..max_vertices vertices and 1..max_edges edges
// (at least vertices - 1); loops and parallel edges occur. Edge order and
// orientations are shuffled.
MetricGraph connected_graph(Engine& rng, std::size_t max_vertices = 4,
                            std::size_t max_edges = 6);

// G = A^T D A with D a positive rational diagonal and A a random integer
// matrix of determinant +-1, so the basis is typically far from reduced.
GramLattice lattice(Engine& rng, std::size_t rank);

}  // namespace tropmoment::random
