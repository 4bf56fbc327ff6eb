#pragma once

#include <boost/dynamic_bitset.hpp>
#include <vector>

#include "tropmoment/lattice.hpp"

namespace tropmoment {

// [normal, x] <= offset, with offset = [normal, normal] / 2. `form` holds the
// coordinates of the linear functional, i.e. G * normal.
struct HalfSpace {
  LatticeVector normal;
  RationalVector form;
  Rational offset;

  bool contains(const AmbientPoint& x) const { return dot(form, x) <= offset; }
  bool tight(const AmbientPoint& x) const { return dot(form, x) == offset; }
};

struct Polytope {
  std::vector<HalfSpace> halfspaces;
  std::vector<AmbientPoint> vertices;  // lexicographically sorted
  // incidence[k] has bit f set iff vertex k lies on halfspace f.
  std::vector<boost::dynamic_bitset<>> incidence;

  std::size_t dimension() const {
    return vertices.empty() ? 0 : vertices.front().size();
  }
};

struct Simplex {
  std::vector<AmbientPoint> vertices;  // g + 1 affinely independent points
};

// Vor(0) of the lattice, in lattice coordinates.
Polytope voronoi_cell(const GramLattice& lat);

// Star triangulation: the origin is coned over every facet, and each face is
// recursively triangulated as a cone from its lexicographically first vertex
// over the sub-faces that avoid it.
std::vector<Simplex> triangulate(const Polytope& poly);

// Coordinate Lebesgue volume of a simplex (always >= 0).
Rational simplex_volume(const Simplex& s);

// Integral of ||x||^2 over the simplex in coordinate measure.
Rational simplex_moment(const Simplex& s, const GramLattice& lat);

// Coordinate Lebesgue volume; throws DegeneratePolytope unless the polytope
// is full-dimensional.
Rational volume(const Polytope& poly);

// Normalized second moment of Vor(0): the mean of ||x||^2 over the cell.
Rational second_moment(const GramLattice& lat);

struct MomentReport {
  Rational moment;
  Rational volume;
  std::size_t facets = 0;
  std::size_t vertices = 0;
  std::size_t simplices = 0;
};

MomentReport moment_report(const GramLattice& lat);

}  // namespace tropmoment
