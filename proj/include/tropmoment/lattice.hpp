#pragma once

#include <cstdint>
#include <vector>

#include "tropmoment/rational.hpp"

namespace tropmoment {

// Coordinates of an element of Y with respect to the fixed basis.
using LatticeVector = std::vector<std::int64_t>;

// Point of the ambient real space Y (x) R, written in the same basis. All
// points handled by the library have rational coordinates.
using AmbientPoint = RationalVector;

AmbientPoint to_ambient(const LatticeVector& v);

/// Rank-g lattice with a positive definite rational Gram matrix.
///
/// The basis of Y is fixed once and for all; the ambient space is identified
/// with Q^g (tensor R) through it, so [x, y] = x^T G y for coordinate vectors.
/// Construction runs a symmetric elimination G = U^T diag(d) U with U unit
/// upper triangular. The pivots d are ratios of consecutive leading principal
/// minors, so positivity of all d is exactly positive definiteness. The same
/// factorization drives lattice enumeration.
class GramLattice {
 public:
  // Throws NotSymmetric, NotPositiveDefinite (message names the 1-based index
  // of the first non-positive leading minor) or DimensionMismatch.
  static GramLattice validate(RationalMatrix gram);

  std::size_t rank() const noexcept { return gram_.size(); }
  const RationalMatrix& gram() const noexcept { return gram_; }

  Rational inner(const AmbientPoint& x, const AmbientPoint& y) const;
  Rational norm2(const AmbientPoint& x) const { return inner(x, x); }

  // G x, i.e. the coordinates of the linear form [x, .].
  RationalVector apply(const AmbientPoint& x) const;

  // Factorization used by the enumerator.
  const RationalVector& pivots() const noexcept { return pivots_; }
  const RationalMatrix& upper() const noexcept { return upper_; }

  GramLattice scaled(const Rational& c) const;

 private:
  GramLattice() = default;

  RationalMatrix gram_;
  RationalVector pivots_;
  RationalMatrix upper_;
};

// Orthogonal direct sum (block diagonal Gram matrix).
GramLattice direct_sum(const GramLattice& a, const GramLattice& b);

// All u in Y with ||u - center||^2 <= radius2, in lexicographic order.
// Fincke-Pohst enumeration carried out exactly over the rationals.
std::vector<LatticeVector> enumerate_ball(const GramLattice& lat,
                                          const AmbientPoint& center,
                                          const Rational& radius2);

// Every lattice vector at minimal distance from the point, sorted
// lexicographically.
std::vector<LatticeVector> closest_vectors(const GramLattice& lat,
                                           const AmbientPoint& point);

// Closest lattice vector; ties go to the lexicographically smallest
// coordinate tuple.
LatticeVector closest_vector(const GramLattice& lat, const AmbientPoint& point);

// Squared distance from the point to the lattice.
Rational distance2(const GramLattice& lat, const AmbientPoint& point);

// Nonzero lattice vectors of minimal norm.
std::vector<LatticeVector> shortest_vectors(const GramLattice& lat);

// Voronoi-relevant vectors: v != 0 such that +-v are the only minimal vectors
// of the coset v + 2Y. Sorted lexicographically; closed under negation.
std::vector<LatticeVector> relevant_vectors(const GramLattice& lat);

}  // namespace tropmoment
