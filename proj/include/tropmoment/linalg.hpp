#pragma once

#include <optional>

#include "tropmoment/rational.hpp"

namespace tropmoment::linalg {

/*
 * Exact dense linear algebra over the rationals.
 *
 * Square solves and determinants clear denominators row by row and then run
 * Bareiss fraction-free elimination over the integers, so every intermediate
 * value is an integer minor of the scaled system. Only the back substitution
 * produces rationals. Rank uses plain rational elimination since it only has
 * to decide zero/non-zero.
 */

// Solves A x = b. Returns nullopt when A is singular.
std::optional<RationalVector> solve(const RationalMatrix& a,
                                    const RationalVector& b);

Rational determinant(const RationalMatrix& a);

// Rank of the row set (rows may have any common length).
std::size_t rank(const RationalMatrix& rows);

RationalVector multiply(const RationalMatrix& a, const RationalVector& x);

}  // namespace tropmoment::linalg
