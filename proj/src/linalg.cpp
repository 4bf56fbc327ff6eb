#include "tropmoment/linalg.hpp"

#include <utility>

#include "tropmoment/error.hpp"

namespace tropmoment::linalg {
namespace {

using IntegerMatrix = std::vector<std::vector<Integer>>;

// Multiplies a rational row by the lcm of its denominators. Returns the
// integer row together with the scale factor.
std::pair<std::vector<Integer>, Integer> integerize(const RationalVector& row) {
  Integer scale = 1;
  for (const auto& v : row) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
  }
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& v : row) out.push_back(v.get_num() * (scale / v.get_den()));
  return {std::move(out), std::move(scale)};
}

// In-place Bareiss elimination on the leading n columns of m. Returns the
// parity of row swaps, or nullopt when a zero pivot column is found.
std::optional<int> bareiss(IntegerMatrix& m, std::size_t n) {
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m[i].size(); ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign;
}

void require_square(const RationalMatrix& a) {
  for (const auto& row : a) {
    if (row.size() != a.size()) {
      throw Error(ErrorCode::DimensionMismatch, "linalg", "matrix not square");
    }
  }
}

}  // namespace

std::optional<RationalVector> solve(const RationalMatrix& a,
                                    const RationalVector& b) {
  require_square(a);
  const std::size_t n = a.size();
  if (b.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "linalg",
                "right-hand side length differs from matrix size");
  }
  if (n == 0) return RationalVector{};

  IntegerMatrix m;
  m.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector augmented = a[i];
    augmented.push_back(b[i]);
    m.push_back(integerize(augmented).first);
  }
  if (!bareiss(m, n)) return std::nullopt;

  RationalVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(m[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j];
    x[i] = acc / Rational(m[i][i]);
  }
  return x;
}

Rational determinant(const RationalMatrix& a) {
  require_square(a);
  const std::size_t n = a.size();
  if (n == 0) return 1;
  IntegerMatrix m;
  m.reserve(n);
  Integer scale = 1;
  for (const auto& row : a) {
    auto [ints, s] = integerize(row);
    m.push_back(std::move(ints));
    scale *= s;
  }
  const auto sign = bareiss(m, n);
  if (!sign) return 0;
  return make_rational(*sign * m[n - 1][n - 1], scale);
}

std::size_t rank(const RationalMatrix& rows) {
  RationalMatrix m = rows;
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

RationalVector multiply(const RationalMatrix& a, const RationalVector& x) {
  RationalVector out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(dot(row, x));
  return out;
}

}  // namespace tropmoment::linalg
