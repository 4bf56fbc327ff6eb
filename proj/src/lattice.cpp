#include "tropmoment/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

#include "tropmoment/error.hpp"

namespace tropmoment {

AmbientPoint to_ambient(const LatticeVector& v) {
  AmbientPoint out;
  out.reserve(v.size());
  for (auto c : v) out.emplace_back(static_cast<long>(c));
  return out;
}

GramLattice GramLattice::validate(RationalMatrix gram) {
  const std::size_t g = gram.size();
  if (g == 0) {
    throw Error(ErrorCode::DimensionMismatch, "lattice",
                "Gram matrix must have positive rank");
  }
  for (const auto& row : gram) {
    if (row.size() != g) {
      throw Error(ErrorCode::DimensionMismatch, "lattice",
                  "Gram matrix is not square");
    }
  }
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i + 1; j < g; ++j) {
      if (gram[i][j] != gram[j][i]) {
        throw Error(ErrorCode::NotSymmetric, "lattice",
                    "Gram matrix is not symmetric at (" + std::to_string(i) +
                        "," + std::to_string(j) + ")");
      }
    }
  }

  GramLattice lat;
  RationalMatrix work = gram;
  lat.pivots_.assign(g, Rational(0));
  lat.upper_.assign(g, RationalVector(g, Rational(0)));
  for (std::size_t k = 0; k < g; ++k) {
    const Rational d = work[k][k];
    if (d <= 0) {
      throw Error(ErrorCode::NotPositiveDefinite, "lattice",
                  "leading principal minor " + std::to_string(k + 1) +
                      " is not positive");
    }
    lat.pivots_[k] = d;
    lat.upper_[k][k] = 1;
    for (std::size_t j = k + 1; j < g; ++j) lat.upper_[k][j] = work[k][j] / d;
    for (std::size_t i = k + 1; i < g; ++i) {
      for (std::size_t j = k + 1; j < g; ++j) {
        work[i][j] -= work[i][k] * lat.upper_[k][j];
      }
    }
  }
  lat.gram_ = std::move(gram);
  return lat;
}

Rational GramLattice::inner(const AmbientPoint& x, const AmbientPoint& y) const {
  if (x.size() != rank() || y.size() != rank()) {
    throw Error(ErrorCode::DimensionMismatch, "lattice",
                "point dimension differs from lattice rank");
  }
  Rational acc = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    acc += x[i] * dot(gram_[i], y);
  }
  return acc;
}

RationalVector GramLattice::apply(const AmbientPoint& x) const {
  if (x.size() != rank()) {
    throw Error(ErrorCode::DimensionMismatch, "lattice",
                "point dimension differs from lattice rank");
  }
  RationalVector out;
  out.reserve(rank());
  for (const auto& row : gram_) out.push_back(dot(row, x));
  return out;
}

GramLattice GramLattice::scaled(const Rational& c) const {
  RationalMatrix g = gram_;
  for (auto& row : g) {
    for (auto& v : row) v *= c;
  }
  return validate(std::move(g));
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  const std::size_t n = a.rank() + b.rank();
  RationalMatrix g(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) g[i][j] = a.gram()[i][j];
  }
  for (std::size_t i = 0; i < b.rank(); ++i) {
    for (std::size_t j = 0; j < b.rank(); ++j) {
      g[a.rank() + i][a.rank() + j] = b.gram()[i][j];
    }
  }
  return GramLattice::validate(std::move(g));
}

namespace {

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) {
    throw Error(ErrorCode::OutOfRange, "lattice",
                "lattice coordinate exceeds 64-bit range");
  }
  return z.get_si();
}

// Integer interval {x : (x - center)^2 <= s}. A double estimate of sqrt(s)
// seeds the endpoints; exact comparisons settle them.
std::optional<std::pair<std::int64_t, std::int64_t>> integer_window(
    const Rational& center, const Rational& s) {
  if (s < 0) return std::nullopt;
  const auto fits = [&](std::int64_t x) {
    const Rational d = Rational(static_cast<long>(x)) - center;
    return d * d <= s;
  };
  const std::int64_t nearest = to_int64(floor(center + Rational(1, 2)));
  if (!fits(nearest)) return std::nullopt;

  const double c = center.get_d();
  const double r = std::sqrt(std::max(0.0, s.get_d()));
  auto lo = std::min(nearest, static_cast<std::int64_t>(std::floor(c - r)));
  auto hi = std::max(nearest, static_cast<std::int64_t>(std::ceil(c + r)));
  while (!fits(lo)) ++lo;
  while (fits(lo - 1)) --lo;
  while (!fits(hi)) --hi;
  while (fits(hi + 1)) ++hi;
  return std::make_pair(lo, hi);
}

class Enumerator {
 public:
  Enumerator(const GramLattice& lat, const AmbientPoint& center)
      : lat_(lat), center_(center), x_(lat.rank()), y_(lat.rank()) {}

  std::vector<LatticeVector> run(const Rational& radius2) {
    out_.clear();
    if (radius2 >= 0) descend(lat_.rank(), radius2);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  // Levels are visited from the last coordinate down to the first; `level`
  // counts how many coordinates are still free.
  void descend(std::size_t level, const Rational& remaining) {
    if (level == 0) {
      out_.push_back(x_);
      return;
    }
    const std::size_t i = level - 1;
    Rational c = center_[i];
    for (std::size_t j = i + 1; j < lat_.rank(); ++j) {
      c -= lat_.upper()[i][j] * y_[j];
    }
    const Rational& d = lat_.pivots()[i];
    const auto window = integer_window(c, remaining / d);
    if (!window) return;
    for (std::int64_t x = window->first; x <= window->second; ++x) {
      x_[i] = x;
      y_[i] = Rational(static_cast<long>(x)) - center_[i];
      const Rational offset = Rational(static_cast<long>(x)) - c;
      descend(i, remaining - d * offset * offset);
    }
  }

  const GramLattice& lat_;
  const AmbientPoint& center_;
  LatticeVector x_;
  RationalVector y_;
  std::vector<LatticeVector> out_;
};

// Nearest-plane rounding along the factorization; gives the initial radius.
LatticeVector babai(const GramLattice& lat, const AmbientPoint& point) {
  const std::size_t g = lat.rank();
  LatticeVector x(g);
  RationalVector y(g);
  for (std::size_t i = g; i-- > 0;) {
    Rational c = point[i];
    for (std::size_t j = i + 1; j < g; ++j) c -= lat.upper()[i][j] * y[j];
    x[i] = to_int64(floor(c + Rational(1, 2)));
    y[i] = Rational(static_cast<long>(x[i])) - point[i];
  }
  return x;
}

AmbientPoint difference(const AmbientPoint& p, const LatticeVector& v) {
  AmbientPoint d = p;
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= static_cast<long>(v[i]);
  return d;
}

}  // namespace

std::vector<LatticeVector> enumerate_ball(const GramLattice& lat,
                                          const AmbientPoint& center,
                                          const Rational& radius2) {
  if (center.size() != lat.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "lattice",
                "point dimension differs from lattice rank");
  }
  return Enumerator(lat, center).run(radius2);
}

std::vector<LatticeVector> closest_vectors(const GramLattice& lat,
                                           const AmbientPoint& point) {
  if (point.size() != lat.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "lattice",
                "point dimension differs from lattice rank");
  }
  const LatticeVector start = babai(lat, point);
  const Rational radius2 = lat.norm2(difference(point, start));
  auto candidates = enumerate_ball(lat, point, radius2);

  Rational best = radius2;
  std::vector<Rational> norms;
  norms.reserve(candidates.size());
  for (const auto& u : candidates) {
    norms.push_back(lat.norm2(difference(point, u)));
    best = std::min(best, norms.back());
  }
  std::vector<LatticeVector> out;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (norms[k] == best) out.push_back(std::move(candidates[k]));
  }
  return out;
}

LatticeVector closest_vector(const GramLattice& lat, const AmbientPoint& point) {
  // closest_vectors returns a lexicographically sorted list.
  return closest_vectors(lat, point).front();
}

Rational distance2(const GramLattice& lat, const AmbientPoint& point) {
  return lat.norm2(difference(point, closest_vector(lat, point)));
}

std::vector<LatticeVector> shortest_vectors(const GramLattice& lat) {
  const std::size_t g = lat.rank();
  Rational radius2 = lat.gram()[0][0];
  for (std::size_t i = 1; i < g; ++i) radius2 = std::min(radius2, lat.gram()[i][i]);
  const AmbientPoint origin(g, Rational(0));
  std::vector<LatticeVector> out;
  Rational best = radius2;
  for (auto& u : enumerate_ball(lat, origin, radius2)) {
    if (std::all_of(u.begin(), u.end(), [](auto c) { return c == 0; })) continue;
    const Rational n = lat.norm2(to_ambient(u));
    if (n < best) {
      best = n;
      out.clear();
    }
    if (n == best) out.push_back(std::move(u));
  }
  return out;
}

std::vector<LatticeVector> relevant_vectors(const GramLattice& lat) {
  const std::size_t g = lat.rank();
  std::vector<LatticeVector> out;
  // Minimal vectors of c + 2Y are c + 2w for w closest to -c/2.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g); ++mask) {
    AmbientPoint target(g);
    for (std::size_t i = 0; i < g; ++i) {
      target[i] = (mask >> i & 1) ? Rational(-1, 2) : Rational(0);
    }
    const auto minimizers = closest_vectors(lat, target);
    if (minimizers.size() != 2) continue;
    for (const auto& w : minimizers) {
      LatticeVector v(g);
      for (std::size_t i = 0; i < g; ++i) {
        v[i] = static_cast<std::int64_t>(mask >> i & 1) + 2 * w[i];
      }
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tropmoment
