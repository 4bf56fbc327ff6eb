#include "tropmoment/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tropmoment/error.hpp"
#include "tropmoment/linalg.hpp"

namespace tropmoment {
namespace {

using Bits = boost::dynamic_bitset<>;

struct Vertex {
  AmbientPoint point;
  Bits tight;
};

std::vector<HalfSpace> voronoi_halfspaces(const GramLattice& lat) {
  std::vector<HalfSpace> out;
  for (auto& u : relevant_vectors(lat)) {
    const AmbientPoint a = to_ambient(u);
    HalfSpace h;
    h.form = lat.apply(a);
    h.offset = dot(h.form, a) / 2;
    h.normal = std::move(u);
    out.push_back(std::move(h));
  }
  return out;
}

// Indices of g halfspaces with linearly independent normals, chosen greedily.
std::vector<std::size_t> independent_subset(const std::vector<HalfSpace>& hs,
                                            std::size_t g) {
  std::vector<std::size_t> chosen;
  RationalMatrix rows;
  for (std::size_t k = 0; k < hs.size() && chosen.size() < g; ++k) {
    rows.push_back(hs[k].form);
    if (linalg::rank(rows) == rows.size()) {
      chosen.push_back(k);
    } else {
      rows.pop_back();
    }
  }
  return chosen;
}

std::size_t find_opposite(const std::vector<HalfSpace>& hs, std::size_t k) {
  LatticeVector neg = hs[k].normal;
  for (auto& c : neg) c = -c;
  for (std::size_t j = 0; j < hs.size(); ++j) {
    if (hs[j].normal == neg) return j;
  }
  throw Error(ErrorCode::DomainError, "polytope",
              "relevant vectors are not closed under negation");
}

// Double description: start from the parallelotope cut out by g independent
// pairs of opposite facets, then intersect with the remaining halfspaces one
// at a time. Adjacency of vertices uses the combinatorial test on incidence
// sets, so no rank computation is needed inside the loop.
std::vector<Vertex> enumerate_vertices(const std::vector<HalfSpace>& hs,
                                       std::size_t g) {
  const std::size_t m = hs.size();
  const auto base = independent_subset(hs, g);
  if (base.size() != g) {
    throw Error(ErrorCode::DegeneratePolytope, "polytope",
                "relevant vectors do not span the ambient space");
  }
  std::vector<std::size_t> opposite;
  for (auto k : base) opposite.push_back(find_opposite(hs, k));

  std::vector<bool> processed(m, false);
  std::vector<Vertex> vertices;
  RationalMatrix a(g);
  for (std::size_t i = 0; i < g; ++i) a[i] = hs[base[i]].form;
  for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << g); ++signs) {
    RationalVector rhs(g);
    Bits tight(m);
    for (std::size_t i = 0; i < g; ++i) {
      const bool flip = signs >> i & 1;
      rhs[i] = flip ? -hs[base[i]].offset : hs[base[i]].offset;
      tight.set(flip ? opposite[i] : base[i]);
    }
    vertices.push_back({*linalg::solve(a, rhs), std::move(tight)});
  }
  for (std::size_t i = 0; i < g; ++i) {
    processed[base[i]] = true;
    processed[opposite[i]] = true;
  }

  for (std::size_t f = 0; f < m; ++f) {
    if (processed[f]) continue;
    processed[f] = true;
    const HalfSpace& h = hs[f];

    std::vector<Rational> slack;
    slack.reserve(vertices.size());
    std::vector<std::size_t> plus, minus;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      slack.push_back(dot(h.form, vertices[k].point) - h.offset);
      if (slack.back() > 0) {
        plus.push_back(k);
      } else if (slack.back() < 0) {
        minus.push_back(k);
      } else {
        vertices[k].tight.set(f);
      }
    }
    if (plus.empty()) continue;

    std::vector<Vertex> created;
    for (auto p : plus) {
      for (auto q : minus) {
        Bits common = vertices[p].tight & vertices[q].tight;
        if (common.count() + 1 < g) continue;
        bool adjacent = true;
        for (std::size_t w = 0; w < vertices.size() && adjacent; ++w) {
          if (w != p && w != q && common.is_subset_of(vertices[w].tight)) {
            adjacent = false;
          }
        }
        if (!adjacent) continue;
        const Rational t = slack[p] / (slack[p] - slack[q]);
        AmbientPoint x = vertices[p].point;
        for (std::size_t i = 0; i < g; ++i) {
          x[i] += t * (vertices[q].point[i] - vertices[p].point[i]);
        }
        common.set(f);
        created.push_back({std::move(x), std::move(common)});
      }
    }
    std::vector<Vertex> kept;
    kept.reserve(vertices.size() - plus.size() + created.size());
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      if (slack[k] <= 0) kept.push_back(std::move(vertices[k]));
    }
    for (auto& v : created) kept.push_back(std::move(v));
    vertices = std::move(kept);
  }

  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& x, const Vertex& y) { return x.point < y.point; });
  return vertices;
}

std::size_t affine_rank(const Polytope& poly, const std::vector<std::size_t>& ids) {
  if (ids.size() <= 1) return 0;
  RationalMatrix rows;
  const auto& origin = poly.vertices[ids.front()];
  for (std::size_t k = 1; k < ids.size(); ++k) {
    RationalVector d = poly.vertices[ids[k]];
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= origin[i];
    rows.push_back(std::move(d));
  }
  return linalg::rank(rows);
}

class Triangulator {
 public:
  explicit Triangulator(const Polytope& poly) : poly_(poly) {}

  // Simplices (as vertex index lists) of a face given by its sorted vertex
  // ids, coned from its first vertex. Shared lower faces are memoized so
  // neighbouring faces get compatible triangulations at no extra cost.
  const std::vector<std::vector<std::size_t>>& face(const std::vector<std::size_t>& ids,
                                                    std::size_t dim) {
    if (auto it = memo_.find(ids); it != memo_.end()) return it->second;
    std::vector<std::vector<std::size_t>> out;
    if (dim == 0) {
      out.push_back({ids.front()});
    } else {
      const std::size_t apex = ids.front();
      for (const auto& sub : subfaces(ids)) {
        if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
        for (auto s : face(sub, dim - 1)) {
          s.push_back(apex);
          out.push_back(std::move(s));
        }
      }
    }
    return memo_.emplace(ids, std::move(out)).first->second;
  }

  // Facets of a face are the inclusion-maximal proper traces of the
  // polytope's facets on it.
  std::vector<std::vector<std::size_t>> subfaces(const std::vector<std::size_t>& ids) {
    std::vector<Bits> traces;
    for (std::size_t f = 0; f < poly_.halfspaces.size(); ++f) {
      Bits trace(ids.size());
      for (std::size_t k = 0; k < ids.size(); ++k) {
        if (poly_.incidence[ids[k]].test(f)) trace.set(k);
      }
      if (trace.none() || trace.all()) continue;
      if (std::find(traces.begin(), traces.end(), trace) == traces.end()) {
        traces.push_back(std::move(trace));
      }
    }
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t a = 0; a < traces.size(); ++a) {
      bool maximal = true;
      for (std::size_t b = 0; b < traces.size() && maximal; ++b) {
        if (a != b && traces[a].is_proper_subset_of(traces[b])) maximal = false;
      }
      if (!maximal) continue;
      std::vector<std::size_t> sub;
      for (std::size_t k = 0; k < ids.size(); ++k) {
        if (traces[a].test(k)) sub.push_back(ids[k]);
      }
      out.push_back(std::move(sub));
    }
    return out;
  }

 private:
  const Polytope& poly_;
  std::map<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>> memo_;
};

}  // namespace

Polytope voronoi_cell(const GramLattice& lat) {
  Polytope poly;
  poly.halfspaces = voronoi_halfspaces(lat);
  auto vertices = enumerate_vertices(poly.halfspaces, lat.rank());
  for (auto& v : vertices) {
    poly.vertices.push_back(std::move(v.point));
    poly.incidence.push_back(std::move(v.tight));
  }
  return poly;
}

namespace {

// Each simplex is the origin together with the listed vertex ids.
std::vector<std::vector<std::size_t>> triangulate_ids(const Polytope& poly) {
  const std::size_t g = poly.dimension();
  std::vector<std::size_t> all(poly.vertices.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (affine_rank(poly, all) != g) {
    throw Error(ErrorCode::DegeneratePolytope, "polytope",
                "polytope is not full-dimensional");
  }

  Triangulator tri(poly);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t f = 0; f < poly.halfspaces.size(); ++f) {
    std::vector<std::size_t> facet;
    for (std::size_t k = 0; k < poly.vertices.size(); ++k) {
      if (poly.incidence[k].test(f)) facet.push_back(k);
    }
    const auto& cone = tri.face(facet, g - 1);
    out.insert(out.end(), cone.begin(), cone.end());
  }
  return out;
}

// Fraction-free determinant of a small integer matrix (destroys the input).
Integer bareiss_determinant(std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

std::vector<Simplex> triangulate(const Polytope& poly) {
  const std::size_t g = poly.dimension();
  std::vector<Simplex> out;
  for (const auto& ids : triangulate_ids(poly)) {
    Simplex s;
    s.vertices.emplace_back(g, Rational(0));
    for (auto k : ids) s.vertices.push_back(poly.vertices[k]);
    out.push_back(std::move(s));
  }
  return out;
}

Rational simplex_volume(const Simplex& s) {
  const std::size_t g = s.vertices.size() - 1;
  RationalMatrix edges;
  for (std::size_t k = 1; k <= g; ++k) {
    RationalVector d = s.vertices[k];
    for (std::size_t i = 0; i < g; ++i) d[i] -= s.vertices[0][i];
    edges.push_back(std::move(d));
  }
  Rational v = abs(linalg::determinant(edges));
  for (std::size_t k = 2; k <= g; ++k) v /= static_cast<long>(k);
  return v;
}

Rational simplex_moment(const Simplex& s, const GramLattice& lat) {
  // For uniform barycentric weights E[l_i l_j] = (1 + [i == j]) / ((g+1)(g+2)).
  const std::size_t g = s.vertices.size() - 1;
  AmbientPoint sum(g, Rational(0));
  Rational squares = 0;
  for (const auto& v : s.vertices) {
    squares += lat.norm2(v);
    for (std::size_t i = 0; i < g; ++i) sum[i] += v[i];
  }
  const long denom = static_cast<long>((g + 1) * (g + 2));
  return simplex_volume(s) * (squares + lat.norm2(sum)) / denom;
}

Rational volume(const Polytope& poly) {
  Rational total = 0;
  for (const auto& s : triangulate(poly)) total += simplex_volume(s);
  return total;
}

MomentReport moment_report(const GramLattice& lat) {
  const Polytope cell = voronoi_cell(lat);
  const std::size_t g = lat.rank();

  // Work in integers: vertices scaled by the common denominator d, the Gram
  // matrix by e. Every simplex has the origin as a vertex, so its volume is
  // |det| / (g! d^g) and the simplex moment formula only needs vertex sums.
  Integer d = 1;
  for (const auto& v : cell.vertices) {
    for (const auto& c : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  }
  Integer e = 1;
  for (const auto& row : lat.gram()) {
    for (const auto& c : row) mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<std::vector<Integer>> scaled, formed;
  std::vector<Integer> norms;
  for (const auto& v : cell.vertices) {
    std::vector<Integer> x(g);
    for (std::size_t i = 0; i < g; ++i) x[i] = Integer(v[i] * d);
    std::vector<Integer> w(g, Integer(0));
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t j = 0; j < g; ++j) w[i] += Integer(lat.gram()[i][j] * e) * x[j];
    }
    Integer n = 0;
    for (std::size_t i = 0; i < g; ++i) n += x[i] * w[i];
    scaled.push_back(std::move(x));
    formed.push_back(std::move(w));
    norms.push_back(std::move(n));
  }

  const auto simplices = triangulate_ids(cell);
  Integer volume_sum = 0;
  Integer moment_sum = 0;
  std::vector<std::vector<Integer>> m(g);
  std::vector<Integer> s(g), t(g);
  for (const auto& ids : simplices) {
    for (std::size_t r = 0; r < g; ++r) m[r] = scaled[ids[r]];
    Integer det = bareiss_determinant(m);
    det = abs(det);
    Integer squares = 0;
    for (std::size_t i = 0; i < g; ++i) s[i] = t[i] = 0;
    for (auto k : ids) {
      squares += norms[k];
      for (std::size_t i = 0; i < g; ++i) {
        s[i] += scaled[k][i];
        t[i] += formed[k][i];
      }
    }
    for (std::size_t i = 0; i < g; ++i) squares += s[i] * t[i];
    volume_sum += det;
    moment_sum += det * squares;
  }

  Integer factorial = 1;
  for (std::size_t k = 2; k <= g; ++k) factorial *= static_cast<long>(k);
  Integer dg = 1;
  for (std::size_t k = 0; k < g; ++k) dg *= d;

  MomentReport report;
  report.volume = Rational(volume_sum, factorial * dg);
  report.volume.canonicalize();
  report.moment = Rational(moment_sum,
                           volume_sum * static_cast<long>((g + 1) * (g + 2)) * d * d * e);
  report.moment.canonicalize();
  report.facets = cell.halfspaces.size();
  report.vertices = cell.vertices.size();
  report.simplices = simplices.size();
  return report;
}

Rational second_moment(const GramLattice& lat) { return moment_report(lat).moment; }

}  // namespace tropmoment
