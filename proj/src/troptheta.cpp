#include "tropmoment/troptheta.hpp"

#include "tropmoment/error.hpp"

namespace tropmoment {
namespace {

AmbientPoint add(const AmbientPoint& x, const AmbientPoint& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::DimensionMismatch, "troptheta",
                "point dimensions differ");
  }
  AmbientPoint out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
  return out;
}

AmbientPoint negate(AmbientPoint x) {
  for (auto& c : x) c = -c;
  return x;
}

}  // namespace

TorusPoint::TorusPoint(const AmbientPoint& any_lift) : rep_(any_lift) {
  for (auto& c : rep_) c = frac(c);
}

Rational psi(const GramLattice& lat, const AmbientPoint& nu) {
  const AmbientPoint u = to_ambient(closest_vector(lat, negate(nu)));
  return lat.norm2(u) / 2 + lat.inner(u, nu);
}

Rational norm_psi(const GramLattice& lat, const AmbientPoint& nu) {
  return distance2(lat, negate(nu)) / 2;
}

Rational norm_psi(const GramLattice& lat, const TorusPoint& x) {
  return norm_psi(lat, x.representative());
}

Rational psi_kappa(const GramLattice& lat, const AmbientPoint& kappa,
                   const AmbientPoint& nu) {
  return psi(lat, add(nu, kappa));
}

Rational psi_kappa0(const GramLattice& lat, const AmbientPoint& kappa,
                    const AmbientPoint& nu) {
  return psi(lat, add(nu, kappa)) - psi(lat, kappa);
}

Rational norm_psi_kappa(const GramLattice& lat, const AmbientPoint& kappa,
                        const AmbientPoint& nu) {
  return norm_psi(lat, add(nu, kappa));
}

Rational norm_psi_kappa0(const GramLattice& lat, const AmbientPoint& kappa,
                         const AmbientPoint& nu) {
  return norm_psi(lat, add(nu, kappa)) - norm_psi(lat, kappa);
}

bool is_two_torsion(const AmbientPoint& kappa) {
  for (const auto& c : kappa) {
    if (Rational(2 * c).get_den() != 1) return false;
  }
  return true;
}

Rational functional_equation_residual(const GramLattice& lat,
                                      const AmbientPoint& nu,
                                      const LatticeVector& u) {
  const AmbientPoint ua = to_ambient(u);
  return psi(lat, nu) - psi(lat, add(nu, ua)) - lat.inner(ua, nu) -
         lat.norm2(ua) / 2;
}

Rational moment_via_theta_exact(const GramLattice& lat, int grid_n) {
  if (grid_n < 2) {
    throw Error(ErrorCode::DomainError, "troptheta", "grid_n must be >= 2");
  }
  const std::size_t g = lat.rank();
  const long n = grid_n;
  std::vector<long> index(g, 0);
  AmbientPoint x(g);
  Rational total = 0;
  while (true) {
    for (std::size_t i = 0; i < g; ++i) x[i] = make_rational(2 * index[i] + 1, 2 * n);
    total += distance2(lat, x);  // 2 ||Psi||(-x)
    std::size_t i = 0;
    while (i < g && ++index[i] == n) index[i++] = 0;
    if (i == g) break;
  }
  Rational cells = 1;
  for (std::size_t i = 0; i < g; ++i) cells *= n;
  return total / cells;
}

double moment_via_theta(const GramLattice& lat, int grid_n) {
  return to_double(moment_via_theta_exact(lat, grid_n));
}

}  // namespace tropmoment
