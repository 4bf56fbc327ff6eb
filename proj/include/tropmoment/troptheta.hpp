#pragma once

#include "tropmoment/lattice.hpp"

namespace tropmoment {

// A point of the torus (Y (x) R) / Y. The stored representative always has
// coordinates in the half-open box [0, 1)^g.
class TorusPoint {
 public:
  explicit TorusPoint(const AmbientPoint& any_lift);
  const AmbientPoint& representative() const noexcept { return rep_; }

 private:
  AmbientPoint rep_;
};

/// Tropical Riemann theta function: min over u in Y of [u,u]/2 + [u,nu].
///
/// The minimizer is the lattice vector closest to -nu, so a single exact CVP
/// call gives the value. Piecewise integral-affine, always <= 0.
Rational psi(const GramLattice& lat, const AmbientPoint& nu);

/// Modified theta ||Psi||(nu) = Psi(nu) + ||nu||^2/2 = dist(-nu, Y)^2 / 2.
/// Y-periodic, so it is a function on the torus.
Rational norm_psi(const GramLattice& lat, const AmbientPoint& nu);
Rational norm_psi(const GramLattice& lat, const TorusPoint& x);

// Translates by a characteristic kappa: Psi_k(nu) = Psi(nu + k) and the
// variants normalized to vanish at the origin.
Rational psi_kappa(const GramLattice& lat, const AmbientPoint& kappa,
                   const AmbientPoint& nu);
Rational psi_kappa0(const GramLattice& lat, const AmbientPoint& kappa,
                    const AmbientPoint& nu);
Rational norm_psi_kappa(const GramLattice& lat, const AmbientPoint& kappa,
                        const AmbientPoint& nu);
Rational norm_psi_kappa0(const GramLattice& lat, const AmbientPoint& kappa,
                         const AmbientPoint& nu);

// True when 2 kappa lies in Y. Characteristics of symmetric theta divisors
// are of this form; other values are accepted but callers may warn.
bool is_two_torsion(const AmbientPoint& kappa);

// Psi(nu) - Psi(nu + u) - [u, nu] - [u, u] / 2. Exactly zero for every u in Y.
Rational functional_equation_residual(const GramLattice& lat,
                                      const AmbientPoint& nu,
                                      const LatticeVector& u);

// Midpoint rule for 2 * integral of ||Psi|| over the torus with the
// normalized Haar measure, on a grid_n^g grid of the box [0,1)^g. The sum is
// accumulated exactly; only the final value is rounded. Requires grid_n >= 2.
Rational moment_via_theta_exact(const GramLattice& lat, int grid_n);
double moment_via_theta(const GramLattice& lat, int grid_n);

}  // namespace tropmoment
