#pragma once

#include <complex>
#include <variant>

#include "tropmoment/heights.hpp"
#include "tropmoment/lattice.hpp"

namespace tropmoment {

/// Tate curve G_m / q^Z, either over C (complex q with 0 < |q| < 1) or in its
/// valuation model where only ell = -log|q| > 0 is known exactly.
///
/// The two models never convert into each other implicitly; accessing the
/// parameter of the other model throws DomainError.
class TateCurve {
 public:
  enum class Model { Archimedean, Valuation };

  static TateCurve archimedean(std::complex<double> q);  // BadModulus
  static TateCurve valuation(const Rational& ell);       // BadModulus

  Model model() const noexcept {
    return std::holds_alternative<std::complex<double>>(param_) ? Model::Archimedean
                                                                : Model::Valuation;
  }
  const std::complex<double>& q() const;
  const Rational& ell() const;

 private:
  explicit TateCurve(std::variant<std::complex<double>, Rational> p)
      : param_(std::move(p)) {}

  std::variant<std::complex<double>, Rational> param_;
};

// B2(t) = t^2 - t + 1/6.
double b2(double t);
Rational b2(const Rational& t);

// log|theta(z)| for theta(z) = (1 - z) prod (1 - q^n z)(1 - q^n / z).
// Throws AtDivisor when z is within relative distance 1e-9 of q^Z and
// DomainError for z = 0 or a valuation-model curve.
SeriesValue log_abs_tate_theta(const TateCurve& curve, std::complex<double> z,
                               int n_terms = kDefaultTerms);

// Tate's local height (ell/2) B2(log|z| / log|q|) - log|theta(z)|.
SeriesValue neron_lambda(const TateCurve& curve, std::complex<double> z,
                         int n_terms = kDefaultTerms);

// nu (nu - ell) / (2 ell) for 0 <= nu <= ell: the restriction to the skeleton,
// in metric coordinates, of the translated modified theta at kappa = ell/2.
Rational trop_lambda(const TateCurve& curve, const Rational& nu);

// i (i - ell) / (2 ell) for 0 <= i < ell.
Rational component_multiplicity(long i, long ell);

// The skeleton as a rank-one lattice [[ell]] and its characteristic ell/2,
// the latter written in lattice coordinates (1/2).
GramLattice tate_skeleton_lattice(const TateCurve& curve);
AmbientPoint tate_characteristic();

}  // namespace tropmoment
