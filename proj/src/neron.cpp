#include "tropmoment/neron.hpp"

#include <cmath>

#include "tropmoment/error.hpp"

namespace tropmoment {

TateCurve TateCurve::archimedean(std::complex<double> q) {
  const double a = std::abs(q);
  if (!(a > 0.0 && a < 1.0)) {
    throw Error(ErrorCode::BadModulus, "neron", "Tate parameter needs 0 < |q| < 1");
  }
  return TateCurve(q);
}

TateCurve TateCurve::valuation(const Rational& ell) {
  if (ell <= 0) {
    throw Error(ErrorCode::BadModulus, "neron", "ell = -log|q| must be positive");
  }
  return TateCurve(ell);
}

const std::complex<double>& TateCurve::q() const {
  if (const auto* q = std::get_if<std::complex<double>>(&param_)) return *q;
  throw Error(ErrorCode::DomainError, "neron",
              "valuation-model curve has no complex parameter");
}

const Rational& TateCurve::ell() const {
  if (const auto* ell = std::get_if<Rational>(&param_)) return *ell;
  throw Error(ErrorCode::DomainError, "neron",
              "archimedean curve has no exact valuation parameter");
}

double b2(double t) { return t * t - t + 1.0 / 6.0; }

Rational b2(const Rational& t) { return t * t - t + Rational(1, 6); }

namespace {

constexpr double kDivisorTolerance = 1e-9;

double log_abs_one_minus(std::complex<double> w) {
  if (std::norm(w) < 0.25) return 0.5 * std::log1p(std::norm(w) - 2.0 * w.real());
  return std::log(std::abs(1.0 - w));
}

void check_off_divisor(std::complex<double> q, std::complex<double> z) {
  const double log_q = std::log(std::abs(q));
  const double k0 = std::round(std::log(std::abs(z)) / log_q);
  for (double k = k0 - 1; k <= k0 + 1; k += 1.0) {
    const std::complex<double> qk = std::pow(q, k);
    if (std::abs(z - qk) < kDivisorTolerance * std::abs(qk)) {
      throw Error(ErrorCode::AtDivisor, "neron",
                  "z lies on the divisor q^Z of the theta function");
    }
  }
}

}  // namespace

SeriesValue log_abs_tate_theta(const TateCurve& curve, std::complex<double> z,
                               int n_terms) {
  const std::complex<double> q = curve.q();
  if (n_terms < 1) {
    throw Error(ErrorCode::DomainError, "neron", "n_terms must be >= 1");
  }
  if (z == 0.0) {
    throw Error(ErrorCode::DomainError, "neron", "z must be non-zero");
  }
  check_off_divisor(q, z);

  const double abs_q = std::abs(q);
  const double abs_z = std::abs(z);
  const double spread = std::max(abs_z, 1.0 / abs_z);
  SeriesValue out;
  double sum = log_abs_one_minus(z);
  std::complex<double> qn = 1.0;
  for (int n = 1; n <= n_terms; ++n) {
    qn *= q;
    sum += log_abs_one_minus(qn * z) + log_abs_one_minus(qn / z);
    out.terms = n;
    // For x <= 1/2, |log|1 - w|| <= 2|w|; the remaining factors are geometric.
    const double next = std::abs(qn) * abs_q * spread;
    out.tail_bound = next <= 0.5
                         ? 2.0 * std::abs(qn) * abs_q * (abs_z + 1.0 / abs_z) / (1.0 - abs_q)
                         : INFINITY;
    if (out.tail_bound < kTailTolerance) break;
  }
  out.value = sum;
  return out;
}

SeriesValue neron_lambda(const TateCurve& curve, std::complex<double> z, int n_terms) {
  SeriesValue theta = log_abs_tate_theta(curve, z, n_terms);
  const double log_q = std::log(std::abs(curve.q()));
  const double ell = -log_q;
  theta.value = 0.5 * ell * b2(std::log(std::abs(z)) / log_q) - theta.value;
  return theta;
}

Rational trop_lambda(const TateCurve& curve, const Rational& nu) {
  const Rational& ell = curve.ell();
  if (nu < 0 || nu > ell) {
    throw Error(ErrorCode::OutOfRange, "neron", "nu must lie in [0, ell]");
  }
  return nu * (nu - ell) / (2 * ell);
}

Rational component_multiplicity(long i, long ell) {
  if (ell <= 0 || i < 0 || i >= ell) {
    throw Error(ErrorCode::OutOfRange, "neron", "component index must satisfy 0 <= i < ell");
  }
  return make_rational(Integer(i) * (i - ell), Integer(2) * ell);
}

GramLattice tate_skeleton_lattice(const TateCurve& curve) {
  return GramLattice::validate({{curve.ell()}});
}

AmbientPoint tate_characteristic() { return {Rational(1, 2)}; }

}  // namespace tropmoment
