#include "tropmoment/heights.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "tropmoment/error.hpp"

namespace tropmoment {
namespace {

void check_tau(const UpperHalfPoint& tau) {
  if (!(tau.im > 0.0) || !std::isfinite(tau.im) || !std::isfinite(tau.re)) {
    throw Error(ErrorCode::NonPositiveImaginaryPart, "heights",
                "tau must lie in the upper half plane");
  }
}

void check_terms(int n_terms) {
  if (n_terms < 1) {
    throw Error(ErrorCode::DomainError, "heights", "n_terms must be >= 1");
  }
}

// log|1 - w|, accurate when w is small.
double log_abs_one_minus(std::complex<double> w) {
  return 0.5 * std::log1p(std::norm(w) - 2.0 * w.real());
}

}  // namespace

double kappa0() { return std::log(std::numbers::pi * std::numbers::sqrt2); }

bool needs_reduction_warning(const UpperHalfPoint& tau) {
  return tau.im < kSmallImaginaryPart;
}

SeriesValue log_abs_delta(const UpperHalfPoint& tau, int n_terms) {
  check_tau(tau);
  check_terms(n_terms);
  const double two_pi = 2.0 * std::numbers::pi;
  const double abs_q = std::exp(-two_pi * tau.im);
  const double tail_scale = 48.0 / ((1.0 - abs_q) * (1.0 - abs_q));

  SeriesValue out;
  double sum = 0.0;
  double abs_qn = 1.0;
  for (int n = 1; n <= n_terms; ++n) {
    abs_qn *= abs_q;
    sum += log_abs_one_minus(std::polar(abs_qn, two_pi * n * tau.re));
    out.terms = n;
    out.tail_bound = tail_scale * abs_qn * abs_q;
    if (out.tail_bound < kTailTolerance) break;
  }
  out.value = -two_pi * tau.im + 24.0 * sum;
  return out;
}

double i_arch_elliptic(const UpperHalfPoint& tau, int n_terms) {
  const SeriesValue delta = log_abs_delta(tau, n_terms);
  return -(delta.value + 6.0 * std::log(2.0 * tau.im)) / 24.0;
}

Rational i_nonarch_elliptic(long ord_delta) {
  if (ord_delta < 0) {
    throw Error(ErrorCode::NegativeOrder, "heights",
                "ord of the discriminant must be non-negative");
  }
  return make_rational(ord_delta, 12);
}

void validate(const ECPlaceData& data) {
  if (data.degree < 1) {
    throw Error(ErrorCode::DomainError, "heights", "degree must be >= 1",
                "/degree");
  }
  if (data.arch.size() != static_cast<std::size_t>(data.degree)) {
    throw Error(ErrorCode::DomainError, "heights",
                "expected one archimedean entry per complex embedding "
                "(degree " + std::to_string(data.degree) + "), got " +
                    std::to_string(data.arch.size()),
                "/arch");
  }
  for (std::size_t k = 0; k < data.nonarch.size(); ++k) {
    const std::string path = "/nonarch/" + std::to_string(k);
    if (data.nonarch[k].ord_delta < 0) {
      throw Error(ErrorCode::NegativeOrder, "heights",
                  "ord_delta must be non-negative", path + "/ord_delta");
    }
    if (!(data.nonarch[k].log_nv > 0.0)) {
      throw Error(ErrorCode::DomainError, "heights", "log_nv must be positive",
                  path + "/log_nv");
    }
  }
  for (std::size_t k = 0; k < data.arch.size(); ++k) {
    if (!(data.arch[k].tau.im > 0.0)) {
      throw Error(ErrorCode::NonPositiveImaginaryPart, "heights",
                  "tau must lie in the upper half plane",
                  "/arch/" + std::to_string(k) + "/tau_im");
    }
  }
}

double faltings_height_elliptic(const ECPlaceData& data, int n_terms) {
  validate(data);
  const double log_two_pi = std::log(2.0 * std::numbers::pi);
  double sum = 0.0;
  for (const auto& v : data.nonarch) sum += static_cast<double>(v.ord_delta) * v.log_nv;
  for (const auto& v : data.arch) {
    sum -= 12.0 * log_two_pi + log_abs_delta(v.tau, n_terms).value +
           6.0 * std::log(v.tau.im);
  }
  return sum / (12.0 * data.degree);
}

double theorem_a_rhs(int g, double h_neron_tate, const std::vector<MomentPlace>& nonarch,
                     const std::vector<double>& i_arch, int degree) {
  if (g < 1 || degree < 1) {
    throw Error(ErrorCode::DomainError, "heights", "g and degree must be >= 1");
  }
  double local = 0.0;
  for (const auto& v : nonarch) local += to_double(v.moment) * v.log_nv;
  for (double i : i_arch) local += 2.0 * i;
  return 2.0 * g * h_neron_tate - kappa0() * g + local / degree;
}

Rational function_field_height(int g, const Rational& h_neron_tate,
                               const std::vector<Rational>& moments) {
  if (g < 1) {
    throw Error(ErrorCode::DomainError, "heights", "g must be >= 1");
  }
  Rational total = 2 * g * h_neron_tate;
  for (const auto& m : moments) total += m;
  return total;
}

HeightReport theorem_a_residual_elliptic(const ECPlaceData& data, int n_terms) {
  validate(data);
  HeightReport report;
  const double d = data.degree;
  const double log_two_pi = std::log(2.0 * std::numbers::pi);

  std::vector<MomentPlace> moments;
  for (std::size_t k = 0; k < data.nonarch.size(); ++k) {
    const auto& v = data.nonarch[k];
    const Rational moment = i_nonarch_elliptic(v.ord_delta);
    moments.push_back({moment, v.log_nv});
    PlaceTerm t;
    t.kind = "nonarch";
    t.index = k;
    t.moment = to_string(moment);
    t.local_invariant = to_double(moment);
    t.lhs_contribution = static_cast<double>(v.ord_delta) * v.log_nv / (12.0 * d);
    t.rhs_contribution = t.local_invariant * v.log_nv / d;
    report.terms.push_back(std::move(t));
  }
  std::vector<double> i_arch;
  for (std::size_t k = 0; k < data.arch.size(); ++k) {
    const auto& tau = data.arch[k].tau;
    const SeriesValue delta = log_abs_delta(tau, n_terms);
    const double local = -(delta.value + 6.0 * std::log(2.0 * tau.im)) / 24.0;
    i_arch.push_back(local);
    PlaceTerm t;
    t.kind = "arch";
    t.index = k;
    t.local_invariant = local;
    t.lhs_contribution =
        -(12.0 * log_two_pi + delta.value + 6.0 * std::log(tau.im)) / (12.0 * d);
    t.rhs_contribution = 2.0 * local / d;
    t.tail_bound = delta.tail_bound;
    report.tail_bound += delta.tail_bound / (12.0 * d);
    report.terms.push_back(std::move(t));
  }
  report.lhs = faltings_height_elliptic(data, n_terms);
  report.rhs = theorem_a_rhs(1, 0.0, moments, i_arch, data.degree);
  report.residual = report.lhs - report.rhs;
  return report;
}

}  // namespace tropmoment
