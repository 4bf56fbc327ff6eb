#pragma once

#include <string>
#include <vector>

#include "tropmoment/rational.hpp"

namespace tropmoment {

struct UpperHalfPoint {
  double re = 0.0;
  double im = 1.0;
};

// A truncated infinite sum or product in log form. `tail_bound` bounds the
// absolute error of `value` caused by truncation after `terms` factors.
struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
  int terms = 0;
};

inline constexpr int kDefaultTerms = 64;
inline constexpr double kTailTolerance = 1e-15;

// log(pi * sqrt(2)).
double kappa0();

// Im tau below this is accepted, but callers are expected to warn: the input
// is probably not reduced to the fundamental domain.
inline constexpr double kSmallImaginaryPart = 0.1;
bool needs_reduction_warning(const UpperHalfPoint& tau);

/// log|Delta(tau)| from the product q prod (1 - q^n)^24.
///
/// At most n_terms factors are used; evaluation stops early once the tail
/// bound 48 |q|^(N+1) / (1 - |q|)^2 drops below kTailTolerance.
SeriesValue log_abs_delta(const UpperHalfPoint& tau, int n_terms = kDefaultTerms);

// -(1/24) log(|Delta(tau)| (2 Im tau)^6). Strictly positive on the upper half
// plane.
double i_arch_elliptic(const UpperHalfPoint& tau, int n_terms = kDefaultTerms);

// ord / 12.
Rational i_nonarch_elliptic(long ord_delta);

struct NonArchPlace {
  long ord_delta = 0;
  double log_nv = 0.0;
};

struct ArchPlace {
  UpperHalfPoint tau;
};

// Local data of a semistable elliptic curve over a number field of the given
// degree. One archimedean entry per complex embedding, so conjugate
// embeddings are listed separately.
struct ECPlaceData {
  int degree = 1;
  std::vector<NonArchPlace> nonarch;
  std::vector<ArchPlace> arch;
};

// Throws DomainError (wrong arch count, degree < 1, log Nv <= 0),
// NegativeOrder or NonPositiveImaginaryPart.
void validate(const ECPlaceData& data);

// Stable Faltings height via the Faltings-Silverman closed form.
double faltings_height_elliptic(const ECPlaceData& data, int n_terms = kDefaultTerms);

struct MomentPlace {
  Rational moment;
  double log_nv = 0.0;
};

// 2 g h' - kappa0 g + (sum I_v log Nv + 2 sum I_v^arch) / degree.
double theorem_a_rhs(int g, double h_neron_tate, const std::vector<MomentPlace>& nonarch,
                     const std::vector<double>& i_arch, int degree);

// Function field analogue: 2 g h' + sum of local moments. Exact.
Rational function_field_height(int g, const Rational& h_neron_tate,
                               const std::vector<Rational>& moments);

struct PlaceTerm {
  std::string kind;  // "nonarch" or "arch"
  std::size_t index = 0;
  std::string moment;  // exact local invariant for non-archimedean places
  double local_invariant = 0.0;
  double lhs_contribution = 0.0;
  double rhs_contribution = 0.0;
  double tail_bound = 0.0;  // on log|Delta| at this place
};

struct HeightReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // lhs - rhs
  double tail_bound = 0.0;  // on the height, i.e. summed place bounds / (12 degree)
  std::vector<PlaceTerm> terms;
};

// Faltings-Silverman on the left, the local-moment assembly with h' = 0 on
// the right.
HeightReport theorem_a_residual_elliptic(const ECPlaceData& data,
                                         int n_terms = kDefaultTerms);

}  // namespace tropmoment
