#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tropmoment/error.hpp"
#include "tropmoment/heights.hpp"

using namespace tropmoment;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST(Kappa0, Value) { EXPECT_DOUBLE_EQ(kappa0(), std::log(kPi * std::sqrt(2.0))); }

TEST(LogAbsDelta, AgreesWithLongDoubleProduct) {
  for (const UpperHalfPoint tau : {UpperHalfPoint{0, 1}, UpperHalfPoint{0.5, std::sqrt(3.0) / 2},
                                   UpperHalfPoint{-0.3, 0.4}, UpperHalfPoint{0.1, 2.5}}) {
    const SeriesValue v = log_abs_delta(tau, 200);
    EXPECT_NEAR(v.value, static_cast<double>(oracle::log_abs_delta(tau.re, tau.im)), 1e-12);
  }
  const SeriesValue v = log_abs_delta({0, 1}, 50);
  EXPECT_NEAR(v.value, static_cast<double>(oracle::log_abs_delta(0, 1)), 1e-12);
  EXPECT_LT(v.tail_bound, 1e-14);
}

TEST(LogAbsDelta, LeadingTermAtLargeImaginaryPart) {
  const SeriesValue v = log_abs_delta({0.2, 10});
  EXPECT_NEAR(v.value, -20 * kPi, 1e-8);
  EXPECT_NEAR(v.value, static_cast<double>(oracle::log_abs_delta(0.2, 10)), 1e-12);
}

TEST(LogAbsDelta, PeriodicInRealPart) {
  for (double re : {-0.4, 0.0, 0.25}) {
    const double a = log_abs_delta({re, 0.9}).value;
    const double b = log_abs_delta({re + 1, 0.9}).value;
    EXPECT_NEAR(a, b, 1e-12);
  }
}

TEST(LogAbsDelta, DoublingTermsStaysWithinTailBound) {
  for (double im : {0.3, 0.7, 1.5}) {
    const SeriesValue a = log_abs_delta({0.1, im}, 40);
    const SeriesValue b = log_abs_delta({0.1, im}, 80);
    EXPECT_LE(std::abs(a.value - b.value), a.tail_bound + 1e-13);
  }
}

TEST(LogAbsDelta, RejectsLowerHalfPlane) {
  try {
    log_abs_delta({0, -1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPositiveImaginaryPart);
  }
  EXPECT_TRUE(needs_reduction_warning({0, 0.05}));
  EXPECT_FALSE(needs_reduction_warning({0, 0.5}));
}

TEST(IArch, PositiveAndStable) {
  const double i = i_arch_elliptic({0, 1}, 50);
  EXPECT_GT(i, 0);
  EXPECT_NEAR(i, i_arch_elliptic({0, 1}, 200), 1e-10);
  const UpperHalfPoint cm{0.5, std::sqrt(3.0) / 2};
  EXPECT_GT(i_arch_elliptic(cm), 0);
  EXPECT_NEAR(i_arch_elliptic(cm), i_arch_elliptic({1.5, cm.im}), 1e-12);
}

TEST(IArch, ModularInvariance) {
  // 2i and -1/(2i) = i/2.
  EXPECT_NEAR(i_arch_elliptic({0, 2}), i_arch_elliptic({0, 0.5}), 1e-9);
  // tau and -1/tau for a generic point.
  const std::complex<double> t{0.3, 1.1};
  const std::complex<double> s = -1.0 / t;
  EXPECT_NEAR(i_arch_elliptic({t.real(), t.imag()}), i_arch_elliptic({s.real(), s.imag()}),
              1e-9);
}

TEST(INonArch, Examples) {
  EXPECT_EQ(i_nonarch_elliptic(0), 0);
  EXPECT_EQ(i_nonarch_elliptic(5), make_rational(5, 12));
  EXPECT_EQ(i_nonarch_elliptic(12), 1);
  try {
    i_nonarch_elliptic(-1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeOrder);
  }
}

TEST(FaltingsHeight, Examples) {
  ECPlaceData d{1, {}, {{{0, 1}}}};
  const double h = faltings_height_elliptic(d, 200);
  const double expected =
      -(12 * std::log(2 * kPi) + static_cast<double>(oracle::log_abs_delta(0, 1))) / 12;
  EXPECT_NEAR(h, expected, 1e-12);

  d.nonarch.push_back({12, std::log(2.0)});
  EXPECT_NEAR(faltings_height_elliptic(d, 200) - h, std::log(2.0), 1e-12);

  ECPlaceData two{2, {{3, std::log(7.0)}}, {{{0.2, 1.3}}, {{-0.2, 1.3}}}};
  ECPlaceData one{1, {}, {{{0.2, 1.3}}}};
  EXPECT_NEAR(faltings_height_elliptic(two),
              faltings_height_elliptic(one) + 3 * std::log(7.0) / 24, 1e-12);
}

TEST(Places, Validation) {
  const auto code = [](const ECPlaceData& d) {
    try {
      validate(d);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::OutOfRange;
  };
  EXPECT_EQ(code({2, {}, {{{0, 1}}}}), ErrorCode::DomainError);
  EXPECT_EQ(code({1, {{-1, 1.0}}, {{{0, 1}}}}), ErrorCode::NegativeOrder);
  EXPECT_EQ(code({1, {}, {{{0, 0}}}}), ErrorCode::NonPositiveImaginaryPart);
  EXPECT_EQ(code({1, {{1, 0.0}}, {{{0, 1}}}}), ErrorCode::DomainError);
}

TEST(TheoremARhs, Examples) {
  EXPECT_DOUBLE_EQ(theorem_a_rhs(3, 0, {{0, 1.0}}, {0.0}, 1), -3 * kappa0());
  EXPECT_EQ(function_field_height(1, 0, {make_rational(1, 12), make_rational(1, 6)}),
            make_rational(1, 4));
  EXPECT_EQ(function_field_height(2, make_rational(1, 3), {}), make_rational(4, 3));
}

TEST(TheoremA, Examples) {
  EXPECT_LT(std::abs(theorem_a_residual_elliptic({1, {}, {{{0, 1}}}}).residual), 1e-10);
  const HeightReport r = theorem_a_residual_elliptic(
      {1, {{4, std::log(3.0)}, {7, std::log(5.0)}}, {{{0.5, 3}}}});
  EXPECT_LT(std::abs(r.residual), 1e-10);
  EXPECT_EQ(r.terms.size(), 3u);
  EXPECT_EQ(r.terms[0].moment, "1/3");
  const HeightReport r3 = theorem_a_residual_elliptic(
      {3, {{1, 0.7}, {20, 2.3}, {0, 1.1}}, {{{0.1, 0.4}}, {{-0.45, 1.2}}, {{0.3, 7}}}});
  EXPECT_LT(std::abs(r3.residual), 1e-10);
}

TEST(TheoremA, AddingABadPlaceRaisesBothSidesEqually) {
  ECPlaceData d{2, {{3, 1.0}}, {{{0.1, 1}}, {{-0.1, 1}}}};
  const HeightReport before = theorem_a_residual_elliptic(d);
  d.nonarch.push_back({6, 0.5});
  const HeightReport after = theorem_a_residual_elliptic(d);
  EXPECT_GT(after.lhs, before.lhs);
  EXPECT_NEAR(after.lhs - before.lhs, 6 * 0.5 / 24, 1e-12);
  EXPECT_NEAR(after.rhs - before.rhs, after.lhs - before.lhs, 1e-12);
}
