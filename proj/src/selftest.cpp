#include "tropmoment/selftest.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

#include "tropmoment/error.hpp"
#include "tropmoment/heights.hpp"
#include "tropmoment/neron.hpp"
#include "tropmoment/polytope.hpp"
#include "tropmoment/random_instances.hpp"
#include "tropmoment/troptheta.hpp"

namespace tropmoment {
namespace {

using random::Engine;

// Runs `body` for each case; a false return or an exception records a failure.
CheckResult check(std::string name, std::size_t cases,
                  const std::function<bool(std::size_t, std::string&)>& body) {
  CheckResult r{std::move(name), true, cases, {}};
  for (std::size_t k = 0; k < cases; ++k) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(k, detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (!ok) {
      r.passed = false;
      r.detail = "case " + std::to_string(k) + ": " + detail;
      break;
    }
  }
  return r;
}

std::complex<double> random_unit_disc(Engine& rng, double lo, double hi) {
  std::uniform_real_distribution<double> radius(lo, hi);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(radius(rng), angle(rng));
}

}  // namespace

std::vector<CheckResult> run_selftest(std::uint64_t seed) {
  Engine rng(seed);
  std::vector<CheckResult> out;

  out.push_back(check("remarkable_formula", 40, [&](std::size_t, std::string& d) {
    const MetricGraph g = random::connected_graph(rng);
    const Rational r = remarkable_residual(g);
    d = "residual " + to_string(r);
    return r == 0;
  }));

  out.push_back(check("tau_base_point", 20, [&](std::size_t, std::string& d) {
    const MetricGraph g = random::connected_graph(rng);
    const Rational t0 = tau(g);
    const std::size_t e = g.edges().size() - 1;
    const Rational t1 = tau(g, {e, g.edges()[e].length / 3});
    d = to_string(t0) + " vs " + to_string(t1);
    return t0 == t1;
  }));

  out.push_back(check("theta_functional_equation", 100, [&](std::size_t k, std::string& d) {
    const GramLattice lat = random::lattice(rng, 1 + k % 4);
    const AmbientPoint nu = random::point(rng, lat.rank());
    const LatticeVector u = random::lattice_vector(rng, lat.rank());
    const Rational r = functional_equation_residual(lat, nu, u);
    d = "residual " + to_string(r);
    return r == 0;
  }));

  out.push_back(check("modified_theta", 60, [&](std::size_t k, std::string& d) {
    const GramLattice lat = random::lattice(rng, 1 + k % 3);
    const AmbientPoint nu = random::point(rng, lat.rank());
    const LatticeVector u = random::lattice_vector(rng, lat.rank());
    AmbientPoint shifted = nu;
    for (std::size_t i = 0; i < nu.size(); ++i) shifted[i] += static_cast<long>(u[i]);
    const Rational n = norm_psi(lat, nu);
    d = "norm_psi " + to_string(n);
    return n == psi(lat, nu) + lat.norm2(nu) / 2 && n == norm_psi(lat, shifted) &&
           n == norm_psi(lat, TorusPoint(nu));
  }));

  out.push_back(check("moment_direct_sum_and_scaling", 6, [&](std::size_t k, std::string& d) {
    const GramLattice a = random::lattice(rng, 1 + k % 2);
    const GramLattice b = random::lattice(rng, 1);
    const Rational c = random::positive_rational(rng);
    const Rational ia = second_moment(a);
    const Rational ib = second_moment(b);
    d = "I(a) " + to_string(ia) + ", I(b) " + to_string(ib);
    return second_moment(direct_sum(a, b)) == ia + ib &&
           second_moment(a.scaled(c)) == c * ia;
  }));

  out.push_back(check("theorem_a_elliptic", 30, [&](std::size_t, std::string& d) {
    std::uniform_int_distribution<int> degree(1, 3);
    std::uniform_int_distribution<long> ord(0, 20);
    std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.3, 10.0), lognv(0.5, 5.0);
    ECPlaceData data;
    data.degree = degree(rng);
    for (int i = 0; i < data.degree; ++i) data.arch.push_back({{re(rng), im(rng)}});
    for (int i = 0; i < 3; ++i) data.nonarch.push_back({ord(rng), lognv(rng)});
    const HeightReport h = theorem_a_residual_elliptic(data);
    d = "residual " + std::to_string(h.residual);
    return std::abs(h.residual) < 1e-10;
  }));

  out.push_back(check("i_arch_positive", 30, [&](std::size_t, std::string& d) {
    std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.3, 10.0);
    const UpperHalfPoint tau{re(rng), im(rng)};
    const double v = i_arch_elliptic(tau);
    d = "I_arch " + std::to_string(v);
    return v > 0.0;
  }));

  out.push_back(check("tate_theta_periodicity", 30, [&](std::size_t, std::string& d) {
    const auto curve = TateCurve::archimedean(random_unit_disc(rng, 0.05, 0.7));
    const std::complex<double> z = random_unit_disc(rng, 0.2, 1.5);
    const std::complex<double> q = curve.q();
    const double quasi = log_abs_tate_theta(curve, q * z, 512).value -
                         log_abs_tate_theta(curve, z, 512).value + std::log(std::abs(z));
    const double lambda = neron_lambda(curve, q * z, 512).value -
                          neron_lambda(curve, z, 512).value;
    d = "theta " + std::to_string(quasi) + ", lambda " + std::to_string(lambda);
    return std::abs(quasi) < 1e-10 && std::abs(lambda) < 1e-10;
  }));

  out.push_back(check("tate_skeleton", 12, [&](std::size_t k, std::string& d) {
    const long ell = 2 + static_cast<long>(k);
    const auto curve = TateCurve::valuation(Rational(ell));
    const GramLattice lat = tate_skeleton_lattice(curve);
    for (long i = 0; i < ell; ++i) {
      const Rational nu(i);
      const Rational t = trop_lambda(curve, nu);
      const Rational n = norm_psi_kappa0(lat, tate_characteristic(), AmbientPoint{Rational(nu / ell)});
      if (t != n || t != component_multiplicity(i, ell)) {
        d = "ell " + std::to_string(ell) + ", i " + std::to_string(i);
        return false;
      }
    }
    return true;
  }));

  return out;
}

}  // namespace tropmoment
