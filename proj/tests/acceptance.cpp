// Acceptance run: one PASS/FAIL line per criterion, with timings. Exit status
// is non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "tropmoment/error.hpp"
#include "tropmoment/heights.hpp"
#include "tropmoment/metricgraph.hpp"
#include "tropmoment/neron.hpp"
#include "tropmoment/polytope.hpp"
#include "tropmoment/random_instances.hpp"
#include "tropmoment/troptheta.hpp"

using namespace tropmoment;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

Rational q(long p, long d = 1) { return make_rational(p, d); }

GramLattice lat(RationalMatrix m) { return GramLattice::validate(std::move(m)); }

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

bool run(int id, const char* title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && seconds > budget_seconds) {
    o.passed = false;
    o.detail += " (over the " + fmt(budget_seconds) + " s budget)";
  }
  std::printf("AC%-2d %s  %-48s %8.3f s  %s\n", id, o.passed ? "PASS" : "FAIL", title, seconds,
              o.detail.c_str());
  std::fflush(stdout);
  return o.passed;
}

Outcome circle_moment() {
  for (const Rational& ell : {q(1), q(2), q(7), q(12), q(101, 3)}) {
    const Rational m = second_moment(lat({{ell}}));
    if (m != ell / 12) return {false, "ell " + to_string(ell) + " gave " + to_string(m)};
  }
  return {true, "5 values equal ell/12"};
}

Outcome remarkable_formula() {
  random::Engine rng(2024);
  std::size_t checked = 0, max_betti = 0;
  for (int k = 0; k < 200; ++k) {
    const MetricGraph g = random::connected_graph(rng, 4, 6);
    max_betti = std::max(max_betti, g.betti_number());
    const Rational r = remarkable_residual(g);
    if (r != 0) return {false, "random graph " + std::to_string(k) + " residual " + to_string(r)};
    ++checked;
  }
  for (const auto& [name, g] : oracle::fixtures()) {
    const Rational r = remarkable_residual(g);
    if (r != 0) return {false, std::string(name) + " residual " + to_string(r)};
    ++checked;
  }
  return {true, std::to_string(checked) + " graphs, residual 0 in Q (max betti " +
                    std::to_string(max_betti) + ")"};
}

Outcome tau_base_points() {
  std::size_t count = 0;
  for (const auto& [name, g] : oracle::fixtures()) {
    const std::size_t last = g.edges().size() - 1;
    const Rational t0 = tau(g, *vertex_point(g, g.vertex_count() - 1));
    const Rational t1 = tau(g, {0, g.edges()[0].length / 2});
    const Rational t2 = tau(g, {last, g.edges()[last].length / 3});
    if (t0 != t1 || t0 != t2) {
      return {false, std::string(name) + ": " + to_string(t0) + ", " + to_string(t1) + ", " +
                         to_string(t2)};
    }
    ++count;
  }
  return {true, std::to_string(count) + " fixtures x 3 base points agree exactly"};
}

Outcome functional_equation() {
  random::Engine rng(3);
  for (int k = 0; k < 500; ++k) {
    const GramLattice l = random::lattice(rng, 1 + k % 4);
    const auto nu = random::point(rng, l.rank());
    const auto u = random::lattice_vector(rng, l.rank(), 3);
    const Rational r = functional_equation_residual(l, nu, u);
    if (r != 0) return {false, "triple " + std::to_string(k) + " residual " + to_string(r)};
  }
  return {true, "500 triples, residual 0 in Q"};
}

Outcome moment_via_theta_check() {
  const std::vector<GramLattice> cases{lat({{q(1), q(0)}, {q(0), q(1)}}),
                                       lat({{q(2), q(1)}, {q(1), q(2)}}), lat({{q(5)}})};
  double worst = 0;
  for (const auto& l : cases) {
    worst = std::max(worst, std::abs(moment_via_theta(l, 200) - to_double(second_moment(l))));
  }
  return {worst <= 2e-3, "max |error| " + fmt(worst)};
}

Outcome a2_moment() {
  const Rational exact = second_moment(lat({{q(2), q(1)}, {q(1), q(2)}}));
  if (exact != q(5, 18)) return {false, "exact value " + to_string(exact)};
  const auto [mean, se] = oracle::monte_carlo_moment({{2, 1}, {1, 2}}, 10'000'000, 6);
  const double z = std::abs(mean - 5.0 / 18.0) / se;
  return {z <= 3.0, "exact 5/18; Monte Carlo " + fmt(mean) + " +- " + fmt(se) + " (" + fmt(z) +
                        " sigma)"};
}

Outcome theorem_a() {
  random::Engine rng(7);
  std::uniform_int_distribution<int> degree(1, 3), places(0, 4);
  std::uniform_int_distribution<long> ord(0, 20);
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.3, 10.0), lognv(0.5, 6.0);
  double worst = 0;
  for (int k = 0; k < 50; ++k) {
    ECPlaceData d;
    d.degree = degree(rng);
    for (int i = 0; i < d.degree; ++i) d.arch.push_back({{re(rng), im(rng)}});
    const int bad = places(rng);
    for (int i = 0; i < bad; ++i) d.nonarch.push_back({ord(rng), lognv(rng)});
    worst = std::max(worst, std::abs(theorem_a_residual_elliptic(d).residual));
  }
  return {worst < 1e-10, "50 inputs, max |residual| " + fmt(worst)};
}

Outcome tate_cross_identity() {
  std::size_t count = 0;
  for (long ell : {2L, 3L, 5L, 12L}) {
    const auto c = TateCurve::valuation(q(ell));
    const GramLattice l = tate_skeleton_lattice(c);
    for (long k = 0; k <= 7 * ell; ++k) {
      const Rational nu = q(k, 7);
      if (trop_lambda(c, nu) != norm_psi_kappa0(l, tate_characteristic(), {nu / ell})) {
        return {false, "ell " + std::to_string(ell) + ", nu " + to_string(nu)};
      }
      ++count;
    }
    for (long i = 0; i < ell; ++i) {
      if (component_multiplicity(i, ell) != trop_lambda(c, q(i))) {
        return {false, "multiplicity ell " + std::to_string(ell) + ", i " + std::to_string(i)};
      }
      ++count;
    }
  }
  return {true, std::to_string(count) + " exact equalities"};
}

Outcome tate_periodicity() {
  random::Engine rng(9);
  std::uniform_real_distribution<double> qr(0.05, 0.7), zr(0.2, 2.0),
      arg(0.0, 2 * std::numbers::pi);
  double worst_theta = 0, worst_lambda = 0;
  int pairs = 0;
  while (pairs < 100) {
    const auto c = TateCurve::archimedean(std::polar(qr(rng), arg(rng)));
    const std::complex<double> z = std::polar(zr(rng), arg(rng));
    double theta = 0, lambda = 0;
    try {
      theta = log_abs_tate_theta(c, c.q() * z, 1024).value -
              log_abs_tate_theta(c, z, 1024).value + std::log(std::abs(z));
      lambda = neron_lambda(c, c.q() * z, 1024).value - neron_lambda(c, z, 1024).value;
    } catch (const Error&) {
      continue;  // sampled onto the divisor; draw again
    }
    worst_theta = std::max(worst_theta, std::abs(theta));
    worst_lambda = std::max(worst_lambda, std::abs(lambda));
    ++pairs;
  }
  return {worst_theta < 1e-10 && worst_lambda < 1e-10,
          "100 pairs, max theta residual " + fmt(worst_theta) + ", Lambda " + fmt(worst_lambda)};
}

Outcome i_arch_positive() {
  random::Engine rng(10);
  std::uniform_real_distribution<double> re(-0.5, 0.5), log_im(std::log(0.2), std::log(10.0));
  double smallest = INFINITY, worst_change = 0;
  for (int k = 0; k < 100; ++k) {
    const UpperHalfPoint tau{re(rng), std::exp(log_im(rng))};
    const double a = i_arch_elliptic(tau, kDefaultTerms);
    const double b = i_arch_elliptic(tau, 2 * kDefaultTerms);
    smallest = std::min(smallest, a);
    worst_change = std::max(worst_change, std::abs(a - b));
  }
  return {smallest > 0 && worst_change < 1e-12,
          "min I_arch " + fmt(smallest) + ", max change under doubling " + fmt(worst_change)};
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "circle second moment = ell/12", 1.0, circle_moment);
  ok &= run(2, "remarkable formula, random graphs + fixtures", 60.0, remarkable_formula);
  ok &= run(3, "tau independent of base point", 0, tau_base_points);
  ok &= run(4, "tropical theta functional equation", 0, functional_equation);
  ok &= run(5, "moment via theta quadrature, grid 200", 10.0, moment_via_theta_check);
  ok &= run(6, "A2 moment 5/18 + Monte Carlo oracle", 0, a2_moment);
  ok &= run(7, "height identity at g = 1", 5.0, theorem_a);
  ok &= run(8, "Tate skeleton = translated theta = multiplicity", 0, tate_cross_identity);
  ok &= run(9, "theta quasi-periodicity, Lambda periodicity", 0, tate_periodicity);
  ok &= run(10, "I_arch > 0 and stable under doubling", 0, i_arch_positive);
  std::printf("%s\n", ok ? "ALL ACCEPTANCE CRITERIA PASS" : "SOME ACCEPTANCE CRITERIA FAIL");
  return ok ? 0 : 1;
}
