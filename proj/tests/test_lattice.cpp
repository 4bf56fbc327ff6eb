#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tropmoment/error.hpp"
#include "tropmoment/lattice.hpp"
#include "tropmoment/linalg.hpp"
#include "tropmoment/random_instances.hpp"

using namespace tropmoment;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

GramLattice identity(std::size_t g) {
  RationalMatrix m(g, RationalVector(g, Rational(0)));
  for (std::size_t i = 0; i < g; ++i) m[i][i] = 1;
  return GramLattice::validate(m);
}

GramLattice a2() { return GramLattice::validate({{q(2), q(1)}, {q(1), q(2)}}); }

std::vector<oracle::Vec> as_oracle(const std::vector<LatticeVector>& vs) {
  std::vector<oracle::Vec> out;
  for (const auto& v : vs) out.emplace_back(v.begin(), v.end());
  return out;
}

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("6/4"), q(3, 2));
  EXPECT_EQ(parse_rational("-7"), q(-7));
  EXPECT_EQ(to_string(q(3, 2)), "3/2");
  EXPECT_EQ(to_string(q(-4)), "-4");
  EXPECT_THROW(parse_rational("1.5"), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational(""), Error);
  const auto list = parse_rational_list("1/3, -2,5/10");
  ASSERT_EQ(list.size(), 3u);
  EXPECT_EQ(list[2], q(1, 2));
  EXPECT_EQ(floor(q(-1, 3)), -1);
  EXPECT_EQ(ceil(q(-1, 3)), 0);
  EXPECT_EQ(frac(q(-1, 3)), q(2, 3));
}

TEST(Linalg, SolveDeterminantRank) {
  const RationalMatrix a{{q(2), q(1, 2)}, {q(1, 3), q(4)}};
  const auto x = linalg::solve(a, {q(1), q(2)});
  ASSERT_TRUE(x);
  EXPECT_EQ(linalg::multiply(a, *x), (RationalVector{q(1), q(2)}));
  EXPECT_EQ(linalg::determinant(a), q(8) - q(1, 6));
  EXPECT_FALSE(linalg::solve({{q(1), q(2)}, {q(2), q(4)}}, {q(1), q(1)}));
  EXPECT_EQ(linalg::rank({{q(1), q(2), q(3)}, {q(2), q(4), q(6)}}), 1u);
}

TEST(Validate, AcceptsPositiveDefinite) {
  EXPECT_EQ(GramLattice::validate({{q(1)}}).rank(), 1u);
  const GramLattice a = a2();
  EXPECT_EQ(a.pivots(), (RationalVector{q(2), q(3, 2)}));
}

TEST(Validate, RejectsIndefiniteWithMinorIndex) {
  try {
    GramLattice::validate({{q(1), q(2)}, {q(2), q(1)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPositiveDefinite);
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}

TEST(Validate, RejectsAsymmetricAndRagged) {
  EXPECT_THROW(GramLattice::validate({{q(1), q(0)}, {q(1), q(1)}}), Error);
  EXPECT_THROW(GramLattice::validate({{q(1), q(0)}, {q(1)}}), Error);
  try {
    GramLattice::validate({{q(1), q(0)}, {q(1), q(1)}});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
  }
}

TEST(Inner, Examples) {
  EXPECT_EQ(identity(2).inner({q(1), q(0)}, {q(1), q(0)}), 1);
  EXPECT_EQ(a2().inner({q(1), q(0)}, {q(0), q(1)}), 1);
  EXPECT_EQ(a2().norm2({q(1), q(1)}), 6);
}

TEST(Inner, BilinearSymmetricPositive) {
  random::Engine rng(11);
  for (int k = 0; k < 50; ++k) {
    const GramLattice lat = random::lattice(rng, 1 + k % 4);
    const auto x = random::point(rng, lat.rank());
    const auto y = random::point(rng, lat.rank());
    const auto z = random::point(rng, lat.rank());
    const Rational c = random::signed_rational(rng);
    AmbientPoint xz = x;
    for (std::size_t i = 0; i < xz.size(); ++i) xz[i] = c * x[i] + z[i];
    EXPECT_EQ(lat.inner(x, y), lat.inner(y, x));
    EXPECT_EQ(lat.inner(xz, y), c * lat.inner(x, y) + lat.inner(z, y));
    if (std::any_of(x.begin(), x.end(), [](const Rational& v) { return v != 0; })) {
      EXPECT_GT(lat.norm2(x), 0);
    }
  }
}

TEST(ClosestVector, Examples) {
  EXPECT_EQ(closest_vector(identity(2), {q(2, 5), q(3, 5)}), (LatticeVector{0, 1}));
  EXPECT_EQ(closest_vector(identity(1), {q(1, 2)}), (LatticeVector{0}));
  EXPECT_EQ(closest_vectors(identity(1), {q(1, 2)}).size(), 2u);
  // (1/2, 1/2) is the midpoint of (1, 0) and (0, 1); both are at squared
  // distance 1/2, confirmed by the brute-force oracle.
  Rational best;
  const auto near = oracle::closest(a2().gram(), {q(1, 2), q(1, 2)}, &best);
  EXPECT_EQ(best, q(1, 2));
  EXPECT_EQ(distance2(a2(), {q(1, 2), q(1, 2)}), best);
  EXPECT_EQ(as_oracle(closest_vectors(a2(), {q(1, 2), q(1, 2)})), near);
  EXPECT_EQ(closest_vector(a2(), {q(1, 2), q(1, 2)}), (LatticeVector{0, 1}));
}

TEST(ClosestVector, MatchesBruteForceIncludingTies) {
  random::Engine rng(12);
  for (int k = 0; k < 120; ++k) {
    const GramLattice lat = random::lattice(rng, 1 + k % 4);
    AmbientPoint nu = random::point(rng, lat.rank(), 3, k % 3 == 0 ? 2 : 12);
    Rational best;
    const auto expected = oracle::closest(lat.gram(), nu, &best);
    EXPECT_EQ(as_oracle(closest_vectors(lat, nu)), expected);
    EXPECT_EQ(distance2(lat, nu), best);
    const LatticeVector cv = closest_vector(lat, nu);
    EXPECT_EQ(oracle::Vec(cv.begin(), cv.end()), expected.front());
  }
}

TEST(ClosestVector, Periodic) {
  random::Engine rng(13);
  for (int k = 0; k < 60; ++k) {
    const GramLattice lat = random::lattice(rng, 1 + k % 3);
    const auto nu = random::point(rng, lat.rank());
    const auto u = random::lattice_vector(rng, lat.rank(), 4);
    AmbientPoint shifted = nu;
    for (std::size_t i = 0; i < nu.size(); ++i) shifted[i] += static_cast<long>(u[i]);
    LatticeVector expected = closest_vector(lat, nu);
    for (std::size_t i = 0; i < u.size(); ++i) expected[i] += u[i];
    EXPECT_EQ(closest_vector(lat, shifted), expected);
  }
}

TEST(EnumerateBall, MatchesBruteForceCount) {
  const GramLattice lat = a2();
  const AmbientPoint c{q(1, 3), q(-1, 5)};
  const Rational r2 = q(9, 2);
  std::size_t expected = 0;
  std::vector<long> lo, hi;
  oracle::ball_box(oracle::inverse(lat.gram()), c, r2, lo, hi);
  oracle::box(lo, hi, [&](const oracle::Vec& u) {
    if (oracle::quad(lat.gram(), oracle::minus(c, u)) <= r2) ++expected;
  });
  EXPECT_EQ(enumerate_ball(lat, c, r2).size(), expected);
}

TEST(RelevantVectors, Examples) {
  EXPECT_EQ(relevant_vectors(identity(2)),
            (std::vector<LatticeVector>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}}));
  EXPECT_EQ(relevant_vectors(identity(3)).size(), 6u);
  EXPECT_EQ(relevant_vectors(GramLattice::validate({{q(7, 2)}})),
            (std::vector<LatticeVector>{{-1}, {1}}));
  EXPECT_EQ(relevant_vectors(a2()),
            (std::vector<LatticeVector>{{-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}}));
}

TEST(RelevantVectors, MatchBruteForceAndContainShortest) {
  random::Engine rng(14);
  for (int k = 0; k < 30; ++k) {
    const GramLattice lat = random::lattice(rng, 1 + k % 3);
    const auto rel = relevant_vectors(lat);
    EXPECT_EQ(as_oracle(rel), oracle::relevant(lat.gram()));
    for (const auto& v : rel) {
      LatticeVector neg = v;
      for (auto& c : neg) c = -c;
      EXPECT_TRUE(std::binary_search(rel.begin(), rel.end(), neg));
    }
    for (const auto& s : shortest_vectors(lat)) {
      EXPECT_TRUE(std::binary_search(rel.begin(), rel.end(), s));
    }
  }
}

TEST(Lattice, ScaledAndDirectSum) {
  const GramLattice s = a2().scaled(q(1, 2));
  EXPECT_EQ(s.gram()[0][0], 1);
  const GramLattice d = direct_sum(a2(), identity(1));
  EXPECT_EQ(d.rank(), 3u);
  EXPECT_EQ(d.gram()[2][2], 1);
  EXPECT_EQ(d.gram()[0][2], 0);
}
