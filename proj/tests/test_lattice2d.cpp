#include <gtest/gtest.h>

#include <limits>
#include <random>

#include <fanres/lattice2d.hpp>

using namespace fanres;

TEST(Lattice2d, DeterminantAndDot) {
  EXPECT_EQ(det2({1, 0}, {0, 1}), 1);
  EXPECT_EQ(det2({2, 3}, {1, 2}), 1);
  EXPECT_EQ(dot({2, 3}, {1, -1}), -1);
}

TEST(Lattice2d, Primitive) {
  EXPECT_TRUE(is_primitive({2, 3}));
  EXPECT_FALSE(is_primitive({4, 6}));
  EXPECT_EQ(primitive({4, 6}), (LatticeVec{2, 3}));
  EXPECT_EQ(primitive({0, -5}), (LatticeVec{0, -1}));
  EXPECT_THROW(primitive({0, 0}), Error);
}

TEST(Lattice2d, ClockwiseConvention) {
  EXPECT_TRUE(clockwise_before({0, 1}, {1, 0}));
  EXPECT_FALSE(clockwise_before({1, 0}, {0, 1}));
}

TEST(Lattice2d, BezoutComplementKnownValues) {
  EXPECT_EQ(bezout_complement({0, 1}), (LatticeVec{1, 0}));
  EXPECT_EQ(bezout_complement({1, 0}), (LatticeVec{0, -1}));
  EXPECT_EQ(bezout_complement({2, 3}), (LatticeVec{1, 1}));
  EXPECT_EQ(bezout_complement({1, 1}), (LatticeVec{1, 0}));
  EXPECT_THROW(bezout_complement({2, 4}), Error);
}

TEST(Lattice2d, BezoutComplementProperty) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> d(-60, 60);
  int seen = 0;
  while (seen < 500) {
    const LatticeVec w{d(rng), d(rng)};
    if (is_zero(w) || !is_primitive(w)) continue;
    ++seen;
    const LatticeVec u = bezout_complement(w);
    EXPECT_EQ(det2(u, w), 1) << w;
  }
}

TEST(Lattice2d, ExtGcd) {
  const ExtGcd g = ext_gcd(240, 46);
  EXPECT_EQ(g.g, 2);
  EXPECT_EQ(240 * g.s + 46 * g.t, 2);
}

TEST(Lattice2d, ConeCoordinates) {
  const ConeCoords c = cone_coordinates({1, 1}, {0, 1}, {2, 3});
  EXPECT_GT(c.den, 0);
  const LatticeVec lhs = c.lambda_num * LatticeVec{0, 1} + c.mu_num * LatticeVec{2, 3};
  EXPECT_EQ(lhs, (c.den * LatticeVec{1, 1}));
  EXPECT_TRUE(in_closed_cone({1, 2}, {0, 1}, {2, 3}));
  EXPECT_FALSE(in_closed_cone({1, 0}, {0, 1}, {2, 3}));
  EXPECT_TRUE(in_open_parallelogram({1, 2}, {0, 1}, {2, 3}));
  EXPECT_FALSE(in_open_parallelogram({2, 3}, {0, 1}, {2, 3}));
}

TEST(Lattice2d, CeilDiv) {
  EXPECT_EQ(ceil_div_pos(7, 2), 4);
  EXPECT_EQ(ceil_div_pos(-7, 2), -3);
  EXPECT_EQ(ceil_div_pos(6, 3), 2);
}

TEST(Lattice2d, OverflowIsReported) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
  try {
    det2({big, 0}, {0, 4});
    FAIL() << "expected overflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Overflow);
  }
}
