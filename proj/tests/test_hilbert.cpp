#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <fanres/hilbert.hpp>

using namespace fanres;

namespace {

std::vector<LatticeVec> sorted(std::vector<LatticeVec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Hilbert, ReferenceCones) {
  EXPECT_EQ(sorted(hilbert_basis({0, 1}, {2, 3}).elements), sorted({{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(sorted(hilbert_basis({1, 0}, {2, 3}).elements), sorted({{1, 0}, {1, 1}, {2, 3}}));
}

TEST(Hilbert, ClockwiseAndUnimodular) {
  const HilbertBasis h = hilbert_basis({1, 0}, {1, 5});
  ASSERT_GE(h.size(), 2u);
  for (std::size_t k = 0; k + 1 < h.size(); ++k) EXPECT_EQ(det2(h.elements[k + 1], h.elements[k]), 1);
  EXPECT_EQ(h.ray_first(), (LatticeVec{1, 5}));
  EXPECT_EQ(h.ray_last(), (LatticeVec{1, 0}));
}

TEST(Hilbert, RayOrderDoesNotMatter) {
  EXPECT_EQ(hilbert_basis({2, 3}, {0, 1}).elements, hilbert_basis({0, 1}, {2, 3}).elements);
}

TEST(Hilbert, SmoothConeIsItsRays) { EXPECT_EQ(hilbert_basis({0, 1}, {1, 0}).size(), 2u); }

TEST(Hilbert, NonPrimitiveRaysArePrimitivized) {
  EXPECT_EQ(hilbert_basis({0, 3}, {4, 6}).elements, hilbert_basis({0, 1}, {2, 3}).elements);
}

TEST(Hilbert, RejectsDegenerateInput) {
  EXPECT_THROW(hilbert_basis({1, 1}, {2, 2}), Error);
  EXPECT_THROW(hilbert_basis({1, 0}, {-1, 0}), Error);
  EXPECT_THROW(hilbert_basis({0, 0}, {1, 0}), Error);
}

TEST(Hilbert, ValidateReportsAllChecks) {
  const ValidationReport r = validate_basis(hilbert_basis({0, 1}, {4, 3}));
  EXPECT_TRUE(r.ok()) << to_text(r);
  for (const char* name : {"rays primitive", "consecutive determinants", "decreasing alpha-coordinates", "open parallelogram containment",
                           "minimal generation", "functional bound", "lambda+mu bound"})
    EXPECT_NE(r.find(name), nullptr) << name;
}

TEST(Hilbert, ValidateCatchesBrokenBasis) {
  HilbertBasis h = hilbert_basis({0, 1}, {2, 3});
  h.elements.insert(h.elements.begin() + 1, LatticeVec{2, 4});
  EXPECT_FALSE(validate_basis(h).ok());
}

TEST(Hilbert, MatchesBruteForceOnRandomCones) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> d(-25, 25);
  int done = 0;
  while (done < 120) {
    const LatticeVec a{d(rng), d(rng)}, b{d(rng), d(rng)};
    if (is_zero(a) || is_zero(b) || det2(a, b) == 0) continue;
    ++done;
    const HilbertBasis h = hilbert_basis(a, b);
    EXPECT_EQ(h.elements, brute_force_hilbert(a, b).elements) << a << " " << b;
    EXPECT_TRUE(validate_basis(h).ok()) << a << " " << b;
  }
}

TEST(Hilbert, BruteForceBudget) {
  BruteForceOptions opt;
  opt.max_points = 10;
  EXPECT_THROW(brute_force_hilbert({0, 1}, {50, 1}, opt), Error);
}
