#include <gtest/gtest.h>

#include <fanres/poly_io.hpp>
#include <fanres/reference_examples.hpp>
#include <fanres/syzygy.hpp>

using namespace fanres;

TEST(Syzygy, AdmissibleCountMatchesEnumeration) {
  for (std::size_t M = 3; M <= 10; ++M)
    for (std::size_t u = 0; u + 3 <= M; ++u) EXPECT_EQ(enumerate_admissible(M, u).size(), admissible_count(M, u)) << M << " " << u;
}

TEST(Syzygy, WeightedBinomialIdentity) {
  for (std::size_t N = 1; N <= 20; ++N)
    for (std::size_t u = 0; u < N; ++u) EXPECT_EQ(weighted_binomial_sum(N, u), (u + 1) * binomial(N + 1, u + 2));
}

TEST(Syzygy, AdmissibleTuplesForFive) {
  const auto t = enumerate_admissible(5, 0);
  std::vector<std::string> s;
  for (const auto& x : t) s.push_back(to_string(x));
  EXPECT_EQ(s, (std::vector<std::string>{"1,3", "1,4", "1,5", "2,4", "2,5", "3,5"}));
  EXPECT_EQ(enumerate_admissible(5, 1).size(), 8u);
  EXPECT_EQ(enumerate_admissible(5, 2).size(), 3u);
}

TEST(Syzygy, ModElemArithmetic) {
  const Poly y1 = parse_poly("Y1", 3, 1), y2 = parse_poly("Y2 - p", 3, 1);
  ModElem a = ModElem::basis(0, y1);
  a.add(2, y2);
  ModElem b = a;
  b.add_scaled(a, Poly::constant(-1, 1, 3));
  EXPECT_TRUE(b.is_zero());
  EXPECT_EQ(a.coord(2), y2);
  EXPECT_TRUE(a.coord(1).is_zero());
}

TEST(Syzygy, B32TowerStagesAndGroebner) {
  const auto [fan, fam] = intersection_fan(reference::b32_a, reference::b32_b);
  const SyzygyTower T = build_tower(presentation_ideal(fan, fam));
  ASSERT_EQ(T.top(), 3u);
  EXPECT_EQ(T.families[2].size(), 8u);
  EXPECT_EQ(T.families[3].size(), 3u);
  for (std::size_t s = 1; s <= T.top(); ++s) EXPECT_TRUE(verify_stage_groebner(T, s).ok()) << s;
  for (std::size_t s = 2; s <= T.top(); ++s)
    for (const ModElem& e : T.families[s]) EXPECT_TRUE(apply_previous(T, s, e).is_zero());
}

TEST(Syzygy, ToritoTowerShape) {
  const auto [fan, fam] = intersection_fan(reference::torito_a, reference::torito_b);
  const SyzygyTower T = build_tower(presentation_ideal(fan, fam));
  std::vector<std::size_t> sizes;
  for (std::size_t s = 1; s <= T.top(); ++s) sizes.push_back(T.families[s].size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{15, 40, 45, 24, 5}));
  EXPECT_TRUE(T.complete);
}

TEST(Syzygy, TupleIndexLookup) {
  const auto [fan, fam] = intersection_fan(reference::b32_a, reference::b32_b);
  const SyzygyTower T = build_tower(presentation_ideal(fan, fam));
  EXPECT_EQ(T.tuples[1][T.index_of(1, {2, 5})], (BasisTuple{2, 5}));
}
