#include <gtest/gtest.h>

#include <fanres/poly_io.hpp>
#include <fanres/presentation.hpp>
#include <fanres/reference_examples.hpp>

using namespace fanres;

namespace {

std::vector<std::string> rendered(const Presentation& P) {
  std::vector<std::string> out;
  for (const Relation& r : P.relations) out.push_back(render(r.poly));
  return out;
}

}  // namespace

TEST(Presentation, B32Relations) {
  const auto [fan, fam] = intersection_fan(reference::b32_a, reference::b32_b);
  const Presentation P = presentation_ideal(fan, fam);
  ASSERT_EQ(P.M(), 5u);
  EXPECT_EQ(rendered(P), reference::phi0_relations());
  for (std::size_t k = 0; k < P.M(); ++k) EXPECT_EQ(P.generators[k].f[0], reference::phi0_images_f[k]) << k;
}

TEST(Presentation, ToritoRelationsAsSets) {
  const auto [fan, fam] = intersection_fan(reference::torito_a, reference::torito_b);
  const Presentation P = presentation_ideal(fan, fam);
  EXPECT_EQ(P.H, reference::torito_H);
  std::vector<std::string> want, got = rendered(P);
  for (const std::string& r : reference::torito_relations()) want.push_back(render(parse_poly(r, P.M(), P.n)));
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, want);
}

TEST(Presentation, GroebnerAndKernel) {
  for (const auto& [a, b] : std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>>{
           {{3}, {2}}, {{1, 3}, {3, 1}}, {{2, 3}, {3, 2}}, {{5, 1}, {2, 4}}}) {
    const auto [fan, fam] = intersection_fan(a, b);
    const Presentation P = presentation_ideal(fan, fam);
    EXPECT_TRUE(verify_groebner(P).ok()) << to_text(verify_groebner(P));
    EXPECT_TRUE(verify_relations(P, fan, fam).ok()) << to_text(verify_relations(P, fan, fam));
  }
}

TEST(Presentation, RelationCountIsAdjacentPairsExcluded) {
  const auto [fan, fam] = intersection_fan({5, 1}, {2, 4});
  const Presentation P = presentation_ideal(fan, fam);
  const std::size_t M = P.M();
  EXPECT_EQ(P.relations.size(), (M - 1) * (M - 2) / 2);
  for (const Relation& r : P.relations) EXPECT_GE(r.j, r.i + 2);
}

TEST(Presentation, Gorenstein) {
  const auto [fan, fam] = intersection_fan(reference::gorenstein_a, reference::gorenstein_a);
  const Presentation P = presentation_ideal(fan, fam);
  ASSERT_EQ(P.relations.size(), 1u);
  EXPECT_EQ(P.relations[0].poly, parse_poly(reference::gorenstein_relation, 3, 2));
}

TEST(Presentation, SpecializationFlagsNonMinimality) {
  const auto [fan, fam] = intersection_fan(reference::torito_a, reference::torito_b);
  const Presentation P = presentation_ideal(fan, fam);
  const MinimalityReport generic = check_minimal_generation(P, fam, fan);
  EXPECT_TRUE(generic.generators_minimal);
  const Presentation S = specialize(P, PValues{std::nullopt, 1});
  ASSERT_TRUE(S.specialization.has_value());
  const MinimalityReport m = check_minimal_generation(S, fam, fan);
  EXPECT_FALSE(m.generators_minimal && m.relations_minimal);
}

TEST(Presentation, DegenerateSupports) {
  const Fan line = Fan::make({{1, 0}, {-1, 0}}, SupportKind::Line);
  FanLinearFamily fam;
  fam.forms.push_back({LinearForm{1, 0}, LinearForm{-1, 0}});
  const Presentation P = presentation_ideal(line, fam);
  EXPECT_EQ(P.M(), 2u);
  ASSERT_EQ(P.relations.size(), 1u);
  EXPECT_EQ(render(P.relations[0].poly), "Y1*Y2 - p^2");
  const Fan half = Fan::make({{1, 0}}, SupportKind::HalfLine);
  FanLinearFamily f2;
  f2.forms.push_back({LinearForm{2, 0}});
  EXPECT_TRUE(presentation_ideal(half, f2).relations.empty());
}

TEST(Presentation, SpolyOfCoprimeLeadsReduces) {
  const auto [fan, fam] = intersection_fan({3}, {2});
  const Presentation P = presentation_ideal(fan, fam);
  const DivisionResult r = divide(spoly(P.relations[0].poly, P.relations[5].poly), P.polys());
  EXPECT_TRUE(r.remainder.is_zero());
}
