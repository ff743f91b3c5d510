#include <gtest/gtest.h>

#include <fanres/reference_examples.hpp>
#include <fanres/resolution.hpp>

using namespace fanres;

namespace {

ChainComplex resolve_ab(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  const auto [fan, fam] = intersection_fan(a, b);
  return resolve(fan, fam);
}

}  // namespace

TEST(Resolution, B32BettiAndChecks) {
  const ChainComplex C = resolve_ab(reference::b32_a, reference::b32_b);
  EXPECT_EQ(C.ranks(), (std::vector<std::size_t>{1, 6, 8, 3}));
  EXPECT_EQ(betti(C).total, betti_formula(5));
  EXPECT_TRUE(verify_complex(C).ok()) << to_text(verify_complex(C));
  const RankCertificate rc = verify_ranks(C, 5, 1);
  EXPECT_TRUE(rc.report.ok()) << to_text(rc.report);
  EXPECT_EQ(rc.max_ranks, (std::vector<std::size_t>{1, 5, 3}));
}

TEST(Resolution, BettiFormulaSweep) {
  for (std::int64_t a1 = 1; a1 <= 3; ++a1)
    for (std::int64_t b1 = 1; b1 <= 3; ++b1)
      for (std::int64_t a2 = 1; a2 <= 2; ++a2) {
        const auto [fan, fam] = intersection_fan({a1, a2}, {b1, 3});
        if (!is_strict(fan, fam).all_strict()) continue;
        const ChainComplex C = resolve(fan, fam);
        EXPECT_EQ(betti(C).total, betti_formula(C.M)) << a1 << a2 << b1;
        EXPECT_TRUE(verify_complex(C).ok());
      }
}

TEST(Resolution, ModularAndExactRanksAgree) {
  const ChainComplex C = resolve_ab(reference::torito_a, reference::torito_b);
  const RankCertificate e = verify_ranks(C, 2, 3, 10000, RankMethod::Exact);
  const RankCertificate m = verify_ranks(C, 2, 3, 10000, RankMethod::Modular);
  EXPECT_EQ(e.trial_ranks, m.trial_ranks);
  EXPECT_TRUE(e.report.ok());
  EXPECT_EQ(e.max_ranks[0], 1u);
  EXPECT_EQ(e.max_ranks[1], 14u);
}

TEST(Resolution, GradedBettiSumsToTotal) {
  const ChainComplex C = resolve_ab({2, 1}, {1, 3});
  const BettiTable b = betti(C);
  for (std::size_t s = 0; s < b.total.size(); ++s) {
    std::size_t sum = 0;
    for (const auto& [d, k] : b.graded[s]) sum += k;
    EXPECT_EQ(sum, b.total[s]);
  }
  EXPECT_EQ(b.label, "minimal graded Betti numbers");
}

TEST(Resolution, SpecializedComplexIsLabelledNonMinimal) {
  const auto [fan, fam] = intersection_fan(reference::torito_a, reference::torito_b);
  const ChainComplex C = resolve(specialize(presentation_ideal(fan, fam), PValues{std::nullopt, 1}));
  EXPECT_TRUE(verify_complex(C).passed("composition zero"));
  EXPECT_FALSE(verify_complex(C).passed("minimality (no constant entries)"));
  EXPECT_EQ(betti(C).label, "non-minimal ranks");
}

TEST(Resolution, DegenerateLengths) {
  const Fan half = Fan::make({{1, 0}}, SupportKind::HalfLine);
  FanLinearFamily f;
  f.forms.push_back({LinearForm{1, 0}});
  EXPECT_EQ(resolve(half, f).length(), 0u);
  const Fan line = Fan::make({{1, 0}, {-1, 0}}, SupportKind::Line);
  FanLinearFamily g;
  g.forms.push_back({LinearForm{1, 0}, LinearForm{-1, 0}});
  const ChainComplex C = resolve(line, g);
  EXPECT_EQ(C.length(), 1u);
  EXPECT_TRUE(verify_complex(C).passed("composition zero"));
}

TEST(Resolution, JsonRoundTrip) {
  const ChainComplex C = resolve_ab(reference::b32_a, reference::b32_b);
  const json j = complex_to_json(C);
  EXPECT_EQ(j["schema"], kComplexSchema);
  const ChainComplex D = complex_from_json(j);
  EXPECT_EQ(complex_to_json(D), j);
}

TEST(Resolution, ExportFormats) {
  const ChainComplex C = resolve_ab(reference::b32_a, reference::b32_b);
  EXPECT_NE(export_complex(C, "text").find("generators:"), std::string::npos);
  const std::string m2 = export_complex(C, "m2");
  EXPECT_NE(m2.find("res"), std::string::npos);
  EXPECT_THROW(export_complex(C, "latex"), Error);
}
