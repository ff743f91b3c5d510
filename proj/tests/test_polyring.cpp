#include <gtest/gtest.h>

#include <random>

#include <fanres/poly_io.hpp>
#include <fanres/polyring.hpp>
#include <fanres/serialize.hpp>

using namespace fanres;

namespace {

Poly P(const std::string& s, std::size_t M = 5, std::size_t n = 1) { return parse_poly(s, M, n); }

Poly random_poly(std::mt19937_64& rng, std::size_t M, std::size_t n) {
  std::uniform_int_distribution<int> e(0, 2), c(-3, 3), len(0, 4);
  std::vector<Term> ts;
  for (int k = len(rng); k > 0; --k) {
    Term t{c(rng), Monomial(n), Monomial(M)};
    for (auto& x : t.p.e) x = e(rng);
    for (auto& x : t.y.e) x = e(rng);
    ts.push_back(t);
  }
  return Poly::from_terms(ts);
}

}  // namespace

TEST(Polyring, LexOrderComparesLastVariableFirst) {
  EXPECT_GT(lex_compare(Monomial::var(5, 4), Monomial::var(5, 0, 7)), 0);
  EXPECT_GT(lex_compare(P("Y1*Y5").terms()[0].y, P("Y4^3").terms()[0].y), 0);
}

TEST(Polyring, LeadingTermAndCoefficient) {
  const Poly g = P("Y1*Y5 - p^2*Y4");
  EXPECT_EQ(render(lt(g)), "Y1*Y5");
  EXPECT_TRUE(is_unit_one(lc(g)));
  const Poly h = P("p*Y3 + 2*p^2*Y3 - Y2");
  EXPECT_EQ(render(lc(h)), "2*p^2 + p");
  EXPECT_FALSE(is_signed_p_monomial(lc(h)));
}

TEST(Polyring, ArithmeticIsRingLike) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const Poly a = random_poly(rng, 3, 2), b = random_poly(rng, 3, 2), c = random_poly(rng, 3, 2);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Polyring, DivisionCertificate) {
  const std::vector<Poly> G{P("Y1*Y3 - Y2^2"), P("Y1*Y4 - p*Y2"), P("Y2*Y4 - p*Y3")};
  const Poly g = P("Y1*Y3*Y4 - p*Y2*Y3 + Y1*Y2");
  const DivisionResult r = divide(g, G);
  EXPECT_TRUE(check_division(g, G, r));
  EXPECT_TRUE(r.binomial_closure);
}

TEST(Polyring, DivisionRejectsNonMonicDivisor) {
  EXPECT_THROW(divide(P("Y1"), {P("p*Y1 - Y2")}), Error);
}

TEST(Polyring, ParseRenderRoundTrip) {
  for (const char* s : {"Y1*Y3 - Y2^2", "Y1*Y5 - p^2*Y4", "-3*p*Y2 + 7", "Y3*Y5 - Y4^3"}) EXPECT_EQ(render(P(s)), s);
  EXPECT_EQ(render(P("p1*p2*Y4 - Y1*Y7", 7, 2)), "-Y1*Y7 + p1*p2*Y4");
}

TEST(Polyring, ParseVectorLabels) {
  const std::vector<LatticeVec> H{{0, 1}, {1, 2}, {2, 3}, {1, 1}, {1, 0}};
  EXPECT_EQ(parse_poly("Y(0,1)*Y(1,0) - p^2*Y(1,1)", 5, 1, &H), P("Y1*Y5 - p^2*Y4"));
  RenderStyle st;
  st.vector_labels = &H;
  EXPECT_EQ(render(P("Y1*Y5"), st), "Y(0,1)*Y(1,0)");
}

TEST(Polyring, ParseErrors) {
  EXPECT_THROW(P("Y9"), Error);
  EXPECT_THROW(P("Y1 +"), Error);
  EXPECT_THROW(P("q"), Error);
  EXPECT_THROW(P(""), Error);
}

TEST(Polyring, SpecializeAndSubstitute) {
  const Poly g = P("Y1*Y7 - p1*p2*Y4", 7, 2);
  EXPECT_EQ(specialize(g, PValues{std::nullopt, 1}), P("Y1*Y7 - p1*Y4", 7, 2));
  EXPECT_EQ(specialize(g, PValues{3, 2}), P("Y1*Y7 - 6*Y4", 7, 2));
  const Poly shift = Poly::p_var(2, 2, 7) + Poly::constant(1, 2, 7);
  EXPECT_EQ(substitute_p(g, 1, shift), P("Y1*Y7 - p2^2*Y4 - p2*Y4", 7, 2));
}

TEST(Polyring, ZzDegree) {
  const std::vector<LatticeVec> H{{0, 1}, {1, 2}, {2, 3}, {1, 1}, {1, 0}};
  EXPECT_EQ(zz_degree(P("Y1*Y3 - Y2^2"), H), std::optional<LatticeVec>(LatticeVec{2, 4}));
  EXPECT_FALSE(zz_degree(P("Y1 - Y2"), H).has_value());
}

TEST(Polyring, JsonRoundTrip) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const Poly a = random_poly(rng, 4, 2);
    EXPECT_EQ(poly_from_json(poly_to_json(a), 4, 2), a);
  }
}

TEST(Polyring, CheckedArithmetic) {
  EXPECT_THROW(checked::mul(std::int64_t{1} << 62, 4), Error);
  EXPECT_EQ(checked::pow(3, 4), 81);
}
