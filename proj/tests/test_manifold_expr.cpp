#include "morseflow/manifold_expr.hpp"
#include "random_expr.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace morseflow;

namespace {

ManifoldExpr S(int k) { return ManifoldExpr::sphere(k); }
ManifoldExpr P(ManifoldExpr a, ManifoldExpr b) { return ManifoldExpr::product(std::move(a), std::move(b)); }

} // namespace

TEST(ParseManifold, SingleAtom) {
  const auto e = parse_manifold("S4");
  EXPECT_EQ(e.kind(), ManifoldExpr::Kind::Sphere);
  EXPECT_EQ(e, S(4));
}

TEST(ParseManifold, ProductBindsTighterThanConnectedSum) {
  const auto e = parse_manifold("S3 x S1 # S3 x S1");
  ASSERT_EQ(e.kind(), ManifoldExpr::Kind::ConnectedSum);
  ASSERT_EQ(e.summands().size(), 2u);
  EXPECT_EQ(e.summands()[0], P(S(3), S(1)));
  EXPECT_EQ(e.summands()[1], P(S(3), S(1)));
}

TEST(ParseManifold, DimensionMismatch) {
  EXPECT_THROW(parse_manifold("S2 # S3"), DimensionError);
}

TEST(ParseManifold, RejectsS0AndBadSng) {
  EXPECT_THROW(parse_manifold("S0"), DomainError);
  EXPECT_THROW(parse_manifold("Sng(1,1)"), DomainError);
  EXPECT_THROW(parse_manifold("Sng(4,-1)"), DomainError);
  EXPECT_THROW(parse_manifold("S1 # S1"), DimensionError);
}

TEST(ParseManifold, SyntaxErrorsReportPosition) {
  try {
    parse_manifold("S3 x ? S1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  try {
    parse_manifold("(S2 x S1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 8u);
  }
  EXPECT_THROW(parse_manifold(""), ParseError);
  EXPECT_THROW(parse_manifold("S3 S1"), ParseError);
  EXPECT_THROW(parse_manifold("Sng(4 2)"), ParseError);
}

TEST(ParseManifold, WhitespaceInsignificant) {
  EXPECT_EQ(parse_manifold("  S 3x S1#S3   x S1 "), parse_manifold("S3 x S1 # S3 x S1"));
  EXPECT_EQ(parse_manifold("Sng( 4 , 2 )"), s_ng(4, 2));
}

TEST(ParseManifold, ProductIsLeftAssociated) {
  EXPECT_EQ(parse_manifold("S1 x S2 x S3"), P(P(S(1), S(2)), S(3)));
  EXPECT_EQ(parse_manifold("S1 x (S2 x S3)"), P(S(1), P(S(2), S(3))));
}

TEST(ParseManifold, ConnectedSumFlattens) {
  const auto e = parse_manifold("(S4 # Sng(4,2)) # S4");
  ASSERT_EQ(e.kind(), ManifoldExpr::Kind::ConnectedSum);
  EXPECT_EQ(e.summands().size(), 4u);
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension(parse_manifold("S4")), 4);
  EXPECT_EQ(dimension(parse_manifold("S3 x S1")), 4);
  EXPECT_EQ(dimension(parse_manifold("Sng(5,3)")), 5);
}

TEST(SNG, CanonicalForms) {
  EXPECT_EQ(s_ng(4, 0), S(4));
  EXPECT_EQ(s_ng(4, 1), P(S(3), S(1)));
  EXPECT_EQ(s_ng(4, 2), ManifoldExpr::connected_sum({P(S(3), S(1)), P(S(3), S(1))}));
  EXPECT_THROW(s_ng(1, 1), DomainError);
  EXPECT_THROW(s_ng(3, -1), DomainError);
}

TEST(SNG, DimensionIsN) {
  for (int n = 2; n <= 10; ++n)
    for (int g = 0; g <= 5; ++g) EXPECT_EQ(dimension(s_ng(n, g)), n) << n << "," << g;
}

TEST(ManifoldExpr, MixedConnectedSumIsUnconstructible) {
  EXPECT_THROW(ManifoldExpr::connected_sum({S(2), S(3)}), DimensionError);
  EXPECT_THROW(ManifoldExpr::connected_sum({S(2), P(S(1), S(2))}), DimensionError);
  EXPECT_THROW(ManifoldExpr::connected_sum({S(2)}), DomainError);
  EXPECT_THROW(ManifoldExpr::sphere(0), DomainError);
}

TEST(Render, RoundTripsRandomExpressions) {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto e = test_support::random_expr(rng);
    const auto text = render(e);
    EXPECT_EQ(parse_manifold(text), e) << text;
  }
}

TEST(Render, ParenthesizesWhereNeeded) {
  EXPECT_EQ(render(P(S(1), P(S(2), S(3)))), "S1 x (S2 x S3)");
  EXPECT_EQ(render(P(s_ng(2, 2), S(1))), "(S1 x S1 # S1 x S1) x S1");
}
