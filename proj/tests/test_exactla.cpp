#include <gtest/gtest.h>

#include "support.hpp"

using namespace coradical;
using testing_support::random_low_rank;
using testing_support::random_matrix;
using testing_support::rank_by_minors;

TEST(Scalar, RationalCanonicalForm) {
  EXPECT_EQ(Rational::parse("3/6").str(), "1/2");
  EXPECT_EQ(Rational::parse("-4/2").str(), "-2");
  EXPECT_EQ((Rational(1) / Rational(3) + Rational::parse("2/3")).str(), "1");
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("x"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Scalar, ModPFieldAxioms) {
  ModP::Scope scope(7);
  for (int a = 1; a < 7; ++a) EXPECT_EQ(ModP(a) * ModP(a).inv(), ModP(1));
  EXPECT_EQ(ModP::parse("-1").str(), "6");
  EXPECT_EQ(ModP::parse("3 mod 7"), ModP(3));
  EXPECT_EQ(ModP::parse("1/2"), ModP(4));
  EXPECT_THROW(ModP::parse("3 mod 5"), ParseError);
  EXPECT_THROW(ModP::parse("1/7"), ParseError);
  EXPECT_THROW(ModP::parse("abc"), ParseError);
}

TEST(Scalar, ModPNeedsScope) { EXPECT_THROW(ModP::modulus(), Error); }

TEST(Scalar, FieldSpec) {
  EXPECT_EQ(FieldSpec::parse("q").str(), "q");
  EXPECT_EQ(FieldSpec::parse("fp:11").characteristic, 11u);
  EXPECT_THROW(FieldSpec::parse("fp:12"), ParseError);
  EXPECT_THROW(FieldSpec::parse("fp:"), ParseError);
  EXPECT_THROW(FieldSpec::parse("r"), ParseError);
  EXPECT_THROW(ModP::Scope(9), PreconditionError);
}

TEST(ExactLA, RankAgreesWithMinors) {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 5;
    const auto m = t % 3 == 0 ? random_low_rank<Rational>(rng, r, c, 1 + t % 2) : random_matrix<Rational>(rng, r, c);
    EXPECT_EQ(rank(m), rank_by_minors(m)) << m.str();
  }
}

TEST(ExactLA, RankAgreesWithMinorsModP) {
  ModP::Scope scope(5);
  std::mt19937 rng(12);
  for (int t = 0; t < 60; ++t) {
    const auto m = random_matrix<ModP>(rng, 1 + t % 4, 1 + (t / 4) % 5);
    EXPECT_EQ(rank(m), rank_by_minors(m));
  }
}

TEST(ExactLA, RankNullity) {
  std::mt19937 rng(13);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = 2 + t % 5, c = 2 + t % 7;
    const auto m = random_low_rank<Rational>(rng, r, c, 1 + t % 3);
    const auto ker = kernel_basis(m);
    EXPECT_EQ(rank(m) + ker.cols(), c);
    EXPECT_TRUE((m * ker).is_zero());
    EXPECT_EQ(rank(ker), ker.cols());
    EXPECT_EQ(image_basis(m).cols(), rank(m));
    EXPECT_EQ(rank(m.transpose()), rank(m));
  }
}

TEST(ExactLA, SolveFindsPreimages) {
  std::mt19937 rng(14);
  for (int t = 0; t < 40; ++t) {
    const auto m = random_low_rank<Rational>(rng, 5, 4, 2);
    const auto x = random_matrix<Rational>(rng, 4, 1).col(0);
    const auto b = m * x;
    const auto y = solve(m, b);
    ASSERT_TRUE(y.has_value());
    EXPECT_EQ(m * *y, b);
  }
  Matrix<Rational> z(2, 2);
  z(0, 0) = Rational(1);
  EXPECT_FALSE(solve(z, Vec<Rational>{Rational(0), Rational(1)}).has_value());
}

TEST(ExactLA, KronMixedProduct) {
  std::mt19937 rng(15);
  const auto a = random_matrix<Rational>(rng, 2, 3), b = random_matrix<Rational>(rng, 3, 2);
  const auto c = random_matrix<Rational>(rng, 3, 2), d = random_matrix<Rational>(rng, 2, 2);
  EXPECT_EQ(kron(a, b) * kron(c, d), kron(Matrix<Rational>(a * c), Matrix<Rational>(b * d)));
}

TEST(ExactLA, SpanOperations) {
  std::mt19937 rng(16);
  for (int t = 0; t < 30; ++t) {
    const auto a = random_low_rank<Rational>(rng, 6, 3, 3), b = random_low_rank<Rational>(rng, 6, 3, 3);
    const auto s = span_sum(a, b), i = span_intersection(a, b);
    EXPECT_EQ(s.cols() + i.cols(), rank(a) + rank(b));
    EXPECT_TRUE(span_contains(s, a));
    EXPECT_TRUE(span_contains(a, i));
    EXPECT_TRUE(span_contains(b, i));
    EXPECT_TRUE(span_equal(canonical_basis(a), a));
    const auto co = coordinates(image_basis(a), a);
    EXPECT_EQ(image_basis(a) * co, a);
  }
}

TEST(ExactLA, ReducerSplitsQuotient) {
  std::mt19937 rng(17);
  const auto sub = random_low_rank<Rational>(rng, 6, 2, 2);
  Reducer<Rational> red(6, image_basis(sub));
  EXPECT_EQ(red.quotient_dim(), 6 - rank(sub));
  for (const auto& v : sub.columns()) {
    for (const auto& x : red.reduce(v)) EXPECT_TRUE(x.is_zero());
  }
  const auto lifts = red.lift_basis();
  EXPECT_EQ(rank(hcat(sub, lifts)), 6u);
}
