#include <gtest/gtest.h>

#include "support.hpp"

using namespace coradical;

namespace {

void expect_group_axioms(const Group& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    EXPECT_EQ(g.mul(g.identity(), a), a);
    EXPECT_EQ(g.mul(a, g.identity()), a);
    EXPECT_EQ(g.mul(a, g.inv(a)), g.identity());
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) EXPECT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
  }
}

GradedSpace s3_space() {
  auto g = Group::symmetric3();
  return GradedSpace(g, {0, 1, 3, 5, 2});
}

}  // namespace

TEST(Group, Axioms) {
  for (int n = 1; n <= 5; ++n) expect_group_axioms(*Group::cyclic(n));
  expect_group_axioms(*Group::symmetric3());
}

TEST(Group, SymmetricThreeIsNonabelian) {
  const auto g = Group::symmetric3();
  bool commutes = true;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) commutes = commutes && g->mul(a, b) == g->mul(b, a);
  EXPECT_FALSE(commutes);
}

TEST(Group, RejectsBadTables) {
  EXPECT_THROW(Group({"e", "g"}, {{0, 1}, {1, 1}}), PreconditionError);
  EXPECT_THROW(Group({"e", "g"}, {{0, 1}}), PreconditionError);
  EXPECT_THROW(Group({"a", "b", "c"}, {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), PreconditionError);
  EXPECT_THROW(Group::cyclic(2)->index_of("h"), ParseError);
}

TEST(Graded, TensorAndDualDegrees) {
  const auto v = s3_space();
  const auto& g = *v.group;
  const auto t = tensor(v, dual(v));
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) EXPECT_EQ(t.deg[i * v.dim() + j], g.mul(v.deg[i], g.inv(v.deg[j])));
  EXPECT_EQ(dual(dual(v)), v);
}

TEST(Graded, Zigzag) {
  const auto v = s3_space();
  const std::size_t m = v.dim();
  const auto ev = evaluation<Rational>(v).matrix();
  const auto coev = coevaluation<Rational>(v).matrix();
  const auto id = Matrix<Rational>::identity(m);
  EXPECT_EQ(kron(id, ev) * kron(coev, id), id);
  EXPECT_EQ(kron(ev, id) * kron(id, coev), id);
}

TEST(Graded, MapsPreserveDegree) {
  const auto v = s3_space();
  Matrix<Rational> bad(v.dim(), v.dim());
  bad(0, 1) = Rational(1);
  EXPECT_THROW(GradedMap<Rational>(v, v, bad), PreconditionError);
  Matrix<Rational> good(v.dim(), v.dim());
  good(2, 2) = Rational(5);
  EXPECT_NO_THROW(GradedMap<Rational>(v, v, good));
}

TEST(Graded, PicardTwistsCompose) {
  const auto v = s3_space();
  const auto& g = *v.group;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      EXPECT_EQ(picard_twist(a, picard_twist(b, v)), picard_twist(g.mul(a, b), v));
      EXPECT_EQ(picard_twist_right(picard_twist_right(v, a), b), picard_twist_right(v, g.mul(a, b)));
    }
  bool differ = false;
  for (int a = 0; a < 6; ++a) differ = differ || picard_twist(a, v) != picard_twist_right(v, a);
  EXPECT_TRUE(differ);
}

TEST(Graded, PerpIsHomogeneousAnnihilator) {
  const auto v = s3_space();
  Matrix<Rational> incl(v.dim(), 2);
  incl(1, 0) = Rational(1);
  incl(3, 1) = Rational(2);
  const auto w = GradedMap<Rational>(GradedSpace(v.group, {1, 5}), v, incl);
  const auto p = perp(w);
  EXPECT_EQ(p.source().dim(), 3u);
  EXPECT_TRUE((incl.transpose() * p.matrix()).is_zero());
}

TEST(Graded, HomogeneousBasisSplitsComponents) {
  const auto v = s3_space();
  Matrix<Rational> x(v.dim(), 1);
  x(0, 0) = Rational(1);
  x(4, 0) = Rational(3);
  const auto h = homogeneous_basis(v, x);
  EXPECT_EQ(h.cols(), 2u);
  const auto deg = degrees_of_basis(v, h);
  EXPECT_EQ(deg, (std::vector<int>{0, 2}));
  EXPECT_THROW(homogeneous_degree(v, x.col(0)), VerificationError);
}
