#include <gtest/gtest.h>

#include "support.hpp"

using namespace coradical;

namespace {

std::vector<CorpusItem<Rational>> small_items() {
  std::vector<CorpusItem<Rational>> out;
  for (auto& item : standard_corpus<Rational>(false))
    if (item.coalgebra->dim() <= 6) out.push_back(std::move(item));
  return out;
}

}  // namespace

TEST(MatrixCoefficients, FormulasAgreeAndIntertwine) {
  for (const auto& item : small_items()) {
    for (const auto& s : simple_comodules(item.coalgebra)) EXPECT_NO_THROW(matrix_coefficients(s.rep)) << item.name;
    EXPECT_NO_THROW(matrix_coefficients(regular_comodule(item.coalgebra, Side::right))) << item.name;
  }
}

TEST(MatrixCoefficients, RegularImageIsEverything) {
  // V = C: the counit embedding shows C lies in im c_C
  for (const auto& item : small_items()) {
    const auto reg = regular_comodule(item.coalgebra, Side::right);
    EXPECT_EQ(image_c(reg).cols(), item.coalgebra->dim()) << item.name;
  }
}

TEST(MatrixCoefficients, SimpleImageDimension) {
  // im c_L = L* (x) L for a simple L over a split field
  for (const auto& item : small_items())
    for (const auto& s : simple_comodules(item.coalgebra)) {
      const std::size_t d = s.rep.dim();
      EXPECT_EQ(image_c(s.rep).cols(), d * d) << item.name;
    }
}

TEST(MatrixCoefficients, CounitEmbeddingOnSubcomodules) {
  for (const auto& item : small_items()) {
    const auto reg = regular_comodule(item.coalgebra, Side::right);
    for (const auto& level : socle_series(reg).chain)
      if (level.cols()) EXPECT_NO_THROW(counit_embedding(item.coalgebra, level)) << item.name;
  }
}

TEST(MatrixCoefficients, KerPerpOnSocleLevels) {
  for (const auto& item : small_items()) {
    const auto reg = regular_comodule(item.coalgebra, Side::right);
    for (const auto& level : socle_series(reg).chain) EXPECT_TRUE(check_ker_perp(reg, level)) << item.name;
  }
}

TEST(MatrixCoefficients, KerPerpRejectsNonSubcomodules) {
  const auto c = gen_divided_power<Rational>(2).coalgebra;
  const auto reg = regular_comodule(c, Side::right);
  Matrix<Rational> top(3, 1);
  top(2, 0) = Rational(1);
  EXPECT_THROW(check_ker_perp(reg, top), PreconditionError);
}

TEST(MatrixCoefficients, SquareCommutesForEndomorphisms) {
  const auto c = generate_path<Rational>("a3", 2).coalgebra;
  const auto reg = regular_comodule(c, Side::right);
  const auto ends = hom_space(reg, reg);
  ASSERT_FALSE(ends.empty());
  for (const auto& f : ends) EXPECT_TRUE(matrix_coeff_square(reg, reg, f));
  Matrix<Rational> junk(reg.dim(), reg.dim());
  junk(0, reg.dim() - 1) = Rational(1);
  if (!is_comodule_map(reg, reg, junk)) EXPECT_THROW(matrix_coeff_square(reg, reg, junk), PreconditionError);
}

TEST(MatrixCoefficients, ImageSumOverDirectSum) {
  const auto c = generate_path<Rational>("a2", 1).coalgebra;
  const auto simples = simple_comodules(c);
  const auto v = direct_sum(simples[0].rep, simples[1].rep);
  Matrix<Rational> w1(2, 1), w2(2, 1);
  w1(0, 0) = Rational(1);
  w2(1, 0) = Rational(1);
  EXPECT_TRUE(check_image_sum(v, w1, w2));
  EXPECT_THROW(check_image_sum(v, w1, w1), PreconditionError);
}

TEST(MatrixCoefficients, LoewyLengthOfImage) {
  for (const auto& item : small_items()) {
    const auto reg = regular_comodule(item.coalgebra, Side::right);
    const auto [a, b] = loewy_length_image(reg);
    EXPECT_EQ(a, b) << item.name;
  }
}

TEST(MatrixCoefficients, RestrictedInjectivityOnEnvelopes) {
  for (const auto& item : small_items()) {
    const auto an = analyze(item.coalgebra);
    for (const auto& env : an.inj.envelope) EXPECT_TRUE(restricted_injectivity_check(env)) << item.name;
  }
  const auto c = generate_path<Rational>("a2", 1).coalgebra;
  EXPECT_THROW(restricted_injectivity_check(regular_comodule(c, Side::right)), PreconditionError);
}
