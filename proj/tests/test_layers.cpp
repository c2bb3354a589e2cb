#include <gtest/gtest.h>

#include "support.hpp"

using namespace coradical;

namespace {

std::size_t index_of(const Analysis<Rational>& an, const std::string& label) {
  for (std::size_t i = 0; i < an.st.simples.size(); ++i)
    if (an.st.simples[i].label == label) return i;
  throw std::runtime_error("no simple " + label);
}

std::vector<TableEntry> layer_entries(const MultiplicityTable& t, std::size_t layer) {
  std::vector<TableEntry> out;
  for (const auto& e : t.entries)
    if (e.layer == layer) out.push_back(e);
  return out;
}

}  // namespace

TEST(Layers, MatrixDualSingleRow) {
  const auto an = analyze(gen_matrix_dual<Rational>(2).coalgebra);
  ASSERT_TRUE(an.theorem_instance());
  ASSERT_EQ(an.lhs.entries.size(), 1u);
  EXPECT_EQ(an.lhs.entries[0], (TableEntry{1, 0, 0, 1}));
  EXPECT_EQ(an.lhs, an.rhs);
}

TEST(Layers, DividedPowerThreeRows) {
  const auto an = analyze(gen_divided_power<Rational>(2).coalgebra);
  EXPECT_EQ(an.coradical.dims(), (std::vector<std::size_t>{0, 1, 2, 3}));
  ASSERT_EQ(an.lhs.entries.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(an.lhs.entries[i], (TableEntry{i + 1, 0, 0, 1}));
  EXPECT_EQ(an.lhs, an.rhs);
}

TEST(Layers, SuperDualTable) {
  const auto an = analyze(gen_super_dual<Rational>().coalgebra);
  ASSERT_TRUE(an.c1.ok);
  ASSERT_TRUE(an.c2.ok);
  const auto even = index_of(an, "L0"), odd = index_of(an, "L1");
  EXPECT_EQ(an.st.simples[even].rep.space.deg, std::vector<int>{0});
  EXPECT_EQ(an.st.simples[odd].rep.space.deg, std::vector<int>{1});
  EXPECT_EQ(an.orbits.reps.size(), 1u);
  EXPECT_EQ(an.lhs.value(1, even, even), 1u);
  EXPECT_EQ(an.lhs.value(1, even, odd), 0u);
  EXPECT_EQ(an.lhs.value(2, even, even), 0u);
  EXPECT_EQ(an.lhs.value(2, even, odd), 1u);
  EXPECT_EQ(an.lhs, an.rhs);
  EXPECT_TRUE(verify_main_theorem(an).ok);
}

TEST(Layers, PathA2TaftWilson) {
  const auto an = analyze(generate_path<Rational>("a2", 1).coalgebra);
  const auto second = layer_entries(an.lhs, 2);
  ASSERT_EQ(second.size(), 1u);
  EXPECT_EQ(second[0].value, 1u);
  EXPECT_NE(second[0].alpha, second[0].lprime);
  const auto tw = verify_taft_wilson(an);
  EXPECT_TRUE(tw.ok);
  EXPECT_TRUE(tw.matches_ext_lprime_l);
}

TEST(Layers, KroneckerEntryIsTwo) {
  const auto an = analyze(generate_path<Rational>("kronecker", 1).coalgebra);
  const auto second = layer_entries(an.lhs, 2);
  ASSERT_EQ(second.size(), 1u);
  EXPECT_EQ(second[0].value, 2u);
  const auto tw = verify_taft_wilson(an);
  EXPECT_TRUE(tw.ok);
  EXPECT_TRUE(tw.matches_ext_lprime_l);
  EXPECT_FALSE(tw.matches_ext_l_lprime);
  EXPECT_EQ(tw.order, "Ext1(L',L)");
}

TEST(Layers, CosemisimpleHasNoSecondLayer) {
  for (const auto& item : {gen_matrix_dual<Rational>(3), gen_group_like<Rational>(2, 2)}) {
    const auto an = analyze(item.coalgebra);
    EXPECT_TRUE(layer_entries(an.lhs, 2).empty()) << item.name;
    EXPECT_TRUE(layer_entries(an.rhs, 2).empty()) << item.name;
    const auto tw = verify_taft_wilson(an);
    EXPECT_EQ(tw.order, "both") << item.name;
  }
}

TEST(Layers, C1FailureIsDetected) {
  const auto an = analyze(gen_group_dual<Rational>(2).coalgebra);
  EXPECT_FALSE(an.c1.ok);
  ASSERT_FALSE(an.c1.witnesses.empty());
  EXPECT_NE(an.c1.witnesses[0].find("twist by g"), std::string::npos);
  EXPECT_FALSE(an.theorem_instance());
  EXPECT_THROW(verify_main_theorem(an), PreconditionError);
  EXPECT_THROW(verify_taft_wilson(an), PreconditionError);
}

TEST(Layers, GroupLikesInDistinctDegreesPassC1) {
  const auto an = analyze(gen_group_like<Rational>(2, 2).coalgebra);
  EXPECT_TRUE(an.c1.ok);
  EXPECT_TRUE(an.c2.ok);
}

TEST(Layers, BicomoduleLabelsAreUnique) {
  for (const auto& item : standard_corpus<Rational>(false)) {
    const auto an = analyze(item.coalgebra);
    ASSERT_TRUE(an.c2.ok) << item.name;
    for (std::size_t i = 0; i < an.bisimples.size(); ++i) {
      EXPECT_TRUE(is_simple(an.bisimples[i].rep)) << item.name;
      for (std::size_t j = i + 1; j < an.bisimples.size(); ++j)
        EXPECT_FALSE(isomorphic_simple(an.bisimples[i].rep, an.bisimples[j].rep)) << item.name;
    }
  }
}

TEST(Layers, InjectiveBookkeeping) {
  for (const auto& item : standard_corpus<Rational>(false)) {
    const auto an = analyze(item.coalgebra);
    EXPECT_TRUE(an.bookkeeping.ok) << item.name << ": " << an.bookkeeping.detail;
    std::size_t total = 0;
    // one term per orbit representative alpha
    for (std::size_t a = 0; a < an.orbits.reps.size(); ++a)
      total += an.st.simples[an.orbits.reps[a]].rep.dim() * an.inj.envelope[a].dim();
    EXPECT_EQ(total, item.coalgebra->dim()) << item.name;
    for (const auto& env : an.inj.envelope) {
      const auto soc = socle_series(env).chain.at(1);
      EXPECT_TRUE(is_simple(subcomodule(env, soc))) << item.name;
    }
  }
}

TEST(Layers, MainTheoremOnCorpus) {
  for (const auto& item : standard_corpus<Rational>(false)) {
    const auto an = analyze(item.coalgebra);
    const auto v = verify_main_theorem(an);
    EXPECT_TRUE(v.ok) << item.name << (v.witnesses.empty() ? "" : ": " + v.witnesses[0]);
    EXPECT_EQ(an.lhs, an.rhs) << item.name;
    EXPECT_EQ(an.lhs.length, an.coradical.length()) << item.name;
  }
}

TEST(Layers, AnalysisIsDeterministic) {
  const auto c = gen_z3_orbit<Rational>().coalgebra;
  const auto a = analyze(c), b = analyze(c);
  EXPECT_EQ(a.lhs, b.lhs);
  EXPECT_EQ(a.rhs, b.rhs);
  EXPECT_EQ(a.coradical.dims(), b.coradical.dims());
}

TEST(Layers, MaxLayerTruncates) {
  const auto c = gen_divided_power<Rational>(4).coalgebra;
  const auto an = analyze(c, 2);
  for (const auto& e : an.lhs.entries) EXPECT_LE(e.layer, 2u);
  for (const auto& e : an.rhs.entries) EXPECT_LE(e.layer, 2u);
  EXPECT_EQ(an.lhs.entries.size(), 2u);
}

TEST(Layers, HGeneratorDimensionIdentity) {
  for (const auto& item : {generate_path<Rational>("a3", 2), gen_divided_power<Rational>(3), gen_z3_orbit<Rational>()}) {
    const auto an = analyze(item.coalgebra);
    for (const auto& ch : verify_properties(an)) {
      if (ch.name != "star_dimension" && ch.name != "socle_in_sum") continue;
      EXPECT_TRUE(ch.ok) << item.name << " " << ch.name << ": " << ch.detail;
      EXPECT_GT(ch.count, 0u);
    }
  }
}
