#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace coradical;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kMinimal = R"({
  "field": "q",
  "name": "tiny",
  "group": {"labels": ["e"], "table": [[0]]},
  "basis": {"labels": ["c"], "degrees": ["e"]},
  "comult": [[0, 0, 0, "1"]],
  "counit": [[0, "1"]]
})";

std::string with(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  if (pos == std::string::npos) throw std::runtime_error("pattern not found: " + from);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST(Corpus, GeneratorsAreDeterministic) {
  const auto a = standard_corpus<Rational>(), b = standard_corpus<Rational>();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(dump(to_file(a[i])), dump(to_file(b[i]))) << a[i].name;
}

TEST(Corpus, FrozenFixturesMatchGenerators) {
  auto items = standard_corpus<Rational>();
  items.push_back(gen_perturbed<Rational>());
  for (const auto& item : items) {
    const fs::path p = fs::path(testing_support::fixture_dir()) / "corpus" / (item.name + ".json");
    ASSERT_TRUE(fs::exists(p)) << p;
    EXPECT_EQ(slurp(p), dump(to_file(item))) << item.name;
  }
}

TEST(Corpus, RoundTripIsByteIdentical) {
  for (const auto& entry : fs::directory_iterator(fs::path(testing_support::fixture_dir()) / "corpus")) {
    const std::string text = slurp(entry.path());
    const auto f = parse_coalgebra_file(text);
    EXPECT_EQ(dump(f), text) << entry.path();
    EXPECT_EQ(canonical_dump<Rational>(f), text) << entry.path();
  }
}

TEST(Corpus, PrimeFieldRoundTrip) {
  ModP::Scope scope(5);
  for (const auto& item : standard_corpus<ModP>()) {
    const std::string text = dump(to_file(item));
    EXPECT_NE(text.find("\"field\": \"fp:5\""), std::string::npos);
    const auto f = parse_coalgebra_file(text);
    EXPECT_EQ(canonical_dump<ModP>(f), text) << item.name;
  }
}

TEST(Corpus, ResidueSyntaxAccepted) {
  ModP::Scope scope(5);
  auto text = with(with(kMinimal, "\"q\"", "\"fp:5\""), "[0, 0, 0, \"1\"]", "[0, 0, 0, \"6 mod 5\"]");
  const auto c = materialize<ModP>(parse_coalgebra_file(text));
  EXPECT_TRUE(check_coalgebra(*c).ok);
}

TEST(Corpus, ParseErrors) {
  EXPECT_NO_THROW(parse_coalgebra_file(kMinimal));
  EXPECT_THROW(parse_coalgebra_file("{"), ParseError);
  EXPECT_THROW(parse_coalgebra_file("[]"), ParseError);
  EXPECT_THROW(parse_coalgebra_file(with(kMinimal, "\"field\": \"q\",", "")), ParseError);
  EXPECT_THROW(parse_coalgebra_file(with(kMinimal, "\"q\"", "\"fp:4\"")), ParseError);
  EXPECT_THROW(parse_coalgebra_file(with(kMinimal, "[0, 0, 0, \"1\"]", "[0, 0, 1, \"1\"]")), ParseError);
  EXPECT_THROW(parse_coalgebra_file(with(kMinimal, "[0, 0, 0, \"1\"]", "[0, 0, \"1\"]")), ParseError);
  EXPECT_THROW(parse_coalgebra_file(with(kMinimal, "[0, 0, 0, \"1\"]", "[0, -1, 0, \"1\"]")), ParseError);
  EXPECT_THROW(parse_coalgebra_file(with(kMinimal, "\"degrees\": [\"e\"]", "\"degrees\": [\"g\"]")), ParseError);
  EXPECT_THROW(parse_coalgebra_file(with(kMinimal, "\"degrees\": [\"e\"]", "\"degrees\": []")), ParseError);
  EXPECT_THROW(parse_coalgebra_file(with(kMinimal, "[[0]]", "[[1]]")), ParseError);
  EXPECT_THROW(read_coalgebra_file("/nonexistent/file.json"), ParseError);
  const auto bad_scalar = parse_coalgebra_file(with(kMinimal, "[0, \"1\"]", "[0, \"one\"]"));
  EXPECT_THROW(materialize<Rational>(bad_scalar), ParseError);
}

TEST(Corpus, DegreeViolationIsAnAxiomFailure) {
  const std::string graded = R"({
  "field": "q",
  "group": {"labels": ["e", "g"], "table": [[0, 1], [1, 0]]},
  "basis": {"labels": ["a", "b"], "degrees": ["e", "g"]},
  "comult": [[0, 0, 0, "1"], [1, 0, 0, "1"]],
  "counit": [[0, "1"]]
})";
  const auto f = parse_coalgebra_file(graded);
  EXPECT_THROW(materialize<Rational>(f), VerificationError);
}

TEST(Corpus, PerturbedFixtureFailsAxioms) {
  const auto f = read_coalgebra_file(fs::path(testing_support::fixture_dir()) / "corpus" / "perturbed-matrix-dual-2.json");
  const auto c = materialize<Rational>(f);
  const auto r = check_coalgebra(*c);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.failure.empty());
}

TEST(Corpus, UnknownGenerators) {
  EXPECT_THROW(generate<Rational>("nope", {}), PreconditionError);
  EXPECT_THROW(generate<Rational>("matrix-dual", {}), PreconditionError);
  EXPECT_THROW(generate_path<Rational>("pentagon", 1), PreconditionError);
  EXPECT_THROW(gen_matrix_dual<Rational>(0), PreconditionError);
  EXPECT_THROW(gen_divided_power<Rational>(-1), PreconditionError);
}

TEST(Corpus, NonsplitItem) {
  const auto item = gen_nonsplit<Rational>();
  EXPECT_TRUE(check_coalgebra(*item.coalgebra).ok);
  EXPECT_EQ(item.coalgebra->radical().cols(), 0u);
  EXPECT_FALSE(wedderburn_split_check(item.coalgebra->dual_algebra()).ok);
  const auto rep = build_report(item.coalgebra);
  EXPECT_EQ(rep.status, Status::precondition);
  EXPECT_EQ(rep.json["verdict"], kNotInstance);
}

TEST(Corpus, ReportsAreDeterministic) {
  const auto c = gen_super_dual<Rational>().coalgebra;
  EXPECT_EQ(build_report(c, 0, true).json.dump(2), build_report(c, 0, true).json.dump(2));
}

TEST(Corpus, C1FailureReportStillHasTables) {
  const auto rep = build_report(gen_group_dual<Rational>(2).coalgebra);
  EXPECT_EQ(rep.status, Status::precondition);
  EXPECT_EQ(rep.json["verdict"], kNotInstance);
  EXPECT_FALSE(rep.json["tables"]["lhs"].empty());
  EXPECT_FALSE(rep.json["tables"]["rhs"].empty());
  EXPECT_FALSE(rep.json["conditions"]["C1"]["ok"].get<bool>());
}
