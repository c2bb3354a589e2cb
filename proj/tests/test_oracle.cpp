// Socle series against the frozen output of tests/oracle/bruteforce.py.

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

std::vector<std::size_t> without_zero(std::vector<std::size_t> d) {
  if (!d.empty() && d.front() == 0) d.erase(d.begin());
  return d;
}

}  // namespace

TEST(Oracle, SocleSeriesMatchFrozenBruteForce) {
  const fs::path root(testing_support::fixture_dir());
  std::size_t seen = 0;
  for (const auto& entry : fs::directory_iterator(root / "socle_truth")) {
    const auto c = materialize<Rational>(read_coalgebra_file(root / "corpus" / entry.path().filename()));
    ojson rec;
    rec["name"] = c->name();
    rec["right_socle_dims"] = without_zero(socle_series(regular_comodule(c, Side::right)).dims());
    rec["coradical_dims"] = without_zero(socle_series(regular_bicomodule(c)).dims());
    EXPECT_EQ(rec.dump(2) + "\n", slurp(entry.path())) << entry.path();
    ++seen;
  }
  EXPECT_GE(seen, 15u);
}

TEST(Oracle, CoradicalFiltrationIsBicomoduleSocle) {
  for (const auto& item : standard_corpus<Rational>()) {
    if (item.kind == ItemKind::nonsplit) continue;
    EXPECT_EQ(coradical_filtration(*item.coalgebra).dims(), socle_series(regular_bicomodule(item.coalgebra)).dims())
        << item.name;
  }
}
