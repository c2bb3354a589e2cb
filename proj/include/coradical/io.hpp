#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "coradical/corpus.hpp"

namespace coradical {

using ojson = nlohmann::ordered_json;

/// Field-agnostic contents of a coalgebra file. Scalars stay strings until
/// materialised in a concrete field.
struct CoalgebraFile {
  FieldSpec field;
  std::string name;
  GroupPtr group;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  /// (i, j, k, scalar): Delta(b_k) has this coefficient on b_i (x) b_j.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::string>> comult;
  std::vector<std::pair<std::size_t, std::string>> counit;
  ojson metadata = ojson::object();
};

namespace detail {

inline const ojson& require(const ojson& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

inline std::size_t index_in(const ojson& j, std::size_t bound, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  const auto v = j.get<std::size_t>();
  if (v >= bound) throw ParseError(std::string(what) + " out of range");
  return v;
}

}  // namespace detail

inline CoalgebraFile parse_coalgebra_file(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    CoalgebraFile f;
    f.field = FieldSpec::parse(detail::require(j, "field").get<std::string>());
    if (j.contains("name")) f.name = j.at("name").get<std::string>();
    const auto& g = detail::require(j, "group");
    auto glabels = detail::require(g, "labels").get<std::vector<std::string>>();
    auto table = detail::require(g, "table").get<std::vector<std::vector<int>>>();
    try {
      f.group = std::make_shared<const Group>(glabels, table);
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("group: ") + e.what());
    }
    const auto& b = detail::require(j, "basis");
    f.labels = detail::require(b, "labels").get<std::vector<std::string>>();
    for (const auto& d : detail::require(b, "degrees")) f.degrees.push_back(f.group->index_of(d.get<std::string>()));
    if (f.degrees.size() != f.labels.size()) throw ParseError("basis labels and degrees differ in length");
    const std::size_t n = f.labels.size();
    for (const auto& t : detail::require(j, "comult")) {
      if (!t.is_array() || t.size() != 4) throw ParseError("comult entries are [i, j, k, \"scalar\"]");
      f.comult.emplace_back(detail::index_in(t[0], n, "comult index"), detail::index_in(t[1], n, "comult index"),
                            detail::index_in(t[2], n, "comult index"), t[3].get<std::string>());
    }
    for (const auto& t : detail::require(j, "counit")) {
      if (!t.is_array() || t.size() != 2) throw ParseError("counit entries are [k, \"scalar\"]");
      f.counit.emplace_back(detail::index_in(t[0], n, "counit index"), t[1].get<std::string>());
    }
    if (j.contains("metadata")) f.metadata = j.at("metadata");
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed coalgebra file: ") + e.what());
  }
}

inline CoalgebraFile read_coalgebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_coalgebra_file(ss.str());
}

/// Scalars are parsed in K (the caller holds a ModP::Scope for prime fields).
/// Violations of degree preservation are reported as axiom failures.
template <class K>
std::shared_ptr<const Coalgebra<K>> materialize(const CoalgebraFile& f) {
  std::vector<ComultTerm<K>> terms;
  for (const auto& [i, j, k, s] : f.comult) terms.push_back({i, j, k, K::parse(s)});
  Vec<K> eps(f.labels.size(), K(0));
  for (const auto& [k, s] : f.counit) eps[k] += K::parse(s);
  try {
    return std::make_shared<const Coalgebra<K>>(GradedSpace(f.group, f.degrees), std::move(terms), std::move(eps), f.name);
  } catch (const PreconditionError& e) {
    throw VerificationError(std::string("coalgebra axioms: ") + e.what());
  }
}

template <class K>
CoalgebraFile to_file(const CorpusItem<K>& item) {
  CoalgebraFile f;
  f.field = K::field();
  f.name = item.name;
  const auto& c = *item.coalgebra;
  f.group = c.group();
  f.labels = item.labels;
  f.degrees = c.space().deg;
  for (const auto& t : c.terms()) f.comult.emplace_back(t.left, t.right, t.out, t.coef.str());
  for (std::size_t k = 0; k < c.dim(); ++k)
    if (!c.counit()[k].is_zero()) f.counit.emplace_back(k, c.counit()[k].str());
  for (const auto& [key, value] : item.metadata) f.metadata[key] = value;
  return f;
}

/// Deterministic serialisation; comult is sorted by (k, i, j).
inline std::string dump(const CoalgebraFile& f) {
  ojson j;
  j["field"] = f.field.str();
  j["name"] = f.name;
  j["group"]["labels"] = f.group->labels();
  j["group"]["table"] = f.group->table();
  j["basis"]["labels"] = f.labels;
  ojson deg = ojson::array();
  for (int d : f.degrees) deg.push_back(f.group->label(d));
  j["basis"]["degrees"] = deg;
  auto comult = f.comult;
  std::sort(comult.begin(), comult.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<2>(a), std::get<0>(a), std::get<1>(a)) < std::tie(std::get<2>(b), std::get<0>(b), std::get<1>(b));
  });
  ojson cm = ojson::array();
  for (const auto& [i, jj, k, s] : comult) cm.push_back(ojson::array({i, jj, k, s}));
  j["comult"] = cm;
  ojson cu = ojson::array();
  for (const auto& [k, s] : f.counit) cu.push_back(ojson::array({k, s}));
  j["counit"] = cu;
  j["metadata"] = f.metadata;
  return j.dump(2) + "\n";
}

/// Re-serialise after materialising in K; used for the round-trip property.
template <class K>
std::string canonical_dump(const CoalgebraFile& f) {
  CorpusItem<K> item{f.name, ItemKind::theorem, materialize<K>(f), f.labels, {}};
  auto g = to_file(item);
  g.metadata = f.metadata;
  return dump(g);
}

inline std::string degree_list(const Group& g, const std::vector<int>& deg) {
  std::string s;
  for (std::size_t i = 0; i < deg.size(); ++i) s += (i ? "," : "") + g.label(deg[i]);
  return s;
}

}  // namespace coradical
