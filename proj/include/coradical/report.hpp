#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coradical/io.hpp"
#include "coradical/theorem.hpp"

namespace coradical {

inline constexpr const char* kNotInstance = "NOT-A-THEOREM-INSTANCE";

enum class Status { pass = 0, fail = 1, precondition = 2 };

/// Gatekeeping results that do not need the simples.
struct Gate {
  bool axioms_ok = true;
  std::string axioms_detail;
  bool split_ok = true;
  std::string split_detail;
};

template <class K>
Gate run_gate(const Coalgebra<K>& c) {
  Gate g;
  const auto ax = check_coalgebra(c);
  g.axioms_ok = ax.ok;
  g.axioms_detail = ax.ok ? "coassociative, counital, degree-preserving" : ax.failure;
  if (!g.axioms_ok) {
    g.split_ok = false;
    g.split_detail = "not checked";
    return g;
  }
  try {
    const auto s = wedderburn_split_check(c.dual_algebra());
    g.split_ok = s.ok;
    g.split_detail = s.detail;
    if (s.ok) {
      // the graded simples live over the smash product; it has to split too
      const auto t = wedderburn_split_check(c.graded_right_algebra());
      g.split_ok = t.ok;
      g.split_detail = t.ok ? "split" : "graded algebra: " + t.detail;
    }
  } catch (const PreconditionError& e) {
    g.split_ok = false;
    g.split_detail = e.what();
  }
  return g;
}

namespace detail {

inline ojson condition(bool ok, const std::string& detail, const std::vector<std::string>& witnesses = {}) {
  ojson j;
  j["ok"] = ok;
  j["detail"] = detail;
  j["witnesses"] = witnesses;
  return j;
}

template <class K>
ojson table_json(const Analysis<K>& an, const MultiplicityTable& t) {
  ojson rows = ojson::array();
  for (const auto& e : t.entries) {
    ojson r;
    r["layer"] = e.layer;
    r["alpha"] = an.st.simples[e.alpha].label;
    r["lprime"] = an.st.simples[e.lprime].label;
    r["value"] = e.value;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace detail

/// Full report for one coalgebra. The analysis is skipped (tables empty)
/// when axioms or the split check fail.
struct Report {
  ojson json;
  Status status = Status::pass;
};

template <class K>
Report build_report(const CoalgebraPtr<K>& c, std::size_t max_layer = 0, bool with_properties = false,
                       const VerifyOptions& opt = {}) {
  Report rep;
  ojson& j = rep.json;
  j["name"] = c->name();
  j["field"] = K::field().str();
  j["dim"] = c->dim();
  const Gate gate = run_gate(*c);
  ojson cond;
  cond["axioms"] = detail::condition(gate.axioms_ok, gate.axioms_detail);
  cond["split"] = detail::condition(gate.split_ok, gate.split_detail);
  std::vector<std::string> witnesses;
  if (!gate.axioms_ok) {
    j["conditions"] = cond;
    j["tables"] = {{"lhs", ojson::array()}, {"rhs", ojson::array()}};
    j["verdict"] = "FAIL";
    j["witnesses"] = std::vector<std::string>{gate.axioms_detail};
    rep.status = Status::fail;
    return rep;
  }
  if (!gate.split_ok) {
    cond["C1"] = detail::condition(false, "not checked");
    cond["C2"] = detail::condition(false, "not checked");
    j["conditions"] = cond;
    j["tables"] = {{"lhs", ojson::array()}, {"rhs", ojson::array()}};
    j["verdict"] = kNotInstance;
    j["witnesses"] = std::vector<std::string>{gate.split_detail};
    rep.status = Status::precondition;
    return rep;
  }

  std::optional<Analysis<K>> maybe;
  try {
    maybe.emplace(analyze(c, max_layer));
  } catch (const PreconditionError& e) {
    cond["C1"] = detail::condition(false, "not checked");
    cond["C2"] = detail::condition(false, "not checked");
    j["conditions"] = cond;
    j["tables"] = {{"lhs", ojson::array()}, {"rhs", ojson::array()}};
    j["verdict"] = kNotInstance;
    j["witnesses"] = std::vector<std::string>{e.what()};
    rep.status = Status::precondition;
    return rep;
  }
  const auto& an = *maybe;
  cond["C1"] = detail::condition(an.c1.ok, an.c1.detail, an.c1.witnesses);
  cond["C2"] = detail::condition(an.c2.ok, an.c2.detail, an.c2.witnesses);
  j["conditions"] = cond;

  const auto& g = *c->group();
  j["coradical_filtration"] = an.coradical.dims();
  ojson simples = ojson::array();
  for (const auto& s : an.st.simples) {
    ojson x;
    x["label"] = s.label;
    x["dim"] = s.rep.dim();
    x["degrees"] = degree_list(g, s.rep.space.deg);
    simples.push_back(x);
  }
  j["simples"] = simples;
  ojson orbits = ojson::array();
  for (auto r : an.orbits.reps) orbits.push_back(an.st.simples[r].label);
  j["orbit_representatives"] = orbits;
  ojson inj = ojson::array();
  for (std::size_t a = 0; a < an.inj.envelope.size(); ++a) {
    ojson x;
    x["socle"] = an.st.simples[an.orbits.reps[a]].label;
    x["dim"] = an.inj.envelope[a].dim();
    x["loewy_length"] = loewy_length(an.inj.envelope[a]);
    ojson cnt;
    for (int h = 0; h < g.order(); ++h)
      if (an.inj.count[a][h]) cnt[g.label(h)] = an.inj.count[a][h];
    x["summands_by_twist"] = cnt;
    inj.push_back(x);
  }
  j["injective_envelopes"] = inj;
  j["bookkeeping"] = detail::condition(an.bookkeeping.ok, an.bookkeeping.detail, an.bookkeeping.witnesses);
  j["tables"] = {{"lhs", detail::table_json(an, an.lhs)}, {"rhs", detail::table_json(an, an.rhs)}};
  j["tables"]["lhs_complete"] = an.lhs_complete;

  if (!an.theorem_instance()) {
    for (const auto& w : an.c1.witnesses) witnesses.push_back("C1: " + w);
    for (const auto& w : an.c2.witnesses) witnesses.push_back("C2: " + w);
    j["verdict"] = kNotInstance;
    j["witnesses"] = witnesses;
    rep.status = Status::precondition;
    return rep;
  }

  bool ok = an.bookkeeping.ok;
  for (const auto& w : an.bookkeeping.witnesses) witnesses.push_back("bookkeeping: " + w);
  const auto v = verify_main_theorem(an);
  ok = ok && v.ok;
  for (const auto& w : v.witnesses) witnesses.push_back("main: " + w);
  const auto tw = verify_taft_wilson(an);
  ojson twj;
  twj["ok"] = tw.ok;
  twj["order"] = tw.order;
  twj["rows"] = tw.rows;
  j["taft_wilson"] = twj;
  if (!tw.ok) {
    ok = false;
    witnesses.push_back("taft-wilson: neither Ext order matches the second layer");
  }
  if (with_properties) {
    ojson props = ojson::array();
    for (const auto& ch : verify_properties(an, opt)) {
      ojson x;
      x["name"] = ch.name;
      x["ok"] = ch.ok;
      x["count"] = ch.count;
      x["detail"] = ch.detail;
      props.push_back(x);
      if (!ch.ok) {
        ok = false;
        witnesses.push_back(ch.name + ": " + ch.detail);
      }
    }
    j["properties"] = props;
  }
  j["verdict"] = ok ? "PASS" : "FAIL";
  j["witnesses"] = witnesses;
  rep.status = ok ? Status::pass : Status::fail;
  return rep;
}

/// Plain-text rendering of a report.
inline std::string render_text(const ojson& j) {
  std::ostringstream out;
  out << j.value("name", std::string()) << " over " << j.value("field", std::string()) << ", dim "
      << j.value("dim", 0) << "\n";
  for (const auto& [key, c] : j.at("conditions").items())
    out << "  " << key << ": " << (c.at("ok").get<bool>() ? "ok" : "FAILED") << "  " << c.at("detail").get<std::string>()
        << "\n";
  if (j.contains("coradical_filtration")) {
    out << "  coradical filtration dims:";
    for (const auto& d : j.at("coradical_filtration")) out << " " << d.get<std::size_t>();
    out << "\n";
  }
  if (j.contains("simples"))
    for (const auto& s : j.at("simples"))
      out << "  simple " << s.at("label").get<std::string>() << "  dim " << s.at("dim").get<std::size_t>() << "  degrees "
          << s.at("degrees").get<std::string>() << "\n";
  if (j.contains("injective_envelopes"))
    for (const auto& s : j.at("injective_envelopes"))
      out << "  I(" << s.at("socle").get<std::string>() << ")  dim " << s.at("dim").get<std::size_t>() << "  loewy length "
          << s.at("loewy_length").get<std::size_t>() << "\n";
  for (const char* side : {"lhs", "rhs"}) {
    out << "  " << side << (std::string(side) == "lhs" ? " [sigma_i(C)/sigma_i-1(C) : La*#L']" : " [sigma_i(I(La)) layer : L']")
        << "\n";
    for (const auto& e : j.at("tables").at(side))
      out << "    layer " << e.at("layer").get<std::size_t>() << "  " << e.at("alpha").get<std::string>() << "*#"
          << e.at("lprime").get<std::string>() << "  " << e.at("value").get<std::size_t>() << "\n";
  }
  if (j.contains("taft_wilson"))
    out << "  taft-wilson: " << (j["taft_wilson"]["ok"].get<bool>() ? "ok" : "FAILED") << ", order "
        << j["taft_wilson"]["order"].get<std::string>() << "\n";
  if (j.contains("properties"))
    for (const auto& p : j.at("properties"))
      out << "  property " << p.at("name").get<std::string>() << ": " << (p.at("ok").get<bool>() ? "ok" : "FAILED") << " ("
          << p.at("count").get<std::size_t>() << " cases)\n";
  out << "  verdict: " << j.at("verdict").get<std::string>() << "\n";
  for (const auto& w : j.at("witnesses")) out << "  witness: " << w.get<std::string>() << "\n";
  return out.str();
}

}  // namespace coradical
