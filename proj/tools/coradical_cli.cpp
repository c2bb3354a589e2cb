// coradical: generate, check, analyze and verify finite-dimensional graded coalgebras.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coradical/coradical.hpp"

using namespace coradical;

namespace {

struct Options {
  std::string field;  // empty: take it from the file
  std::string format = "json";
  std::size_t max_layer = 0;
  bool keep_going = false;
  bool corpus = false;
  std::string file;
  std::string out;
  std::vector<std::string> gen_args;
};

void emit(const Options& o, const ojson& j) {
  if (o.format == "text")
    std::cout << render_text(j);
  else
    std::cout << j.dump(2) << "\n";
}

template <class F>
int with_field(const FieldSpec& f, F&& body) {
  if (f.kind == FieldKind::rationals) return body(Rational{});
  ModP::Scope scope(f.characteristic);
  return body(ModP{});
}

int exit_code(Status s) { return static_cast<int>(s); }

template <class K>
int cmd_gen(const Options& o) {
  if (o.gen_args.empty()) throw PreconditionError("gen: missing generator name");
  const std::string& name = o.gen_args[0];
  std::vector<std::string> rest(o.gen_args.begin() + 1, o.gen_args.end());
  CorpusItem<K> item;
  auto as_int = [](const std::string& s) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw PreconditionError("gen: bad integer parameter '" + s + "'");
    }
  };
  if (name == "path") {
    if (rest.size() != 2) throw PreconditionError("gen path <quiver> <max_len>");
    item = generate_path<K>(rest[0], as_int(rest[1]));
  } else {
    std::vector<int> params;
    for (const auto& s : rest) params.push_back(as_int(s));
    item = generate<K>(name, params);
  }
  const std::string text = dump(to_file(item));
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw PreconditionError("cannot write '" + o.out + "'");
    f << text;
  }
  return 0;
}

template <class K>
int cmd_check(const Options& o, const CoalgebraFile& file) {
  const auto c = materialize<K>(file);
  ojson j;
  j["name"] = c->name();
  j["field"] = K::field().str();
  j["dim"] = c->dim();
  const Gate gate = run_gate(*c);
  ojson cond;
  cond["axioms"] = detail::condition(gate.axioms_ok, gate.axioms_detail);
  cond["split"] = detail::condition(gate.split_ok, gate.split_detail);
  Status status = Status::pass;
  std::vector<std::string> witnesses;
  if (!gate.axioms_ok) {
    status = Status::fail;
    witnesses.push_back(gate.axioms_detail);
  } else if (!gate.split_ok) {
    status = Status::precondition;
    witnesses.push_back(gate.split_detail);
  } else {
    const auto st = build_structure(c);
    const auto orbits = orbit_representatives(st);
    const auto c1 = check_C1(st);
    const auto bis = simple_bicomodules(st, orbits);
    const auto c2 = check_C2(st, orbits, bis);
    cond["C1"] = detail::condition(c1.ok, c1.detail, c1.witnesses);
    cond["C2"] = detail::condition(c2.ok, c2.detail, c2.witnesses);
    for (const auto& w : c1.witnesses) witnesses.push_back("C1: " + w);
    for (const auto& w : c2.witnesses) witnesses.push_back("C2: " + w);
    if (!c1.ok || !c2.ok) status = Status::precondition;
  }
  j["conditions"] = cond;
  j["verdict"] = status == Status::pass ? "PASS" : status == Status::fail ? "FAIL" : kNotInstance;
  j["witnesses"] = witnesses;
  if (o.format == "text") {
    std::cout << j["name"].get<std::string>() << "\n";
    for (const auto& [key, x] : cond.items())
      std::cout << "  " << key << ": " << (x["ok"].template get<bool>() ? "ok" : "FAILED") << "  " << x["detail"].template get<std::string>()
                << "\n";
    std::cout << "  verdict: " << j["verdict"].get<std::string>() << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return exit_code(status);
}

template <class K>
int cmd_analyze(const Options& o, const CoalgebraFile& file) {
  const auto rep = build_report(materialize<K>(file), o.max_layer);
  emit(o, rep.json);
  return exit_code(rep.status);
}

template <class K>
int cmd_verify_file(const Options& o, const CoalgebraFile& file) {
  const auto rep = build_report(materialize<K>(file), o.max_layer, true);
  emit(o, rep.json);
  return exit_code(rep.status);
}

/// Every generator. Failure items are expected to be refused and count as
/// skipped when they are; a refused theorem item exits 2.
template <class K>
int cmd_verify_corpus(const Options& o) {
  auto items = standard_corpus<K>();
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  ojson all = ojson::array();
  bool failed = false, refused = false;
  for (const auto& item : items) {
    auto rep = build_report(item.coalgebra, o.max_layer, true);
    const bool expected_refusal = item.kind == ItemKind::nonsplit || item.kind == ItemKind::c1_failure;
    std::string outcome;
    if (rep.status == Status::precondition) {
      outcome = expected_refusal ? "skipped" : "refused";
      refused = refused || !expected_refusal;
    } else if (expected_refusal) {
      outcome = "FAIL";
      rep.json["witnesses"].push_back("expected a precondition refusal");
    } else {
      outcome = rep.status == Status::pass ? "PASS" : "FAIL";
    }
    failed = failed || outcome == "FAIL";
    rep.json["outcome"] = outcome;
    if (o.format == "text") {
      std::cout << "[" << outcome << "] " << item.name;
      if (rep.status == Status::precondition)
        std::cout << "  (" << rep.json["verdict"].template get<std::string>() << ": "
                  << rep.json["witnesses"].front().template get<std::string>() << ")";
      std::cout << "\n";
      if (outcome == "FAIL") std::cout << render_text(rep.json);
    }
    all.push_back(rep.json);
    if ((outcome == "FAIL" || outcome == "refused") && !o.keep_going) break;
  }
  if (o.format != "text") std::cout << all.dump(2) << "\n";
  return failed ? 1 : refused ? 2 : 0;
}

int run(const std::string& cmd, const Options& o) {
  if (cmd == "gen" || (cmd == "verify" && o.corpus)) {
    const FieldSpec f = o.field.empty() ? FieldSpec{} : FieldSpec::parse(o.field);
    return with_field(f, [&](auto k) {
      using K = decltype(k);
      return cmd == "gen" ? cmd_gen<K>(o) : cmd_verify_corpus<K>(o);
    });
  }
  if (o.file.empty()) throw PreconditionError(cmd + ": missing file argument");
  const auto file = read_coalgebra_file(o.file);
  const FieldSpec f = o.field.empty() ? file.field : FieldSpec::parse(o.field);
  return with_field(f, [&](auto k) {
    using K = decltype(k);
    if (cmd == "check") return cmd_check<K>(o, file);
    if (cmd == "analyze") return cmd_analyze<K>(o, file);
    return cmd_verify_file<K>(o, file);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coradical filtrations of graded coalgebras"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--field", o.field, "q or fp:<p>");
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* gen = app.add_subcommand("gen", "write a corpus coalgebra: gen <name> [params], gen path <quiver> <len>");
  gen->add_option("args", o.gen_args)->required();
  gen->add_option("-o,--output", o.out, "output file (default stdout)");

  auto* check = app.add_subcommand("check", "axioms, split, C1, C2");
  check->add_option("file", o.file)->required();

  auto* analyze = app.add_subcommand("analyze", "filtration, simples, injectives, both layer tables");
  analyze->add_option("file", o.file)->required();
  analyze->add_option("--max-layer", o.max_layer, "stop tables at this layer (0: all)");

  auto* verify = app.add_subcommand("verify", "main theorem, Taft-Wilson and the lemma suites");
  verify->add_option("file", o.file);
  verify->add_flag("--corpus", o.corpus, "run every generator");
  verify->add_flag("--keep-going", o.keep_going, "do not stop at the first failing item");
  verify->add_option("--max-layer", o.max_layer, "stop tables at this layer (0: all)");

  for (auto* s : {gen, check, analyze, verify}) {
    s->add_option("--field", o.field, "q or fp:<p>");
    s->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  }
}
