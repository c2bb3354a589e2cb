#pragma once

#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "coradical/mcoeff.hpp"

namespace coradical {

/// Simples of C with the action of the degree shifts on them.
template <class K>
struct Structure {
  CoalgebraPtr<K> coalgebra;
  std::vector<SimpleComodule<K>> simples;
  /// twist_table[L][g] = index of S_g (x) L.
  std::vector<std::vector<std::size_t>> twist_table;

  const GroupPtr& group() const { return coalgebra->group(); }
  std::size_t semisimple_dim() const { return coalgebra->dim() - coalgebra->radical().cols(); }
};

/// Throws PreconditionError when the graded dual algebra is not split.
template <class K>
Structure<K> build_structure(const CoalgebraPtr<K>& c) {
  Structure<K> st{c, simple_comodules(c), {}};
  const int order = c->group()->order();
  for (const auto& s : st.simples) {
    std::vector<std::size_t> row;
    for (int g = 0; g < order; ++g) row.push_back(identify_simple(twist(g, s.rep), st.simples));
    st.twist_table.push_back(std::move(row));
  }
  return st;
}

struct ConditionReport {
  bool ok = true;
  std::string detail;
  std::vector<std::string> witnesses;
};

/// (C1): Hom(L, S_g (x) L) = 0 for every simple L and g != e.
template <class K>
ConditionReport check_C1(const Structure<K>& st) {
  ConditionReport r;
  const auto& g = *st.group();
  for (std::size_t l = 0; l < st.simples.size(); ++l)
    for (int h = 0; h < g.order(); ++h) {
      if (h == g.identity()) continue;
      if (!hom_space(st.simples[l].rep, twist(h, st.simples[l].rep)).empty()) {
        r.ok = false;
        r.witnesses.push_back(st.simples[l].label + " is isomorphic to its twist by " + g.label(h));
      }
    }
  r.detail = r.ok ? "degree shifts act freely on simples" : "a simple is fixed by a nontrivial degree shift";
  return r;
}

/// Every simple L written as S_g (x) L_alpha; alpha is the smallest label in its orbit.
struct OrbitReps {
  std::vector<std::size_t> reps;
  std::vector<std::size_t> alpha_of;
  std::vector<int> g_of;
  bool free = true;
};

template <class K>
OrbitReps orbit_representatives(const Structure<K>& st) {
  OrbitReps o;
  const auto& g = *st.group();
  const std::size_t s = st.simples.size();
  o.alpha_of.assign(s, 0);
  o.g_of.assign(s, g.identity());
  for (std::size_t l = 0; l < s; ++l) {
    std::size_t rep = l;
    for (auto t : st.twist_table[l]) rep = std::min(rep, t);
    o.alpha_of[l] = rep;
    for (int h = 0; h < g.order(); ++h)
      if (st.twist_table[rep][h] == l) {
        o.g_of[l] = h;
        break;
      }
    if (rep == l) o.reps.push_back(l);
    std::vector<std::size_t> orbit = st.twist_table[l];
    std::sort(orbit.begin(), orbit.end());
    if (std::unique(orbit.begin(), orbit.end()) != orbit.end()) o.free = false;
  }
  return o;
}

/// L_alpha* boxtimes L' for a representative alpha.
template <class K>
struct SimpleBicomodule {
  std::size_t alpha = 0, lprime = 0;
  Bicomodule<K> rep;
  std::string label;
};

template <class K>
Bicomodule<K> outer_product(const Structure<K>& st, std::size_t l, std::size_t lp) {
  return boxtimes(dual_comodule(st.simples[l].rep), st.simples[lp].rep);
}

template <class K>
bool isomorphic_simple(const Bicomodule<K>& x, const Bicomodule<K>& y) {
  return x.dim() == y.dim() && !hom_space(x, y).empty();
}

/// One bicomodule per (alpha, L'), dropping later ones isomorphic to an earlier one.
template <class K>
std::vector<SimpleBicomodule<K>> simple_bicomodules(const Structure<K>& st, const OrbitReps& o) {
  std::vector<SimpleBicomodule<K>> out;
  for (auto a : o.reps)
    for (std::size_t lp = 0; lp < st.simples.size(); ++lp) {
      auto x = outer_product(st, a, lp);
      bool dup = false;
      for (const auto& y : out) dup = dup || isomorphic_simple(x, y.rep);
      if (dup) continue;
      out.push_back({a, lp, std::move(x), st.simples[a].label + "*#" + st.simples[lp].label});
    }
  return out;
}

/// (C2): every L* boxtimes L' is simple, the iso classes among them have
/// sum of dim^2 equal to dim(A/J)^2 |G| (so they are all simple bicomodules),
/// and each class has a unique label (alpha, L').
template <class K>
ConditionReport check_C2(const Structure<K>& st, const OrbitReps& o, const std::vector<SimpleBicomodule<K>>& bis) {
  ConditionReport r;
  const std::size_t s = st.simples.size();
  for (std::size_t l = 0; l < s; ++l)
    for (std::size_t lp = 0; lp < s; ++lp) {
      const auto x = outer_product(st, l, lp);
      if (!is_simple(x)) {
        r.ok = false;
        r.witnesses.push_back(st.simples[l].label + "* # " + st.simples[lp].label + " is not a simple bicomodule");
        continue;
      }
      std::size_t matches = 0;
      for (const auto& y : bis) matches += isomorphic_simple(x, y.rep);
      if (matches != 1) {
        r.ok = false;
        r.witnesses.push_back(st.simples[l].label + "* # " + st.simples[lp].label + " matches " +
                              std::to_string(matches) + " labelled simple bicomodules");
      }
    }
  std::size_t total = 0;
  for (const auto& b : bis) total += b.rep.dim() * b.rep.dim();
  const std::size_t expect = st.semisimple_dim() * st.semisimple_dim() * static_cast<std::size_t>(st.group()->order());
  if (total != expect) {
    r.ok = false;
    r.witnesses.push_back("simple bicomodules of the form L*#L' account for " + std::to_string(total) + " of " +
                          std::to_string(expect) + " dimensions of the semisimple enveloping quotient");
  }
  if (o.free && bis.size() != o.reps.size() * s) {
    r.ok = false;
    r.witnesses.push_back("labels (alpha, L') are not unique");
  }
  r.detail = r.ok ? "every simple bicomodule is L*#L'" : "simple bicomodules are not all of the form L*#L'";
  return r;
}

struct TableEntry {
  std::size_t layer, alpha, lprime, value;
  bool operator==(const TableEntry&) const = default;
};

/// Rows (layer, alpha, L') with nonzero multiplicity, sorted.
struct MultiplicityTable {
  std::vector<TableEntry> entries;
  std::size_t length = 0;

  std::size_t value(std::size_t layer, std::size_t alpha, std::size_t lprime) const {
    for (const auto& e : entries)
      if (e.layer == layer && e.alpha == alpha && e.lprime == lprime) return e.value;
    return 0;
  }
  void add(std::size_t layer, std::size_t alpha, std::size_t lprime, std::size_t v) {
    if (v) entries.push_back({layer, alpha, lprime, v});
  }
  void sort() {
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
      return std::tie(a.layer, a.alpha, a.lprime) < std::tie(b.layer, b.alpha, b.lprime);
    });
  }
  bool operator==(const MultiplicityTable&) const = default;
};

/// [sigma_i(C)/sigma_{i-1}(C) : L_alpha* boxtimes L'] from the bicomodule socle
/// series; each layer is semisimple and each simple has End = k, so the
/// multiplicity is dim Hom(X, layer). `complete` is false when the labelled
/// simples do not account for a whole layer.
template <class K>
MultiplicityTable coradical_layer_table(const Structure<K>& st, const std::vector<SimpleBicomodule<K>>& bis,
                                        bool* complete = nullptr, std::size_t max_layer = 0) {
  const auto creg = regular_bicomodule(st.coalgebra);
  const auto sigma = socle_series(creg);
  MultiplicityTable t;
  t.length = sigma.length();
  if (complete) *complete = true;
  for (std::size_t i = 1; i <= sigma.length(); ++i) {
    if (max_layer && i > max_layer) break;
    const auto layer = subquotient(creg, sigma.chain[i], sigma.chain[i - 1]);
    std::size_t covered = 0;
    for (const auto& b : bis) {
      const std::size_t v = hom_space(b.rep, layer).size();
      t.add(i, b.alpha, b.lprime, v);
      covered += v * b.rep.dim();
    }
    if (covered != layer.dim()) {
      if (!complete) throw VerificationError("layer " + std::to_string(i) + " has a composition factor outside the labelled simples");
      *complete = false;
    }
  }
  t.sort();
  return t;
}

/// Label (alpha, L'') of the simple bicomodule isomorphic to L* boxtimes L'.
template <class K>
std::pair<std::size_t, std::size_t> bicomodule_label(const Structure<K>& st, const std::vector<SimpleBicomodule<K>>& bis,
                                                     std::size_t l, std::size_t lp) {
  const auto x = outer_product(st, l, lp);
  for (const auto& b : bis)
    if (isomorphic_simple(x, b.rep)) return {b.alpha, b.lprime};
  throw VerificationError("no labelled simple bicomodule matches " + st.simples[l].label + "*#" + st.simples[lp].label);
}

template <class K>
struct InjectiveSummand {
  Matrix<K> basis;  // inside C
  Comodule<K> rep;
  std::size_t socle = 0;  // simple label of the socle
  std::size_t alpha = 0;
  int g = 0;  // socle = S_g (x) L_alpha
};

template <class K>
struct InjectiveDecomposition {
  std::vector<InjectiveSummand<K>> summands;
  /// envelope[a] = I(L_reps[a]).
  std::vector<Comodule<K>> envelope;
  /// count[a][g] = number of summands isomorphic to S_g (x) I(L_reps[a]).
  std::vector<std::vector<std::size_t>> count;
};

/// Degree-e part of C* as an algebra in its own right.
template <class K>
Algebra<K> degree_zero_subalgebra(const Coalgebra<K>& c, std::vector<std::size_t>& support) {
  const auto& a = c.dual_algebra();
  const int e = c.group()->identity();
  support.clear();
  for (std::size_t k = 0; k < c.dim(); ++k)
    if (c.space().deg[k] == e) support.push_back(k);
  const std::size_t d = support.size();
  Algebra<K> ae;
  ae.space = GradedSpace(c.group(), std::vector<int>(d, e));
  for (std::size_t i = 0; i < d; ++i) {
    Matrix<K> m(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s) m(r, s) = a.left[support[i]](support[r], support[s]);
    ae.left.push_back(std::move(m));
  }
  for (auto k : support) ae.unit.push_back(c.counit()[k]);
  return ae;
}

/// C = sum_t lambda(e_t) C over primitive idempotents e_t of the degree-e part
/// of C*; lambda(a) commutes with the right coaction, so each piece is an
/// indecomposable injective right comodule.
template <class K>
InjectiveDecomposition<K> injective_decomposition(const Structure<K>& st, const OrbitReps& o) {
  const auto& c = *st.coalgebra;
  std::vector<std::size_t> support;
  const auto ae = degree_zero_subalgebra(c, support);
  const auto idem = primitive_idempotents(ae);
  const auto lops = c.left_regular_ops();
  const auto creg = regular_comodule(st.coalgebra, Side::right);
  InjectiveDecomposition<K> out;
  Matrix<K> all(c.dim(), 0);
  for (const auto& e : idem) {
    Matrix<K> lam(c.dim(), c.dim());
    for (std::size_t i = 0; i < support.size(); ++i)
      if (!e[i].is_zero()) lam += e[i] * lops[support[i]];
    InjectiveSummand<K> s;
    s.rep = subcomodule(creg, image_basis(lam), &s.basis);
    all = hcat(all, s.basis);
    const auto soc = socle_series(s.rep).chain.at(1);
    const auto socle = subcomodule(s.rep, soc);
    if (!is_simple(socle)) throw VerificationError("injective summand has a non-simple socle");
    s.socle = identify_simple(socle, st.simples);
    s.alpha = o.alpha_of[s.socle];
    s.g = o.g_of[s.socle];
    out.summands.push_back(std::move(s));
  }
  if (rank(all) != c.dim() || all.cols() != c.dim()) throw VerificationError("injective summands do not decompose C");
  const auto& g = *st.group();
  out.count.assign(o.reps.size(), std::vector<std::size_t>(g.order(), 0));
  out.envelope.resize(o.reps.size());
  std::vector<bool> have(o.reps.size(), false);
  for (const auto& s : out.summands) {
    const std::size_t a = std::find(o.reps.begin(), o.reps.end(), s.alpha) - o.reps.begin();
    ++out.count[a][s.g];
    if (!have[a]) {
      out.envelope[a] = twist(g.inv(s.g), s.rep);
      have[a] = true;
    }
  }
  for (std::size_t a = 0; a < o.reps.size(); ++a)
    if (!have[a]) throw VerificationError("no injective summand has socle in the orbit of " + st.simples[o.reps[a]].label);
  return out;
}

/// Number of summands S_g (x) I(L_alpha) must equal the number of basis vectors
/// of L_alpha* in degree g, and dim C = sum dim L_alpha dim I(L_alpha).
template <class K>
ConditionReport check_injective_bookkeeping(const Structure<K>& st, const OrbitReps& o, const InjectiveDecomposition<K>& inj) {
  ConditionReport r;
  const auto& g = *st.group();
  std::size_t total = 0;
  for (std::size_t a = 0; a < o.reps.size(); ++a) {
    const auto& l = st.simples[o.reps[a]].rep;
    for (int h = 0; h < g.order(); ++h) {
      std::size_t expect = 0;
      for (int d : l.space.deg) expect += g.inv(d) == h;
      if (inj.count[a][h] != expect) {
        r.ok = false;
        r.witnesses.push_back("I(" + st.simples[o.reps[a]].label + ") twisted by " + g.label(h) + " occurs " +
                              std::to_string(inj.count[a][h]) + " times, expected " + std::to_string(expect));
      }
    }
    total += l.dim() * inj.envelope[a].dim();
  }
  if (total != st.coalgebra->dim()) {
    r.ok = false;
    r.witnesses.push_back("sum of dim L dim I(L) is " + std::to_string(total));
  }
  r.detail = r.ok ? "C = sum over alpha of L_alpha* (x) I(L_alpha)" : "injective bookkeeping fails";
  return r;
}

template <class K>
MultiplicityTable layer_multiplicities(const Comodule<K>& v, const std::vector<SimpleComodule<K>>& simples, std::size_t alpha,
                                       std::size_t max_layer = 0) {
  const auto sigma = socle_series(v);
  MultiplicityTable t;
  t.length = sigma.length();
  for (std::size_t i = 1; i <= sigma.length(); ++i) {
    if (max_layer && i > max_layer) break;
    const auto layer = subquotient(v, sigma.chain[i], sigma.chain[i - 1]);
    for (std::size_t lp = 0; lp < simples.size(); ++lp) t.add(i, alpha, lp, composition_multiplicity(layer, simples[lp]));
  }
  return t;
}

/// [sigma_i(I(L_alpha))/sigma_{i-1}(I(L_alpha)) : L'].
template <class K>
MultiplicityTable injective_layer_table(const Structure<K>& st, const OrbitReps& o, const InjectiveDecomposition<K>& inj,
                                        std::size_t max_layer = 0) {
  MultiplicityTable t;
  for (std::size_t a = 0; a < o.reps.size(); ++a) {
    const auto part = layer_multiplicities(inj.envelope[a], st.simples, o.reps[a], max_layer);
    t.entries.insert(t.entries.end(), part.entries.begin(), part.entries.end());
    t.length = std::max(t.length, part.length);
  }
  t.sort();
  return t;
}

}  // namespace coradical
