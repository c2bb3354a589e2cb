#pragma once

#include <map>
#include <string>
#include <vector>

#include "coradical/coalgebra.hpp"

namespace coradical {

/// What a corpus item is for: a theorem instance, or a deliberate failure of
/// one of the hypotheses.
enum class ItemKind { theorem, c1_failure, nonsplit, perturbed };

inline const char* kind_name(ItemKind k) {
  switch (k) {
    case ItemKind::theorem: return "theorem";
    case ItemKind::c1_failure: return "c1-failure";
    case ItemKind::nonsplit: return "nonsplit";
    case ItemKind::perturbed: return "perturbed";
  }
  return "?";
}

template <class K>
struct CorpusItem {
  std::string name;
  ItemKind kind = ItemKind::theorem;
  std::shared_ptr<const Coalgebra<K>> coalgebra;
  std::vector<std::string> labels;
  std::map<std::string, std::string> metadata;
};

namespace detail {

template <class K>
CorpusItem<K> make_item(std::string name, ItemKind kind, GroupPtr g, std::vector<int> deg, std::vector<std::string> labels,
                        const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long>>& terms,
                        const std::vector<long>& counit, std::map<std::string, std::string> meta = {}) {
  std::vector<ComultTerm<K>> t;
  for (const auto& [i, j, k, c] : terms) t.push_back({i, j, k, K(c)});
  Vec<K> eps;
  for (long c : counit) eps.push_back(K(c));
  meta["kind"] = kind_name(kind);
  auto c = std::make_shared<const Coalgebra<K>>(GradedSpace(g, std::move(deg)), std::move(t), std::move(eps), name);
  return {std::move(name), kind, std::move(c), std::move(labels), std::move(meta)};
}

}  // namespace detail

/// Dual of M_n(k): Delta(e_ij) = sum_k e_ik (x) e_kj. Cosemisimple.
template <class K>
CorpusItem<K> gen_matrix_dual(int n) {
  if (n < 1) throw PreconditionError("matrix-dual needs n >= 1");
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long>> terms;
  std::vector<std::string> labels;
  std::vector<long> eps;
  const std::size_t m = n;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
      eps.push_back(i == j);
      for (std::size_t k = 0; k < m; ++k) terms.emplace_back(i * m + k, k * m + j, i * m + j, 1);
    }
  return detail::make_item<K>("matrix-dual-" + std::to_string(n), ItemKind::theorem, Group::trivial(),
                              std::vector<int>(m * m, 0), labels, terms, eps, {{"n", std::to_string(n)}});
}

namespace detail {

/// Divided powers c_0..c_n with c_k in degree g^k of a cyclic group of the given order.
template <class K>
CorpusItem<K> graded_divided_power(std::string name, int n, int order) {
  if (n < 0) throw PreconditionError("divided-power needs n >= 0");
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long>> terms;
  std::vector<std::string> labels;
  std::vector<int> deg;
  std::vector<long> eps;
  for (int k = 0; k <= n; ++k) {
    labels.push_back("c" + std::to_string(k));
    deg.push_back(k % order);
    eps.push_back(k == 0);
    for (int i = 0; i <= k; ++i) terms.emplace_back(i, k - i, k, 1);
  }
  return make_item<K>(std::move(name), ItemKind::theorem, Group::cyclic(order), deg, labels, terms, eps,
                      {{"n", std::to_string(n)}, {"grading", "Z/" + std::to_string(order)}});
}

}  // namespace detail

/// Dual of k[t]/(t^{n+1}): Delta(c_k) = sum_i c_i (x) c_{k-i}.
template <class K>
CorpusItem<K> gen_divided_power(int n) {
  return detail::graded_divided_power<K>("divided-power-" + std::to_string(n), n, 1);
}

/// Dual of k[theta]/(theta^2) with theta odd, graded by Z/2.
template <class K>
CorpusItem<K> gen_super_dual() {
  auto item = detail::graded_divided_power<K>("super", 1, 2);
  item.labels = {"f0", "f1"};
  return item;
}

/// Divided powers c_0, c_1, c_2 with c_k in degree g^k of Z/3: three simples in one free orbit.
template <class K>
CorpusItem<K> gen_z3_orbit() {
  return detail::graded_divided_power<K>("z3-orbit", 2, 3);
}

struct Quiver {
  std::string name;
  int vertices = 0;
  struct Arrow {
    std::string label;
    int source, target;
    int degree = 0;
  };
  std::vector<Arrow> arrows;
  int group_order = 1;

  static Quiver named(const std::string& name) {
    if (name == "a2") return {name, 2, {{"a", 0, 1}}};
    if (name == "a3") return {name, 3, {{"a", 0, 1}, {"b", 1, 2}}};
    if (name == "kronecker") return {name, 2, {{"a", 0, 1}, {"b", 0, 1}}};
    if (name == "loop") return {name, 1, {{"x", 0, 0}}};
    if (name == "super-a2") return {name, 2, {{"a", 0, 1, 1}}, 2};
    throw PreconditionError("unknown quiver '" + name + "' (a2, a3, kronecker, loop, super-a2)");
  }
};

/// Path coalgebra: basis = paths of length <= max_len, Delta(p) = sum over
/// splittings p = q r of q (x) r (vertices at the ends), counit = vertex indicator.
template <class K>
CorpusItem<K> gen_path_coalgebra(const Quiver& q, int max_len) {
  if (max_len < 0) throw PreconditionError("path coalgebra needs max_len >= 0");
  struct Path {
    int source, target;
    std::vector<std::size_t> arrows;
  };
  std::vector<Path> paths;
  for (int v = 0; v < q.vertices; ++v) paths.push_back({v, v, {}});
  std::vector<Path> frontier;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) frontier.push_back({q.arrows[a].source, q.arrows[a].target, {a}});
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    paths.insert(paths.end(), frontier.begin(), frontier.end());
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].source == p.target) {
          Path r = p;
          r.target = q.arrows[a].target;
          r.arrows.push_back(a);
          next.push_back(std::move(r));
        }
    frontier = std::move(next);
  }
  auto index_of = [&](const Path& p) -> std::size_t {
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (paths[i].source == p.source && paths[i].target == p.target && paths[i].arrows == p.arrows) return i;
    throw VerificationError("path enumeration is not closed under subpaths");
  };
  auto vertex_of = [&](int v) { return index_of({v, v, {}}); };
  std::vector<std::string> labels;
  std::vector<int> deg;
  std::vector<long> eps;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long>> terms;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const auto& p = paths[k];
    if (p.arrows.empty()) {
      labels.push_back("e" + std::to_string(p.source + 1));
    } else {
      std::string s;
      for (auto a : p.arrows) s += q.arrows[a].label;
      labels.push_back(s);
    }
    int d = 0;
    for (auto a : p.arrows) d = (d + q.arrows[a].degree) % q.group_order;
    deg.push_back(d);
    eps.push_back(p.arrows.empty());
    // split after the first s arrows
    for (std::size_t s = 0; s <= p.arrows.size(); ++s) {
      const int mid = s == 0 ? p.source : q.arrows[p.arrows[s - 1]].target;
      Path left{p.source, mid, {p.arrows.begin(), p.arrows.begin() + s}};
      Path right{mid, p.target, {p.arrows.begin() + s, p.arrows.end()}};
      terms.emplace_back(left.arrows.empty() ? vertex_of(p.source) : index_of(left),
                         right.arrows.empty() ? vertex_of(mid) : index_of(right), k, 1);
    }
  }
  return detail::make_item<K>("path-" + q.name + "-" + std::to_string(max_len), ItemKind::theorem, Group::cyclic(q.group_order),
                              deg, labels, terms, eps, {{"quiver", q.name}, {"max_len", std::to_string(max_len)}});
}

/// count group-likes g_i with Delta(g_i) = g_i (x) g_i. A group-like is forced
/// into the identity degree, so the grading group only enlarges the twist orbits.
template <class K>
CorpusItem<K> gen_group_like(int count, int order = 1) {
  if (count < 1) throw PreconditionError("group-like needs count >= 1");
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long>> terms;
  std::vector<std::string> labels;
  std::vector<long> eps;
  for (int i = 0; i < count; ++i) {
    labels.push_back("g" + std::to_string(i + 1));
    eps.push_back(1);
    terms.emplace_back(i, i, i, 1);
  }
  return detail::make_item<K>("group-like-" + std::to_string(count) + "-z" + std::to_string(order), ItemKind::theorem,
                              Group::cyclic(order), std::vector<int>(count, 0), labels, terms, eps,
                              {{"count", std::to_string(count)}, {"grading", "Z/" + std::to_string(order)}});
}

/// Dual of the group algebra k[Z/n] with b_g in degree g. Its only graded simple
/// is fixed by every degree shift, so (C1) fails for n > 1.
template <class K>
CorpusItem<K> gen_group_dual(int order) {
  if (order < 2) throw PreconditionError("group-dual needs order >= 2");
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long>> terms;
  std::vector<std::string> labels;
  std::vector<int> deg;
  std::vector<long> eps;
  for (int m = 0; m < order; ++m) {
    labels.push_back("d" + std::to_string(m));
    deg.push_back(m);
    eps.push_back(m == 0);
    for (int i = 0; i < order; ++i) terms.emplace_back(i, ((m - i) % order + order) % order, m, 1);
  }
  return detail::make_item<K>("group-dual-" + std::to_string(order), ItemKind::c1_failure, Group::cyclic(order), deg, labels,
                              terms, eps, {{"order", std::to_string(order)}});
}

/// Dual of Q[t]/(t^2 - 2): Delta(c0) = c0 (x) c0 + 2 c1 (x) c1, Delta(c1) = c0 (x) c1 + c1 (x) c0.
template <class K>
CorpusItem<K> gen_nonsplit() {
  return detail::make_item<K>("nonsplit", ItemKind::nonsplit, Group::trivial(), {0, 0}, {"c0", "c1"},
                              {{0, 0, 0, 1}, {1, 1, 0, 2}, {0, 1, 1, 1}, {1, 0, 1, 1}}, {1, 0},
                              {{"algebra", "Q[t]/(t^2-2)"}});
}

/// Dual of M_2 with one structure constant doubled: fails coassociativity.
template <class K>
CorpusItem<K> gen_perturbed() {
  auto base = gen_matrix_dual<K>(2);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long>> terms;
  for (const auto& t : base.coalgebra->terms()) {
    long c = 1;
    if (t.left == 1 && t.right == 2 && t.out == 0) c = 2;
    terms.emplace_back(t.left, t.right, t.out, c);
  }
  return detail::make_item<K>("perturbed-matrix-dual-2", ItemKind::perturbed, Group::trivial(), {0, 0, 0, 0}, base.labels, terms,
                              {1, 0, 0, 1}, {{"perturbation", "coefficient of e12 (x) e21 in Delta(e11) set to 2"}});
}

/// Dispatch by CLI name.
template <class K>
CorpusItem<K> generate(const std::string& name, const std::vector<int>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() < n) throw PreconditionError("generator '" + name + "' needs " + std::to_string(n) + " parameter(s)");
  };
  if (name == "matrix-dual") return need(1), gen_matrix_dual<K>(params[0]);
  if (name == "divided-power") return need(1), gen_divided_power<K>(params[0]);
  if (name == "super") return gen_super_dual<K>();
  if (name == "z3-orbit") return gen_z3_orbit<K>();
  if (name == "group-like") return need(1), gen_group_like<K>(params[0], params.size() > 1 ? params[1] : 1);
  if (name == "group-dual") return need(1), gen_group_dual<K>(params[0]);
  if (name == "nonsplit") return gen_nonsplit<K>();
  if (name == "perturbed") return gen_perturbed<K>();
  throw PreconditionError("unknown generator '" + name + "'");
}

template <class K>
CorpusItem<K> generate_path(const std::string& quiver, int max_len) {
  return gen_path_coalgebra<K>(Quiver::named(quiver), max_len);
}

/// The verification corpus, in a fixed order.
template <class K>
std::vector<CorpusItem<K>> standard_corpus(bool include_failures = true) {
  std::vector<CorpusItem<K>> out;
  for (int n = 1; n <= 3; ++n) out.push_back(gen_matrix_dual<K>(n));
  for (int n = 0; n <= 4; ++n) out.push_back(gen_divided_power<K>(n));
  out.push_back(generate_path<K>("a2", 1));
  out.push_back(generate_path<K>("a3", 2));
  out.push_back(generate_path<K>("kronecker", 1));
  out.push_back(generate_path<K>("loop", 3));
  out.push_back(generate_path<K>("super-a2", 1));
  out.push_back(gen_super_dual<K>());
  out.push_back(gen_z3_orbit<K>());
  out.push_back(gen_group_like<K>(2, 2));
  if (include_failures) {
    out.push_back(gen_group_dual<K>(2));
    if (K::characteristic() == 0) out.push_back(gen_nonsplit<K>());
  }
  return out;
}

}  // namespace coradical
