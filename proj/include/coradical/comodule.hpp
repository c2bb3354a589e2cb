#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "coradical/coalgebra.hpp"

namespace coradical {

enum class Side { left, right };

inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

/// Graded comodule over a coalgebra C, stored as one matrix per basis vector b_k:
///   right: a(v_j) = sum_{i,k} ops[k](i, j) v_i (x) b_k
///   left:  a(v_j) = sum_{i,k} ops[k](i, j) b_k (x) v_i
/// For a right comodule, b_k* acts on V by ops[k]; this is the C*-module structure.
template <class K>
struct Comodule {
  CoalgebraPtr<K> coalgebra;
  Side side = Side::right;
  GradedSpace space;
  std::vector<Matrix<K>> ops;

  std::size_t dim() const { return space.dim(); }

  /// sum_k x_k ops[k]
  Matrix<K> op(const Vec<K>& x) const {
    Matrix<K> m(dim(), dim());
    for (std::size_t k = 0; k < ops.size(); ++k)
      if (!x[k].is_zero()) m += x[k] * ops[k];
    return m;
  }

  GradedMap<K> coaction() const {
    const std::size_t n = coalgebra->dim(), m = dim();
    Matrix<K> a(m * n, m);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          const std::size_t row = side == Side::right ? i * n + k : k * m + i;
          a(row, j) = ops[k](i, j);
        }
    const GradedSpace target =
        side == Side::right ? tensor(space, coalgebra->space()) : tensor(coalgebra->space(), space);
    return GradedMap<K>(space, target, std::move(a));
  }
};

/// C-bicomodule: left and right coactions in the conventions of Comodule.
template <class K>
struct Bicomodule {
  CoalgebraPtr<K> coalgebra;
  GradedSpace space;
  std::vector<Matrix<K>> left_ops, right_ops;

  std::size_t dim() const { return space.dim(); }
};

template <class K>
Comodule<K> from_coaction(CoalgebraPtr<K> c, Side side, const GradedMap<K>& a) {
  const std::size_t n = c->dim(), m = a.source().dim();
  if (a.matrix().rows() != m * n) throw PreconditionError("coaction has wrong shape");
  Comodule<K> v{c, side, a.source(), std::vector<Matrix<K>>(n, Matrix<K>(m, m))};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        v.ops[k](i, j) = a.matrix()(side == Side::right ? i * n + k : k * m + i, j);
  return v;
}

template <class K>
Comodule<K> regular_comodule(CoalgebraPtr<K> c, Side side) {
  auto ops = side == Side::right ? c->right_regular_ops() : c->left_regular_ops();
  return Comodule<K>{c, side, c->space(), std::move(ops)};
}

template <class K>
Bicomodule<K> regular_bicomodule(CoalgebraPtr<K> c) {
  return Bicomodule<K>{c, c->space(), c->left_regular_ops(), c->right_regular_ops()};
}

namespace detail {

template <class K>
std::string coaction_failure(const Coalgebra<K>& c, const GradedSpace& v, const std::vector<Matrix<K>>& ops, Side side) {
  const std::size_t n = c.dim(), m = v.dim();
  const auto& g = *v.group;
  if (ops.size() != n) return "expected one matrix per basis vector of C";
  for (const auto& o : ops)
    if (o.rows() != m || o.cols() != m) return "coaction matrix has wrong shape";
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (ops[k](i, j).is_zero()) continue;
        const int ck = c.space().deg[k];
        const int expect = side == Side::right ? g.mul(v.deg[i], ck) : g.mul(ck, v.deg[i]);
        if (expect != v.deg[j]) return "coaction is not degree preserving at v" + std::to_string(j);
      }
  // right: rho_l rho_k = sum_m D(l,k;m) rho_m;  left: lambda_k lambda_l = sum_m D(l,k;m) lambda_m
  std::vector<std::vector<Matrix<K>>> rhs(n, std::vector<Matrix<K>>(n, Matrix<K>(m, m)));
  for (const auto& t : c.terms()) rhs[t.left][t.right] += t.coef * ops[t.out];
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k < n; ++k) {
      const auto lhs = side == Side::right ? ops[l] * ops[k] : ops[k] * ops[l];
      if (lhs != rhs[l][k])
        return "coassociativity of the coaction fails at (b" + std::to_string(l) + ", b" + std::to_string(k) + ")";
    }
  Matrix<K> id(m, m);
  for (std::size_t k = 0; k < n; ++k)
    if (!c.counit()[k].is_zero()) id += c.counit()[k] * ops[k];
  if (id != Matrix<K>::identity(m)) return "counit law of the coaction fails";
  return {};
}

template <class K>
Matrix<K> combine(const std::vector<Matrix<K>>& ops, const Vec<K>& x, std::size_t m) {
  Matrix<K> out(m, m);
  for (std::size_t k = 0; k < ops.size(); ++k)
    if (!x[k].is_zero()) out += x[k] * ops[k];
  return out;
}

/// Basis of graded F: V -> W with F A_k = B_k F for every paired family.
template <class K>
std::vector<Matrix<K>> hom_solve(const GradedSpace& v, const GradedSpace& w,
                                 const std::vector<std::pair<const std::vector<Matrix<K>>*,
                                                             const std::vector<Matrix<K>>*>>& families) {
  const std::size_t mv = v.dim(), mw = w.dim();
  std::vector<std::vector<long>> index(mw, std::vector<long>(mv, -1));
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t i = 0; i < mw; ++i)
    for (std::size_t j = 0; j < mv; ++j)
      if (w.deg[i] == v.deg[j]) {
        index[i][j] = static_cast<long>(unknowns.size());
        unknowns.emplace_back(i, j);
      }
  const std::size_t u = unknowns.size();
  if (u == 0) return {};
  std::vector<Vec<K>> rows;
  for (const auto& [fv, fw] : families)
    for (std::size_t k = 0; k < fv->size(); ++k) {
      const auto& a = (*fv)[k];
      const auto& b = (*fw)[k];
      if (a.is_zero() && b.is_zero()) continue;
      // (B F - F A)(i, j)
      for (std::size_t i = 0; i < mw; ++i)
        for (std::size_t j = 0; j < mv; ++j) {
          Vec<K> row(u, K(0));
          bool any = false;
          for (std::size_t l = 0; l < mw; ++l)
            if (index[l][j] >= 0 && !b(i, l).is_zero()) {
              row[index[l][j]] += b(i, l);
              any = true;
            }
          for (std::size_t l = 0; l < mv; ++l)
            if (index[i][l] >= 0 && !a(l, j).is_zero()) {
              row[index[i][l]] -= a(l, j);
              any = true;
            }
          if (any) rows.push_back(std::move(row));
        }
    }
  Matrix<K> sys(rows.size(), u);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < u; ++c) sys(r, c) = rows[r][c];
  const auto ker = kernel_basis(sys);
  std::vector<Matrix<K>> out;
  for (std::size_t s = 0; s < ker.cols(); ++s) {
    Matrix<K> f(mw, mv);
    for (std::size_t t = 0; t < u; ++t) f(unknowns[t].first, unknowns[t].second) = ker(t, s);
    out.push_back(std::move(f));
  }
  return out;
}

/// Homogeneous basis of an invariant graded subspace, and the restricted operators.
template <class K>
std::pair<GradedSpace, std::vector<std::vector<Matrix<K>>>> restrict_to(const GradedSpace& v,
                                                                         const std::vector<std::vector<Matrix<K>>>& fams,
                                                                         const Matrix<K>& basis, Matrix<K>& hbasis) {
  hbasis = homogeneous_basis(v, basis);
  if (hbasis.cols() != rank(basis)) throw PreconditionError("subspace is not graded");
  std::vector<std::vector<Matrix<K>>> out;
  for (const auto& fam : fams) {
    std::vector<Matrix<K>> ops;
    for (const auto& o : fam) ops.push_back(coordinates(hbasis, o * hbasis));
    out.push_back(std::move(ops));
  }
  return {GradedSpace(v.group, degrees_of_basis(v, hbasis)), std::move(out)};
}

template <class K>
std::pair<GradedSpace, std::vector<std::vector<Matrix<K>>>> quotient_by(const GradedSpace& v,
                                                                         const std::vector<std::vector<Matrix<K>>>& fams,
                                                                         const Reducer<K>& red) {
  std::vector<int> deg;
  for (auto c : red.complement()) deg.push_back(v.deg[c]);
  const auto lift = red.lift_basis();
  std::vector<std::vector<Matrix<K>>> out;
  for (const auto& fam : fams) {
    std::vector<Matrix<K>> ops;
    for (const auto& o : fam) ops.push_back(red.quotient_coords(o * lift));
    out.push_back(std::move(ops));
  }
  return {GradedSpace(v.group, std::move(deg)), std::move(out)};
}

/// sigma_i = {x : T x in sigma_{i-1} for every T}; sigma_0 = 0.
template <class K>
Filtration<K> socle_chain(const GradedSpace& v, const std::vector<Matrix<K>>& killers) {
  const std::size_t m = v.dim();
  Filtration<K> f;
  f.chain.push_back(empty_basis<K>(m));
  while (f.chain.back().cols() < m) {
    const Reducer<K> red(m, f.chain.back());
    Matrix<K> stacked(0, m);
    for (const auto& t : killers) stacked = vcat(stacked, red.quotient_coords(t));
    Matrix<K> next = stacked.rows() == 0 ? Matrix<K>::identity(m) : kernel_basis(stacked);
    Matrix<K> h = homogeneous_basis(v, next);
    if (h.cols() != next.cols()) throw VerificationError("socle layer is not graded");
    if (h.cols() <= f.chain.back().cols()) throw VerificationError("socle series stalled; the acting ideal is not nilpotent");
    f.chain.push_back(std::move(h));
  }
  return f;
}

/// rad^0 = V, rad^{i+1} = sum_T T(rad^i); stops at 0.
template <class K>
Filtration<K> radical_chain(const GradedSpace& v, const std::vector<Matrix<K>>& killers) {
  const std::size_t m = v.dim();
  Filtration<K> f;
  f.chain.push_back(Matrix<K>::identity(m));
  while (f.chain.back().cols() > 0) {
    Matrix<K> img(m, 0);
    for (const auto& t : killers) img = hcat(img, t * f.chain.back());
    Matrix<K> h = homogeneous_basis(v, image_basis(img));
    if (h.cols() >= f.chain.back().cols()) throw VerificationError("radical series stalled; the acting ideal is not nilpotent");
    f.chain.push_back(std::move(h));
  }
  return f;
}

template <class K>
std::vector<Matrix<K>> radical_operators(const Coalgebra<K>& c, const std::vector<Matrix<K>>& ops, std::size_t m) {
  const auto& j = c.radical();
  std::vector<Matrix<K>> out;
  for (std::size_t s = 0; s < j.cols(); ++s) out.push_back(combine(ops, j.col(s), m));
  return out;
}

}  // namespace detail

template <class K>
CheckReport<K> check_comodule(const Comodule<K>& v) {
  auto msg = detail::coaction_failure(*v.coalgebra, v.space, v.ops, v.side);
  if (!msg.empty()) return {false, std::string(side_name(v.side)) + " comodule: " + msg};
  return {};
}

template <class K>
CheckReport<K> check_bicomodule(const Bicomodule<K>& x) {
  auto msg = detail::coaction_failure(*x.coalgebra, x.space, x.left_ops, Side::left);
  if (!msg.empty()) return {false, "left coaction: " + msg};
  msg = detail::coaction_failure(*x.coalgebra, x.space, x.right_ops, Side::right);
  if (!msg.empty()) return {false, "right coaction: " + msg};
  for (std::size_t k = 0; k < x.left_ops.size(); ++k)
    for (std::size_t l = 0; l < x.right_ops.size(); ++l)
      if (x.left_ops[k] * x.right_ops[l] != x.right_ops[l] * x.left_ops[k])
        return {false, "left and right coactions do not commute at (b" + std::to_string(k) + ", b" + std::to_string(l) + ")"};
  return {};
}

/// Module over C*: for right comodules b_k* acts by ops[k] from the left, for
/// left comodules it acts by ops[k] from the right.
template <class K>
std::vector<Matrix<K>> to_dual_module(const Comodule<K>& v) {
  return v.ops;
}

template <class K>
Comodule<K> dual_comodule(const Comodule<K>& v) {
  Comodule<K> d{v.coalgebra, v.side == Side::right ? Side::left : Side::right, dual(v.space), {}};
  for (const auto& o : v.ops) d.ops.push_back(o.transpose());
  return d;
}

template <class K>
Bicomodule<K> dual_bicomodule(const Bicomodule<K>& x) {
  Bicomodule<K> d{x.coalgebra, dual(x.space), {}, {}};
  for (const auto& o : x.right_ops) d.left_ops.push_back(o.transpose());
  for (const auto& o : x.left_ops) d.right_ops.push_back(o.transpose());
  return d;
}

/// Right comodules: S_g (x) V. Left comodules: V (x) S_g.
template <class K>
Comodule<K> twist(int g, const Comodule<K>& v) {
  Comodule<K> t = v;
  t.space = v.side == Side::right ? picard_twist(g, v.space) : picard_twist_right(v.space, g);
  return t;
}

template <class K>
Comodule<K> twist(const GradedSpace& s, const Comodule<K>& v) {
  if (s.dim() != 1) throw PreconditionError("twist needs a one-dimensional graded space");
  return twist(s.deg[0], v);
}

/// W (x) V for a left comodule W and a right comodule V, W index major.
template <class K>
Bicomodule<K> boxtimes(const Comodule<K>& w, const Comodule<K>& v) {
  if (w.side != Side::left || v.side != Side::right) throw PreconditionError("boxtimes needs a left and a right comodule");
  Bicomodule<K> x{w.coalgebra, tensor(w.space, v.space), {}, {}};
  const auto iw = Matrix<K>::identity(w.dim()), iv = Matrix<K>::identity(v.dim());
  for (const auto& o : w.ops) x.left_ops.push_back(kron(o, iv));
  for (const auto& o : v.ops) x.right_ops.push_back(kron(iw, o));
  return x;
}

template <class K>
Comodule<K> direct_sum(const Comodule<K>& a, const Comodule<K>& b) {
  if (a.side != b.side) throw PreconditionError("direct sum of comodules on different sides");
  std::vector<int> deg = a.space.deg;
  deg.insert(deg.end(), b.space.deg.begin(), b.space.deg.end());
  Comodule<K> s{a.coalgebra, a.side, GradedSpace(a.space.group, deg), {}};
  for (std::size_t k = 0; k < a.ops.size(); ++k) {
    Matrix<K> m(a.dim() + b.dim(), a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a.ops[k](i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) m(a.dim() + i, a.dim() + j) = b.ops[k](i, j);
    s.ops.push_back(std::move(m));
  }
  return s;
}

/// Subcomodule on an invariant graded subspace. `inclusion` receives the
/// homogeneous basis actually used.
template <class K>
Comodule<K> subcomodule(const Comodule<K>& v, const Matrix<K>& basis, Matrix<K>* inclusion = nullptr) {
  Matrix<K> h;
  auto [space, fams] = detail::restrict_to(v.space, {v.ops}, basis, h);
  if (inclusion) *inclusion = h;
  return Comodule<K>{v.coalgebra, v.side, std::move(space), std::move(fams[0])};
}

template <class K>
Comodule<K> quotient_comodule(const Comodule<K>& v, const Matrix<K>& sub) {
  auto [space, fams] = detail::quotient_by(v.space, {v.ops}, Reducer<K>(v.dim(), sub));
  return Comodule<K>{v.coalgebra, v.side, std::move(space), std::move(fams[0])};
}

template <class K>
Bicomodule<K> sub_bicomodule(const Bicomodule<K>& x, const Matrix<K>& basis, Matrix<K>* inclusion = nullptr) {
  Matrix<K> h;
  auto [space, fams] = detail::restrict_to(x.space, {x.left_ops, x.right_ops}, basis, h);
  if (inclusion) *inclusion = h;
  return Bicomodule<K>{x.coalgebra, std::move(space), std::move(fams[0]), std::move(fams[1])};
}

template <class K>
Bicomodule<K> quotient_bicomodule(const Bicomodule<K>& x, const Matrix<K>& sub) {
  auto [space, fams] = detail::quotient_by(x.space, {x.left_ops, x.right_ops}, Reducer<K>(x.dim(), sub));
  return Bicomodule<K>{x.coalgebra, std::move(space), std::move(fams[0]), std::move(fams[1])};
}

/// upper / lower as a bicomodule, both invariant with lower inside upper.
template <class K>
Bicomodule<K> subquotient(const Bicomodule<K>& x, const Matrix<K>& upper, const Matrix<K>& lower) {
  const Reducer<K> red(x.dim(), lower);
  auto [space, fams] = detail::quotient_by(x.space, {x.left_ops, x.right_ops}, red);
  Bicomodule<K> q{x.coalgebra, std::move(space), std::move(fams[0]), std::move(fams[1])};
  return sub_bicomodule(q, image_basis(red.quotient_coords(upper)));
}

template <class K>
Comodule<K> subquotient(const Comodule<K>& v, const Matrix<K>& upper, const Matrix<K>& lower) {
  const Reducer<K> red(v.dim(), lower);
  auto q = quotient_comodule(v, lower);
  return subcomodule(q, image_basis(red.quotient_coords(upper)));
}

/// Smallest subcomodule containing the given vectors.
template <class K>
Matrix<K> generated_subcomodule(const Comodule<K>& v, const Matrix<K>& vectors) {
  Matrix<K> cur = image_basis(vectors);
  for (;;) {
    Matrix<K> all = cur;
    for (const auto& o : v.ops) all = hcat(all, o * cur);
    Matrix<K> next = image_basis(all);
    if (next.cols() == cur.cols()) return homogeneous_basis(v.space, cur);
    cur = std::move(next);
  }
}

template <class K>
std::vector<Matrix<K>> hom_space(const Comodule<K>& v, const Comodule<K>& w) {
  if (v.side != w.side) throw PreconditionError("hom between comodules on different sides");
  return detail::hom_solve<K>(v.space, w.space, {{&v.ops, &w.ops}});
}

template <class K>
std::vector<Matrix<K>> hom_space(const Bicomodule<K>& x, const Bicomodule<K>& y) {
  return detail::hom_solve<K>(x.space, y.space, {{&x.left_ops, &y.left_ops}, {&x.right_ops, &y.right_ops}});
}

template <class K>
bool is_comodule_map(const Comodule<K>& v, const Comodule<K>& w, const Matrix<K>& f) {
  try {
    GradedMap<K>(v.space, w.space, f);
  } catch (const PreconditionError&) {
    return false;
  }
  for (std::size_t k = 0; k < v.ops.size(); ++k)
    if (f * v.ops[k] != w.ops[k] * f) return false;
  return true;
}

/// Socle series through the radical of C*: sigma_i = {x : J x in sigma_{i-1}}.
template <class K>
Filtration<K> socle_series(const Comodule<K>& v) {
  return detail::socle_chain(v.space, detail::radical_operators(*v.coalgebra, v.ops, v.dim()));
}

/// J(C* (x) C*op) = J (x) C*op + C* (x) J, so both coactions are used.
template <class K>
Filtration<K> socle_series(const Bicomodule<K>& x) {
  auto killers = detail::radical_operators(*x.coalgebra, x.left_ops, x.dim());
  for (auto& t : detail::radical_operators(*x.coalgebra, x.right_ops, x.dim())) killers.push_back(std::move(t));
  return detail::socle_chain(x.space, killers);
}

template <class K>
Filtration<K> radical_series(const Comodule<K>& v) {
  return detail::radical_chain(v.space, detail::radical_operators(*v.coalgebra, v.ops, v.dim()));
}

template <class K>
Filtration<K> radical_series(const Bicomodule<K>& x) {
  auto killers = detail::radical_operators(*x.coalgebra, x.left_ops, x.dim());
  for (auto& t : detail::radical_operators(*x.coalgebra, x.right_ops, x.dim())) killers.push_back(std::move(t));
  return detail::radical_chain(x.space, killers);
}

template <class K>
std::size_t loewy_length(const Comodule<K>& v) {
  return socle_series(v).length();
}

template <class K>
std::size_t loewy_length(const Bicomodule<K>& x) {
  return socle_series(x).length();
}

/// Semisimple with one-dimensional endomorphisms.
template <class K>
bool is_simple(const Comodule<K>& v) {
  return v.dim() > 0 && socle_series(v).length() == 1 && hom_space(v, v).size() == 1;
}

template <class K>
bool is_simple(const Bicomodule<K>& x) {
  return x.dim() > 0 && socle_series(x).length() == 1 && hom_space(x, x).size() == 1;
}

/// Graded simple right comodule together with the primitive idempotent of the
/// graded dual algebra that picks it out.
template <class K>
struct SimpleComodule {
  Comodule<K> rep;
  Vec<K> idempotent;
  std::size_t block = 0;
  std::string label;

  std::vector<int> degree_multiset() const {
    auto d = rep.space.deg;
    std::sort(d.begin(), d.end());
    return d;
  }
};

/// Operator of an element of the graded dual algebra, (k, g) -> rho_k P_g.
template <class K>
Matrix<K> graded_operator(const Comodule<K>& v, const Vec<K>& x) {
  const std::size_t order = static_cast<std::size_t>(v.space.group->order());
  Matrix<K> out(v.dim(), v.dim());
  for (std::size_t idx = 0; idx < x.size(); ++idx) {
    if (x[idx].is_zero()) continue;
    const std::size_t k = idx / order;
    const int g = static_cast<int>(idx % order);
    for (std::size_t i = 0; i < v.dim(); ++i)
      for (std::size_t j = 0; j < v.dim(); ++j)
        if (v.space.deg[j] == g && !v.ops[k](i, j).is_zero()) out(i, j) += x[idx] * v.ops[k](i, j);
  }
  return out;
}

/// All graded simple right comodules up to isomorphism, ordered by
/// (dimension, sorted degrees, block). Each is L = Be / J(B)e for a primitive
/// idempotent e of the graded dual algebra B, with certificates checked.
template <class K>
std::vector<SimpleComodule<K>> simple_comodules(const CoalgebraPtr<K>& c) {
  const auto& b = c->graded_right_algebra();
  const auto& w = c->graded_right_wedderburn();
  if (!w.split) throw PreconditionError("graded dual algebra is not split: " + w.diagnostic);
  const std::size_t order = static_cast<std::size_t>(c->group()->order());
  const std::size_t n = c->dim();
  std::vector<SimpleComodule<K>> out;
  std::size_t total = 0;
  for (std::size_t blk = 0; blk < w.block_representative.size(); ++blk) {
    const Vec<K>& e = w.idempotents[w.block_representative[blk]];
    const auto re = b.right_mult(e);
    const Matrix<K> be = image_basis(re);
    const Matrix<K> jbe = image_basis(re * w.radical);
    const Reducer<K> red(be.cols(), coordinates(be, jbe));
    const Matrix<K> lifted = be * red.lift_basis();
    const std::size_t q = red.quotient_dim();
    std::vector<Matrix<K>> act;
    for (std::size_t t = 0; t < b.dim(); ++t) act.push_back(red.quotient_coords(coordinates(be, b.left[t] * lifted)));
    Matrix<K> t(q, 0);
    std::vector<int> deg;
    for (std::size_t g = 0; g < order; ++g) {
      Matrix<K> p(q, q);
      for (std::size_t k = 0; k < n; ++k)
        if (!c->counit()[k].is_zero()) p += c->counit()[k] * act[k * order + g];
      const auto img = image_basis(p);
      t = hcat(t, img);
      deg.insert(deg.end(), img.cols(), static_cast<int>(g));
    }
    if (t.cols() != q) throw VerificationError("degree projectors do not decompose a simple module");
    Comodule<K> l{c, Side::right, GradedSpace(c->group(), deg), {}};
    for (std::size_t k = 0; k < n; ++k) {
      Matrix<K> rho(q, q);
      for (std::size_t g = 0; g < order; ++g) rho += act[k * order + g];
      l.ops.push_back(coordinates(t, rho * t));
    }
    const auto chk = check_comodule(l);
    if (!chk.ok) throw VerificationError("simple comodule construction: " + chk.failure);
    if (!is_simple(l)) throw VerificationError("constructed comodule is not simple");
    total += q * q;
    out.push_back({std::move(l), e, blk, {}});
  }
  if (total + w.radical.cols() != b.dim()) throw VerificationError("simple comodules do not exhaust the semisimple quotient");
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::make_tuple(x.rep.dim(), x.degree_multiset(), x.block) < std::make_tuple(y.rep.dim(), y.degree_multiset(), y.block);
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].label = "L" + std::to_string(i);
  return out;
}

/// Index of the simple isomorphic to a simple comodule s.
template <class K>
std::size_t identify_simple(const Comodule<K>& s, const std::vector<SimpleComodule<K>>& simples) {
  for (std::size_t i = 0; i < simples.size(); ++i)
    if (simples[i].rep.dim() == s.dim() && !hom_space(simples[i].rep, s).empty()) return i;
  throw VerificationError("comodule is not isomorphic to any listed simple");
}

/// [V : L] = rank of the primitive idempotent of L acting on V.
template <class K>
std::size_t composition_multiplicity(const Comodule<K>& v, const SimpleComodule<K>& l) {
  if (v.side != Side::right) return composition_multiplicity(dual_comodule(v), l);
  return rank(graded_operator(v, l.idempotent));
}

/// Sum of images of all maps from simples into V.
template <class K>
Matrix<K> socle_bruteforce(const Comodule<K>& v, const std::vector<SimpleComodule<K>>& simples) {
  Matrix<K> acc(v.dim(), 0);
  for (const auto& s : simples) {
    const Comodule<K> rep = v.side == Side::right ? s.rep : dual_comodule(s.rep);
    for (const auto& f : hom_space(rep, v)) acc = hcat(acc, f);
  }
  return homogeneous_basis(v.space, image_basis(acc));
}

/// dim Ext^1(l, l2) in graded right comodules, i.e. extensions 0 -> l2 -> E -> l -> 0.
/// E has coaction [[rho2, X], [0, rho]]; cocycles X modulo coboundaries.
template <class K>
std::size_t ext1(const Comodule<K>& l, const Comodule<K>& l2) {
  const auto& c = *l.coalgebra;
  const auto& g = *l.space.group;
  const std::size_t n = c.dim(), m1 = l.dim(), m2 = l2.dim();
  // unknown X_k(i, j) allowed when deg2_i c_k = deg1_j
  std::vector<long> index(n * m2 * m1, -1);
  std::size_t u = 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < m2; ++i)
      for (std::size_t j = 0; j < m1; ++j)
        if (g.mul(l2.space.deg[i], c.space().deg[k]) == l.space.deg[j]) index[(k * m2 + i) * m1 + j] = static_cast<long>(u++);
  if (u == 0) return 0;
  auto at = [&](std::size_t k, std::size_t i, std::size_t j) { return index[(k * m2 + i) * m1 + j]; };
  // rho2_l X_k + X_l rho_k - sum_m D(l,k;m) X_m = 0, and sum_k eps_k X_k = 0.
  std::vector<Vec<K>> rows;
  std::vector<std::vector<std::vector<std::pair<std::size_t, K>>>> dterms(n, std::vector<std::vector<std::pair<std::size_t, K>>>(n));
  for (const auto& t : c.terms()) dterms[t.left][t.right].push_back({t.out, t.coef});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < m2; ++i)
        for (std::size_t j = 0; j < m1; ++j) {
          Vec<K> row(u, K(0));
          bool any = false;
          for (std::size_t p = 0; p < m2; ++p)
            if (at(k, p, j) >= 0 && !l2.ops[a](i, p).is_zero()) row[at(k, p, j)] += l2.ops[a](i, p), any = true;
          for (std::size_t p = 0; p < m1; ++p)
            if (at(a, i, p) >= 0 && !l.ops[k](p, j).is_zero()) row[at(a, i, p)] += l.ops[k](p, j), any = true;
          for (const auto& [mm, coef] : dterms[a][k])
            if (at(mm, i, j) >= 0) row[at(mm, i, j)] -= coef, any = true;
          if (any) rows.push_back(std::move(row));
        }
  for (std::size_t i = 0; i < m2; ++i)
    for (std::size_t j = 0; j < m1; ++j) {
      Vec<K> row(u, K(0));
      bool any = false;
      for (std::size_t k = 0; k < n; ++k)
        if (!c.counit()[k].is_zero() && at(k, i, j) >= 0) row[at(k, i, j)] += c.counit()[k], any = true;
      if (any) rows.push_back(std::move(row));
    }
  Matrix<K> sys(rows.size(), u);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t s = 0; s < u; ++s) sys(r, s) = rows[r][s];
  const std::size_t cocycles = u - rank(sys);
  // coboundaries X_k = rho2_k Y - Y rho_k for graded Y: l -> l2
  std::vector<Vec<K>> bnd;
  for (std::size_t i = 0; i < m2; ++i)
    for (std::size_t j = 0; j < m1; ++j) {
      if (l2.space.deg[i] != l.space.deg[j]) continue;
      Matrix<K> y(m2, m1);
      y(i, j) = K(1);
      Vec<K> v(u, K(0));
      for (std::size_t k = 0; k < n; ++k) {
        const auto xk = l2.ops[k] * y - y * l.ops[k];
        for (std::size_t p = 0; p < m2; ++p)
          for (std::size_t q = 0; q < m1; ++q)
            if (!xk(p, q).is_zero()) {
              if (at(k, p, q) < 0) throw VerificationError("coboundary has the wrong degree");
              v[at(k, p, q)] = xk(p, q);
            }
      }
      bnd.push_back(std::move(v));
    }
  const std::size_t boundaries = bnd.empty() ? 0 : rank(Matrix<K>::from_columns(u, bnd));
  return cocycles - boundaries;
}

/// Same dimension read off the graded dual algebra: dim e2 (J/J^2) e.
template <class K>
std::size_t ext1_via_radical(const Coalgebra<K>& c, const SimpleComodule<K>& l, const SimpleComodule<K>& l2) {
  const auto& b = c.graded_right_algebra();
  const auto& w = c.graded_right_wedderburn();
  const auto sandwich = b.left_mult(l2.idempotent) * b.right_mult(l.idempotent);
  const auto j2 = product_span(b, w.radical, w.radical);
  return rank(sandwich * w.radical) - rank(sandwich * j2);
}

}  // namespace coradical
