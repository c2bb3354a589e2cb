#pragma once

#include <utility>
#include <vector>

#include "coradical/comodule.hpp"

namespace coradical {

/// c_V : V* (x) V -> C, v*_j (x) v_l -> sum_k rho_k(j, l) b_k.
template <class K>
struct MatrixCoeffMap {
  Bicomodule<K> source;
  CoalgebraPtr<K> target;
  GradedMap<K> map;
};

/// Both contractions, (ev (x) id)(id (x) a_V) and (id (x) ev)(a_{V*} (x) id),
/// are assembled from their factors and must agree; the result is checked to
/// intertwine the bicomodule structures.
template <class K>
MatrixCoeffMap<K> matrix_coefficients(const Comodule<K>& v) {
  if (v.side != Side::right) throw PreconditionError("matrix coefficients need a right comodule");
  const auto& c = v.coalgebra;
  const std::size_t n = c->dim();
  const auto ev = evaluation<K>(v.space);
  const auto id_c = GradedMap<K>::identity(c->space());
  const auto id_v = GradedMap<K>::identity(v.space);
  const auto id_vs = GradedMap<K>::identity(dual(v.space));
  const Comodule<K> vs = dual_comodule(v);

  // V* (x) V -> V* (x) (V (x) C) -> C
  const Matrix<K> first = kron(ev.matrix(), id_c.matrix()) * kron(id_vs.matrix(), v.coaction().matrix());
  // V* (x) V -> (C (x) V*) (x) V -> C
  const Matrix<K> second = kron(id_c.matrix(), ev.matrix()) * kron(vs.coaction().matrix(), id_v.matrix());
  if (first != second) throw VerificationError("matrix coefficient formulas disagree");

  MatrixCoeffMap<K> out{boxtimes(vs, v), c, GradedMap<K>(tensor(dual(v.space), v.space), c->space(), first)};
  const auto lc = c->left_regular_ops();
  const auto rc = c->right_regular_ops();
  for (std::size_t k = 0; k < n; ++k) {
    if (first * out.source.left_ops[k] != lc[k] * first) throw VerificationError("c_V does not intertwine left coactions");
    if (first * out.source.right_ops[k] != rc[k] * first) throw VerificationError("c_V does not intertwine right coactions");
  }
  return out;
}

/// Column span of c_V, a sub-bicomodule of C (closure asserted).
template <class K>
Matrix<K> image_c(const Comodule<K>& v) {
  const auto& c = *v.coalgebra;
  Matrix<K> img = homogeneous_basis(c.space(), image_basis(matrix_coefficients(v).map.matrix()));
  Matrix<K> moved(c.dim(), 0);
  for (const auto& o : c.left_regular_ops()) moved = hcat(moved, o * img);
  for (const auto& o : c.right_regular_ops()) moved = hcat(moved, o * img);
  if (!span_contains(img, moved)) throw VerificationError("image of c_V is not a sub-bicomodule");
  return img;
}

template <class K>
bool is_invariant(const Comodule<K>& v, const Matrix<K>& w) {
  Matrix<K> moved(v.dim(), 0);
  for (const auto& o : v.ops) moved = hcat(moved, o * w);
  return span_contains(w, moved);
}

/// W^perp (x) W inside ker c_V for a subcomodule W of V.
template <class K>
bool check_ker_perp(const Comodule<K>& v, const Matrix<K>& w) {
  if (!is_invariant(v, w)) throw PreconditionError("ker_perp: W is not a subcomodule");
  if (w.cols() == 0 || rank(w) == v.dim()) return true;
  const auto c = matrix_coefficients(v).map.matrix();
  const Matrix<K> wperp = kernel_basis(w.transpose());
  return (c * kron(wperp, w)).is_zero();
}

/// For V inside C: v -> eps|_V (x) v followed by c_V; equals the inclusion.
template <class K>
GradedMap<K> counit_embedding(const CoalgebraPtr<K>& c, const Matrix<K>& v_basis) {
  Matrix<K> incl;
  const auto v = subcomodule(regular_comodule(c, Side::right), v_basis, &incl);
  const std::size_t m = v.dim();
  Vec<K> eps_v(m, K(0));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < c->dim(); ++k) eps_v[j] += c->counit()[k] * incl(k, j);
  Matrix<K> e(m * m, m);
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t j = 0; j < m; ++j) e(j * m + l, l) = eps_v[j];
  const auto lift = GradedMap<K>(v.space, tensor(dual(v.space), v.space), e);
  const auto composite = matrix_coefficients(v).map.compose(lift);
  if (composite.matrix() != incl) throw VerificationError("counit embedding does not reproduce the inclusion");
  if (!span_contains(image_c(v), incl)) throw VerificationError("V is not inside the image of c_V");
  return composite;
}

/// (ll(V), ll(im c_V)): right-comodule socle series vs bicomodule socle series.
template <class K>
std::pair<std::size_t, std::size_t> loewy_length_image(const Comodule<K>& v) {
  const auto img = image_c(v);
  const auto x = sub_bicomodule(regular_bicomodule(v.coalgebra), img);
  return {loewy_length(v), loewy_length(x)};
}

/// Rank of c_W on L~ (x) W equals its dimension, for W with simple socle L.
/// L~ is spanned by the dual basis vectors at the pivot rows of the socle basis.
template <class K>
bool restricted_injectivity_check(const Comodule<K>& w) {
  const auto soc = socle_series(w).chain.at(1);
  if (!is_simple(subcomodule(w, soc))) throw PreconditionError("socle is not simple");
  const auto piv = echelon(soc.transpose()).pivots;
  const std::size_t m = w.dim();
  Matrix<K> dom(m * m, piv.size() * m);
  for (std::size_t p = 0; p < piv.size(); ++p)
    for (std::size_t l = 0; l < m; ++l) dom(piv[p] * m + l, p * m + l) = K(1);
  const auto c = matrix_coefficients(w).map.matrix();
  return rank(c * dom) == dom.cols();
}

/// c_V (id (x) f) == c_W (f* (x) id) on V* (x) W for a morphism f: W -> V.
template <class K>
bool matrix_coeff_square(const Comodule<K>& w, const Comodule<K>& v, const Matrix<K>& f) {
  if (!is_comodule_map(w, v, f)) throw PreconditionError("matrix_coeff_square: f is not a comodule map");
  const auto cv = matrix_coefficients(v).map.matrix();
  const auto cw = matrix_coefficients(w).map.matrix();
  return cv * kron(Matrix<K>::identity(v.dim()), f) == cw * kron(f.transpose(), Matrix<K>::identity(w.dim()));
}

/// im c_V == im c_{W1} + im c_{W2} when W1 + W2 = V.
template <class K>
bool check_image_sum(const Comodule<K>& v, const Matrix<K>& w1, const Matrix<K>& w2) {
  if (rank(hcat(w1, w2)) != v.dim()) throw PreconditionError("image sum: subcomodules do not span V");
  const auto i1 = w1.cols() ? image_c(subcomodule(v, w1)) : empty_basis<K>(v.coalgebra->dim());
  const auto i2 = w2.cols() ? image_c(subcomodule(v, w2)) : empty_basis<K>(v.coalgebra->dim());
  return span_equal(image_c(v), span_sum(i1, i2));
}

}  // namespace coradical
