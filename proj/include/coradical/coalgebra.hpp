#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "coradical/algebra.hpp"

namespace coradical {

/// One structure constant: Delta(b_out) has coefficient `coef` on b_left (x) b_right.
template <class K>
struct ComultTerm {
  std::size_t left, right, out;
  K coef;
};

/// Filtration by subspaces (columns are basis vectors). Ascending filtrations
/// start at 0; descending ones start at the whole space.
template <class K>
struct Filtration {
  std::vector<Matrix<K>> chain;

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& m : chain) d.push_back(m.cols());
    return d;
  }
  /// Number of strict steps, i.e. the Loewy length for socle and radical series.
  std::size_t length() const { return chain.empty() ? 0 : chain.size() - 1; }
};

/// Finite-dimensional coalgebra in G-graded vector spaces.
///
/// Values are immutable. The dual algebra, its radical and the Wedderburn data
/// of the graded dual algebra are computed on first use and shared by copies.
template <class K>
class Coalgebra {
 public:
  Coalgebra(GradedSpace space, std::vector<ComultTerm<K>> terms, Vec<K> counit, std::string name = {})
      : space_(std::move(space)), counit_(std::move(counit)), name_(std::move(name)) {
    const auto& g = *space_.group;
    if (counit_.size() != dim()) throw PreconditionError("counit has wrong length");
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, K> acc;
    for (auto& t : terms) {
      if (t.left >= dim() || t.right >= dim() || t.out >= dim()) throw PreconditionError("comultiplication index out of range");
      acc[{t.out, t.left, t.right}] += t.coef;
    }
    for (auto& [key, coef] : acc) {
      if (coef.is_zero()) continue;
      const auto [out, l, r] = key;
      if (g.mul(space_.deg[l], space_.deg[r]) != space_.deg[out])
        throw PreconditionError("comultiplication is not degree preserving at b" + std::to_string(out) + " -> b" +
                                std::to_string(l) + " (x) b" + std::to_string(r));
      terms_.push_back({l, r, out, coef});
    }
    for (std::size_t k = 0; k < dim(); ++k)
      if (!counit_[k].is_zero() && space_.deg[k] != g.identity())
        throw PreconditionError("counit is not degree preserving at b" + std::to_string(k));
  }

  std::size_t dim() const { return space_.dim(); }
  const GradedSpace& space() const { return space_; }
  const GroupPtr& group() const { return space_.group; }
  /// Sorted by (out, left, right), zero coefficients dropped.
  const std::vector<ComultTerm<K>>& terms() const { return terms_; }
  const Vec<K>& counit() const { return counit_; }
  const std::string& name() const { return name_; }

  GradedMap<K> comult_map() const {
    Matrix<K> m(dim() * dim(), dim());
    for (const auto& t : terms_) m(t.left * dim() + t.right, t.out) = t.coef;
    return GradedMap<K>(space_, tensor(space_, space_), std::move(m));
  }
  GradedMap<K> counit_map() const {
    Matrix<K> m(1, dim());
    for (std::size_t k = 0; k < dim(); ++k) m(0, k) = counit_[k];
    return GradedMap<K>(space_, GradedSpace::unit(group()), std::move(m));
  }

  /// Right regular coaction: (rho_k)_{ij} = coefficient of b_i (x) b_k in Delta(b_j).
  std::vector<Matrix<K>> right_regular_ops() const {
    std::vector<Matrix<K>> ops(dim(), Matrix<K>(dim(), dim()));
    for (const auto& t : terms_) ops[t.right](t.left, t.out) = t.coef;
    return ops;
  }
  /// Left regular coaction: (lambda_k)_{ij} = coefficient of b_k (x) b_i in Delta(b_j).
  std::vector<Matrix<K>> left_regular_ops() const {
    std::vector<Matrix<K>> ops(dim(), Matrix<K>(dim(), dim()));
    for (const auto& t : terms_) ops[t.left](t.right, t.out) = t.coef;
    return ops;
  }

  /// A = C*, b_i* b_j* = sum_m Delta-coefficient(i, j; m) b_m*, unit = counit.
  const Algebra<K>& dual_algebra() const {
    std::call_once(cache_->dual_once, [&] {
      Algebra<K> a;
      a.space = space_;
      a.left.assign(dim(), Matrix<K>(dim(), dim()));
      for (const auto& t : terms_) a.left[t.left](t.out, t.right) = t.coef;
      a.unit = counit_;
      cache_->dual = std::move(a);
    });
    return cache_->dual;
  }

  /// Homogeneous basis of J(C*) in dual-basis coordinates.
  const Matrix<K>& radical() const {
    std::call_once(cache_->radical_once, [&] { cache_->radical = jacobson_radical(dual_algebra()); });
    return cache_->radical;
  }

  /// Algebra whose modules are the graded right comodules: C* smash the
  /// functions on G. Basis (k, g) has index k*|G| + g and acts as rho_k P_g.
  const Algebra<K>& graded_right_algebra() const {
    std::call_once(cache_->gra_once, [&] { cache_->gra = build_smash(true); });
    return cache_->gra;
  }
  /// Same for graded left comodules; (k, g) acts as lambda_k P_g.
  const Algebra<K>& graded_left_algebra() const {
    std::call_once(cache_->gla_once, [&] { cache_->gla = build_smash(false); });
    return cache_->gla;
  }
  const Wedderburn<K>& graded_right_wedderburn() const {
    std::call_once(cache_->wed_once, [&] { cache_->wed = wedderburn(graded_right_algebra()); });
    return cache_->wed;
  }

 private:
  Algebra<K> build_smash(bool right) const {
    const auto& g = *group();
    const std::size_t n = dim(), order = static_cast<std::size_t>(g.order());
    const std::size_t d = n * order;
    Algebra<K> b;
    b.space = GradedSpace(group(), std::vector<int>(d, g.identity()));
    b.left.assign(d, Matrix<K>(d, d));
    // right:  (k,g)(l,h) = [g c_l = h] sum_m D(k,l;m) (m,h)
    // left:   (k,g)(l,h) = [c_l g = h] sum_m D(l,k;m) (m,h)
    for (const auto& t : terms_) {
      const std::size_t k = right ? t.left : t.right, l = right ? t.right : t.left;
      const int cl = space_.deg[l];
      for (std::size_t gi = 0; gi < order; ++gi) {
        const int h = right ? g.mul(static_cast<int>(gi), cl) : g.mul(cl, static_cast<int>(gi));
        b.left[k * order + gi](t.out * order + h, l * order + h) += t.coef;
      }
    }
    b.unit.assign(d, K(0));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t gi = 0; gi < order; ++gi) b.unit[k * order + gi] = counit_[k];
    return b;
  }

  struct Cache {
    std::once_flag dual_once, radical_once, gra_once, gla_once, wed_once;
    Algebra<K> dual, gra, gla;
    Matrix<K> radical;
    Wedderburn<K> wed;
  };

  GradedSpace space_;
  std::vector<ComultTerm<K>> terms_;
  Vec<K> counit_;
  std::string name_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

template <class K>
using CoalgebraPtr = std::shared_ptr<const Coalgebra<K>>;

/// Coalgebra dual to a finite-dimensional algebra: Delta(c_m) = sum over
/// products b_i b_j with coefficient on b_m, counit = coordinates of the unit.
template <class K>
Coalgebra<K> coalgebra_from_algebra(const Algebra<K>& a, std::string name = {}) {
  std::vector<ComultTerm<K>> terms;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t m = 0; m < a.dim(); ++m)
        if (!a.left[i](m, j).is_zero()) terms.push_back({i, j, m, a.left[i](m, j)});
  return Coalgebra<K>(a.space, std::move(terms), a.unit, std::move(name));
}

/// Coassociativity and both counit laws as exact identities. The failure
/// message names the first basis vector b_k on which an axiom fails.
template <class K>
CheckReport<K> check_coalgebra(const Coalgebra<K>& c) {
  using Key3 = std::tuple<std::size_t, std::size_t, std::size_t>;
  const std::size_t n = c.dim();
  std::vector<std::vector<const ComultTerm<K>*>> by_out(n);
  for (const auto& t : c.terms()) by_out[t.out].push_back(&t);
  for (std::size_t k = 0; k < n; ++k) {
    std::map<Key3, K> lhs, rhs;
    for (const auto* outer : by_out[k]) {
      // (Delta (x) id): split the left tensor factor again
      for (const auto* inner : by_out[outer->left]) lhs[{inner->left, inner->right, outer->right}] += outer->coef * inner->coef;
      // (id (x) Delta): split the right tensor factor again
      for (const auto* inner : by_out[outer->right]) rhs[{outer->left, inner->left, inner->right}] += outer->coef * inner->coef;
    }
    std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
    if (lhs != rhs) return {false, "coassociativity fails on b" + std::to_string(k)};
  }
  for (std::size_t k = 0; k < n; ++k) {
    Vec<K> left_counit(n, K(0)), right_counit(n, K(0));
    for (const auto* t : by_out[k]) {
      left_counit[t->right] += c.counit()[t->left] * t->coef;
      right_counit[t->left] += c.counit()[t->right] * t->coef;
    }
    Vec<K> e(n, K(0));
    e[k] = K(1);
    if (left_counit != e) return {false, "left counit law fails on b" + std::to_string(k)};
    if (right_counit != e) return {false, "right counit law fails on b" + std::to_string(k)};
  }
  return {};
}

template <class K>
Algebra<K> dual_algebra(const Coalgebra<K>& c) {
  return c.dual_algebra();
}

/// sigma_i = annihilator in C of J^i under the dual-basis pairing; sigma_0 = 0.
template <class K>
Filtration<K> coradical_filtration(const Coalgebra<K>& c) {
  const auto powers = radical_powers(c.dual_algebra(), c.radical());
  Filtration<K> f;
  for (const auto& p : powers) {
    Matrix<K> ann = p.cols() == 0 ? Matrix<K>::identity(c.dim()) : kernel_basis(p.transpose());
    f.chain.push_back(homogeneous_basis(c.space(), ann));
  }
  return f;
}

/// Delta(S) inside S (x) S.
template <class K>
bool is_subcoalgebra(const Coalgebra<K>& c, const Matrix<K>& s) {
  const auto delta = c.comult_map().matrix();
  return span_contains(kron(s, s), delta * s);
}

}  // namespace coradical
