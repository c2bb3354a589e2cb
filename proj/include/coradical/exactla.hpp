#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coradical/scalar.hpp"

namespace coradical {

template <class K>
using Vec = std::vector<K>;

/// Dense row-major matrix over an exact field. Bases of subspaces are
/// carried as matrices whose columns are the basis vectors.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error("ragged matrix literal");
      for (long v : row) data_.push_back(K(v));
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  static Matrix from_columns(std::size_t rows, const std::vector<Vec<K>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }
  static Matrix column(const Vec<K>& v) { return from_columns(v.size(), {v}); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<K> col(std::size_t j) const {
    Vec<K> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<Vec<K>> columns() const {
    std::vector<Vec<K>> out;
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
    return out;
  }
  Matrix select_columns(const std::vector<std::size_t>& idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (std::size_t i = 0; i < rows_; ++i) m(i, j) = (*this)(i, idx[j]);
    return m;
  }
  Matrix select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
    return m;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const K& x) { return x.is_zero(); });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
      }
    return c;
  }
  friend Vec<K> operator*(const Matrix& a, const Vec<K>& v) {
    if (a.cols_ != v.size()) throw Error("matrix-vector dimension mismatch");
    Vec<K> out(a.rows_, K(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const K& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }
  Matrix& operator+=(const Matrix& b) { return *this = *this + b; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      os << "[";
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).str();
      os << "]\n";
    }
    return os.str();
  }

 private:
  void check_same(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error("matrix shape mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> data_;
};

template <class K>
Matrix<K> hcat(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() && a.cols() && b.cols()) throw Error("hcat row mismatch");
  const std::size_t rows = a.cols() ? a.rows() : b.rows();
  Matrix<K> m(rows, a.cols() + b.cols());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

template <class K>
Matrix<K> vcat(const Matrix<K>& a, const Matrix<K>& b) {
  return hcat(a.transpose(), b.transpose()).transpose();
}

/// Reduced row echelon form with deterministic pivoting: columns scanned left
/// to right, the first row with a nonzero entry becomes the pivot row.
template <class K>
struct Echelon {
  Matrix<K> rref;
  std::vector<std::size_t> pivots;  // pivot column of row r
  std::size_t rank() const { return pivots.size(); }
};

template <class K>
Echelon<K> echelon(Matrix<K> m, std::size_t stop_col = static_cast<std::size_t>(-1)) {
  const std::size_t rows = m.rows(), cols = std::min(m.cols(), stop_col);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const K inv = m(r, c).inv();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const K f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  if (m.rows() > m.cols()) return echelon(m.transpose()).rank();
  return echelon(m).rank();
}

/// Basis (as columns) of {v : m v = 0}; one vector per free column.
template <class K>
Matrix<K> kernel_basis(const Matrix<K>& m) {
  const auto e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec<K>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<K> v(m.cols(), K(0));
    v[f] = K(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, f);
    out.push_back(std::move(v));
  }
  return Matrix<K>::from_columns(m.cols(), out);
}

/// Independent columns of m spanning its column space (the pivot columns).
template <class K>
Matrix<K> image_basis(const Matrix<K>& m) {
  return m.select_columns(echelon(m).pivots);
}

/// Some x with m x = b, free variables zero; nullopt when b is not in the image.
template <class K>
std::optional<Vec<K>> solve(const Matrix<K>& m, const Vec<K>& b) {
  if (b.size() != m.rows()) throw Error("solve: dimension mismatch");
  const auto e = echelon(hcat(m, Matrix<K>::column(b)), m.cols());
  for (std::size_t i = e.rank(); i < m.rows(); ++i)
    if (!e.rref(i, m.cols()).is_zero()) return std::nullopt;
  Vec<K> x(m.cols(), K(0));
  for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots[r]] = e.rref(r, m.cols());
  return x;
}

/// Kronecker product; basis of V (x) W ordered (v_i, w_j) with the V index major.
template <class K>
Matrix<K> kron(const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      if (a(i1, j1).is_zero()) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          m(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
    }
  return m;
}

template <class K>
Vec<K> kron(const Vec<K>& a, const Vec<K>& b) {
  Vec<K> v(a.size() * b.size(), K(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) v[i * b.size() + j] = a[i] * b[j];
  return v;
}

// ---------------------------------------------------------------------------
// Subspaces given by spanning columns.

template <class K>
Matrix<K> empty_basis(std::size_t ambient) {
  return Matrix<K>(ambient, 0);
}

/// Canonical basis of the column span: transposed RREF rows.
template <class K>
Matrix<K> canonical_basis(const Matrix<K>& span) {
  if (span.cols() == 0) return span;
  const auto e = echelon(span.transpose());
  Matrix<K> out(span.rows(), e.rank());
  for (std::size_t r = 0; r < e.rank(); ++r)
    for (std::size_t i = 0; i < span.rows(); ++i) out(i, r) = e.rref(r, i);
  return out;
}

template <class K>
Matrix<K> span_sum(const Matrix<K>& a, const Matrix<K>& b) {
  return image_basis(hcat(a, b));
}

template <class K>
bool span_contains(const Matrix<K>& big, const Matrix<K>& small) {
  if (small.cols() == 0) return true;
  return rank(hcat(big, small)) == rank(big);
}

template <class K>
bool span_equal(const Matrix<K>& a, const Matrix<K>& b) {
  const auto ra = rank(a);
  return ra == rank(b) && rank(hcat(a, b)) == ra;
}

template <class K>
bool vec_in_span(const Matrix<K>& basis, const Vec<K>& v) {
  return span_contains(basis, Matrix<K>::column(v));
}

/// Intersection of two column spans, both assumed independent.
template <class K>
Matrix<K> span_intersection(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.cols() == 0 || b.cols() == 0) return empty_basis<K>(a.rows());
  Matrix<K> nb = b;
  for (std::size_t i = 0; i < nb.rows(); ++i)
    for (std::size_t j = 0; j < nb.cols(); ++j) nb(i, j) = -nb(i, j);
  const auto ker = kernel_basis(hcat(a, nb));
  Matrix<K> top(a.cols(), ker.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) top(i, j) = ker(i, j);
  return image_basis(a * top);
}

/// Coordinates of vectors in an independent basis; throws when outside the span.
template <class K>
Matrix<K> coordinates(const Matrix<K>& basis, const Matrix<K>& vectors) {
  const auto e = echelon(hcat(basis, vectors), basis.cols());
  if (e.rank() != basis.cols()) throw Error("coordinates: basis is not independent");
  Matrix<K> out(basis.cols(), vectors.cols());
  for (std::size_t j = 0; j < vectors.cols(); ++j) {
    for (std::size_t i = e.rank(); i < basis.rows(); ++i)
      if (!e.rref(i, basis.cols() + j).is_zero()) throw Error("coordinates: vector outside span");
    for (std::size_t r = 0; r < e.rank(); ++r) out(r, j) = e.rref(r, basis.cols() + j);
  }
  return out;
}

/// Reduction modulo a subspace U onto the coordinate complement spanned by the
/// standard vectors at U's non-pivot positions. This is the fixed splitting
/// used for every quotient in the engine.
template <class K>
class Reducer {
 public:
  Reducer(std::size_t ambient, const Matrix<K>& sub) : ambient_(ambient) {
    if (sub.cols() > 0) {
      auto e = echelon(sub.transpose());
      rref_ = std::move(e.rref);
      pivots_ = std::move(e.pivots);
    }
    std::vector<bool> is_pivot(ambient, false);
    for (auto p : pivots_) is_pivot[p] = true;
    for (std::size_t i = 0; i < ambient; ++i)
      if (!is_pivot[i]) complement_.push_back(i);
  }

  std::size_t quotient_dim() const { return complement_.size(); }
  const std::vector<std::size_t>& complement() const { return complement_; }

  /// Vector minus its U-component (zero at U's pivots).
  Vec<K> reduce(Vec<K> v) const {
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const K f = v[pivots_[r]];
      if (f.is_zero()) continue;
      for (std::size_t i = 0; i < ambient_; ++i)
        if (!rref_(r, i).is_zero()) v[i] -= f * rref_(r, i);
    }
    return v;
  }
  Vec<K> quotient_coords(const Vec<K>& v) const {
    const auto red = reduce(v);
    Vec<K> q(complement_.size());
    for (std::size_t i = 0; i < complement_.size(); ++i) q[i] = red[complement_[i]];
    return q;
  }
  Matrix<K> quotient_coords(const Matrix<K>& m) const {
    std::vector<Vec<K>> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(quotient_coords(m.col(j)));
    return Matrix<K>::from_columns(complement_.size(), cols);
  }
  Vec<K> lift(const Vec<K>& q) const {
    Vec<K> v(ambient_, K(0));
    for (std::size_t i = 0; i < complement_.size(); ++i) v[complement_[i]] = q[i];
    return v;
  }
  /// Columns are the lifts of the quotient's standard basis.
  Matrix<K> lift_basis() const {
    Matrix<K> m(ambient_, complement_.size());
    for (std::size_t i = 0; i < complement_.size(); ++i) m(complement_[i], i) = K(1);
    return m;
  }

 private:
  std::size_t ambient_;
  Matrix<K> rref_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> complement_;
};

}  // namespace coradical
