#pragma once

#include <memory>
#include <string>
#include <vector>

#include "coradical/exactla.hpp"

namespace coradical {

/// Finite group given by its Cayley table. Element 0 is not assumed to be the
/// identity; identity() finds it.
class Group {
 public:
  Group(std::vector<std::string> labels, std::vector<std::vector<int>> table)
      : labels_(std::move(labels)), table_(std::move(table)) {
    validate();
  }

  static std::shared_ptr<const Group> trivial() { return cyclic(1); }
  static std::shared_ptr<const Group> cyclic(int n) {
    if (n < 1) throw PreconditionError("cyclic group order must be positive");
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
      labels.push_back(i == 0 ? "e" : i == 1 ? "g" : "g^" + std::to_string(i));
      for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    }
    return std::make_shared<const Group>(std::move(labels), std::move(table));
  }
  /// S3 as permutations of {0,1,2}; the smallest non-abelian test case.
  static std::shared_ptr<const Group> symmetric3() {
    const std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    const std::vector<std::string> labels = {"e", "(01)", "(12)", "(02)", "(012)", "(021)"};
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        std::vector<int> c(3);
        for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
        for (int r = 0; r < 6; ++r)
          if (perms[r] == c) table[a][b] = r;
      }
    return std::make_shared<const Group>(labels, table);
  }

  int order() const { return static_cast<int>(labels_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  int index_of(const std::string& label) const {
    for (int i = 0; i < order(); ++i)
      if (labels_[i] == label) return i;
    throw ParseError("unknown group element '" + label + "'");
  }
  bool operator==(const Group& o) const { return labels_ == o.labels_ && table_ == o.table_; }

 private:
  void validate() {
    const int n = order();
    if (n == 0) throw PreconditionError("group must be nonempty");
    if (static_cast<int>(table_.size()) != n) throw PreconditionError("Cayley table has wrong size");
    for (const auto& row : table_) {
      if (static_cast<int>(row.size()) != n) throw PreconditionError("Cayley table has wrong size");
      for (int x : row)
        if (x < 0 || x >= n) throw PreconditionError("Cayley table entry out of range");
    }
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
      if (ok) identity_ = e;
    }
    if (identity_ < 0) throw PreconditionError("Cayley table has no identity");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw PreconditionError("Cayley table is not associative");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    for (int a = 0; a < n; ++a)
      if (inverse_[a] < 0) throw PreconditionError("element without inverse: " + labels_[a]);
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Finite-dimensional G-graded vector space: one degree per basis vector.
struct GradedSpace {
  GroupPtr group;
  std::vector<int> deg;

  GradedSpace() : group(Group::trivial()) {}
  GradedSpace(GroupPtr g, std::vector<int> degrees) : group(std::move(g)), deg(std::move(degrees)) {
    for (int d : deg)
      if (d < 0 || d >= group->order()) throw PreconditionError("degree out of range");
  }
  static GradedSpace unit(GroupPtr g) {
    const int e = g->identity();
    return GradedSpace(std::move(g), {e});
  }
  static GradedSpace line(GroupPtr g, int degree) { return GradedSpace(std::move(g), {degree}); }

  std::size_t dim() const { return deg.size(); }
  bool same_group(const GradedSpace& o) const { return group == o.group || *group == *o.group; }
  bool operator==(const GradedSpace& o) const { return same_group(o) && deg == o.deg; }
};

/// Degree-preserving linear map. Construction rejects a matrix with a nonzero
/// entry between basis vectors of different degrees.
template <class K>
class GradedMap {
 public:
  GradedMap(GradedSpace source, GradedSpace target, Matrix<K> matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
      throw PreconditionError("graded map shape does not match its spaces");
    if (!source_.same_group(target_)) throw PreconditionError("graded map between different groups");
    for (std::size_t i = 0; i < matrix_.rows(); ++i)
      for (std::size_t j = 0; j < matrix_.cols(); ++j)
        if (!matrix_(i, j).is_zero() && target_.deg[i] != source_.deg[j])
          throw PreconditionError("map is not degree preserving at entry (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
  }

  static GradedMap identity(const GradedSpace& v) { return GradedMap(v, v, Matrix<K>::identity(v.dim())); }

  const GradedSpace& source() const { return source_; }
  const GradedSpace& target() const { return target_; }
  const Matrix<K>& matrix() const { return matrix_; }

  /// this ∘ g
  GradedMap compose(const GradedMap& g) const {
    if (!(g.target_ == source_)) throw PreconditionError("composition of incompatible graded maps");
    return GradedMap(g.source_, target_, matrix_ * g.matrix_);
  }
  bool operator==(const GradedMap& o) const {
    return source_ == o.source_ && target_ == o.target_ && matrix_ == o.matrix_;
  }

 private:
  GradedSpace source_, target_;
  Matrix<K> matrix_;
};

/// V (x) W with deg(v_i (x) w_j) = deg(v_i) deg(w_j), V index major.
inline GradedSpace tensor(const GradedSpace& v, const GradedSpace& w) {
  if (!v.same_group(w)) throw PreconditionError("tensor of spaces over different groups");
  std::vector<int> deg;
  deg.reserve(v.dim() * w.dim());
  for (int a : v.deg)
    for (int b : w.deg) deg.push_back(v.group->mul(a, b));
  return GradedSpace(v.group, std::move(deg));
}

template <class K>
GradedMap<K> tensor(const GradedMap<K>& f, const GradedMap<K>& g) {
  return GradedMap<K>(tensor(f.source(), g.source()), tensor(f.target(), g.target()),
                      kron(f.matrix(), g.matrix()));
}

/// Right dual: deg(v*_i) = deg(v_i)^{-1}.
inline GradedSpace dual(const GradedSpace& v) {
  std::vector<int> deg;
  for (int d : v.deg) deg.push_back(v.group->inv(d));
  return GradedSpace(v.group, std::move(deg));
}

/// ev: V* (x) V -> 1, v*_i (x) v_j -> delta_ij.
template <class K>
GradedMap<K> evaluation(const GradedSpace& v) {
  const std::size_t m = v.dim();
  Matrix<K> e(1, m * m);
  for (std::size_t i = 0; i < m; ++i) e(0, i * m + i) = K(1);
  return GradedMap<K>(tensor(dual(v), v), GradedSpace::unit(v.group), std::move(e));
}

/// coev: 1 -> V (x) V*, 1 -> sum_i v_i (x) v*_i.
template <class K>
GradedMap<K> coevaluation(const GradedSpace& v) {
  const std::size_t m = v.dim();
  Matrix<K> c(m * m, 1);
  for (std::size_t i = 0; i < m; ++i) c(i * m + i, 0) = K(1);
  return GradedMap<K>(GradedSpace::unit(v.group), tensor(v, dual(v)), std::move(c));
}

/// Dual map f*: V* -> W* of f: W -> V (transpose in dual bases).
template <class K>
GradedMap<K> dual(const GradedMap<K>& f) {
  return GradedMap<K>(dual(f.target()), dual(f.source()), f.matrix().transpose());
}

/// W^perp inside V*: functionals vanishing on the image of an injective map W -> V.
template <class K>
GradedMap<K> perp(const GradedMap<K>& w_incl) {
  const auto& m = w_incl.matrix();
  if (rank(m) != m.cols()) throw PreconditionError("perp: inclusion is not injective");
  const GradedSpace vstar = dual(w_incl.target());
  // A functional f (coordinates in the dual basis) kills W iff m^T f = 0. The
  // kernel basis is homogeneous because m^T is degree preserving.
  Matrix<K> ker = kernel_basis(m.transpose());
  std::vector<int> deg;
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    int d = -1;
    for (std::size_t i = 0; i < ker.rows(); ++i)
      if (!ker(i, j).is_zero()) {
        if (d >= 0 && vstar.deg[i] != d) throw VerificationError("perp: inhomogeneous kernel vector");
        d = vstar.deg[i];
      }
    deg.push_back(d);
  }
  return GradedMap<K>(GradedSpace(vstar.group, std::move(deg)), vstar, std::move(ker));
}

/// S_g (x) V for the degree-g line S_g: degrees shift on the left.
inline GradedSpace picard_twist(int g, const GradedSpace& v) {
  std::vector<int> deg;
  for (int d : v.deg) deg.push_back(v.group->mul(g, d));
  return GradedSpace(v.group, std::move(deg));
}

/// V (x) S_g: degrees shift on the right.
inline GradedSpace picard_twist_right(const GradedSpace& v, int g) {
  std::vector<int> deg;
  for (int d : v.deg) deg.push_back(v.group->mul(d, g));
  return GradedSpace(v.group, std::move(deg));
}

/// Degree of a nonzero homogeneous vector, or -1 for zero; throws if inhomogeneous.
template <class K>
int homogeneous_degree(const GradedSpace& v, const Vec<K>& x) {
  int d = -1;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) {
      if (d >= 0 && d != v.deg[i]) throw VerificationError("vector is not homogeneous");
      d = v.deg[i];
    }
  return d;
}

/// Splits every spanning vector into its degree components and returns an
/// independent homogeneous basis of the resulting span, ordered by degree.
template <class K>
Matrix<K> homogeneous_basis(const GradedSpace& v, const Matrix<K>& span) {
  Matrix<K> out(v.dim(), 0);
  for (int g = 0; g < v.group->order(); ++g) {
    Matrix<K> part = span;
    for (std::size_t i = 0; i < part.rows(); ++i)
      if (v.deg[i] != g)
        for (std::size_t j = 0; j < part.cols(); ++j) part(i, j) = K(0);
    out = hcat(out, canonical_basis(part));
  }
  return out;
}

template <class K>
std::vector<int> degrees_of_basis(const GradedSpace& v, const Matrix<K>& basis) {
  std::vector<int> deg;
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    const int d = homogeneous_degree(v, basis.col(j));
    if (d < 0) throw VerificationError("zero basis vector");
    deg.push_back(d);
  }
  return deg;
}

}  // namespace coradical
