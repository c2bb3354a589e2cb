#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "coradical/graded.hpp"
#include "coradical/roots.hpp"

namespace coradical {

/// Finite-dimensional associative unital algebra given by structure constants.
/// left[i] is the matrix of left multiplication by the basis vector b_i, so
/// column j of left[i] holds the coordinates of b_i b_j.
template <class K>
struct Algebra {
  GradedSpace space;
  std::vector<Matrix<K>> left;
  Vec<K> unit;

  std::size_t dim() const { return space.dim(); }

  Matrix<K> left_mult(const Vec<K>& x) const {
    Matrix<K> m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      if (!x[i].is_zero()) m += x[i] * left[i];
    return m;
  }
  Matrix<K> right_mult(const Vec<K>& y) const {
    Matrix<K> m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      const auto col = left[j] * y;  // b_j y
      for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
    }
    return m;
  }
  Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> out(dim(), K(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      const auto col = left[i] * y;
      for (std::size_t m = 0; m < dim(); ++m) out[m] += x[i] * col[m];
    }
    return out;
  }
  Vec<K> basis_vector(std::size_t i) const {
    Vec<K> v(dim(), K(0));
    v[i] = K(1);
    return v;
  }

  /// m: A (x) A -> A as a graded map.
  GradedMap<K> mult_map() const {
    Matrix<K> m(dim(), dim() * dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t k = 0; k < dim(); ++k) m(k, i * dim() + j) = left[i](k, j);
    return GradedMap<K>(tensor(space, space), space, std::move(m));
  }
  GradedMap<K> unit_map() const {
    return GradedMap<K>(GradedSpace::unit(space.group), space, Matrix<K>::column(unit));
  }
};

template <class K>
struct CheckReport {
  bool ok = true;
  std::string failure;  // first violated identity with witness
};

template <class K>
CheckReport<K> check_algebra(const Algebra<K>& a) {
  CheckReport<K> r;
  const std::size_t n = a.dim();
  if (a.left.size() != n || a.unit.size() != n) return {false, "structure tensor has wrong size"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto prod = a.left[i] * a.basis_vector(j);
      if (a.left_mult(prod) != a.left[i] * a.left[j])
        return {false, "associativity fails for (b" + std::to_string(i) + " b" + std::to_string(j) + ") b_k"};
    }
  if (a.left_mult(a.unit) != Matrix<K>::identity(n)) return {false, "unit is not a left identity"};
  if (a.right_mult(a.unit) != Matrix<K>::identity(n)) return {false, "unit is not a right identity"};
  return r;
}

/// span{x y : x in X, y in Y} for subspaces given by basis columns.
template <class K>
Matrix<K> product_span(const Algebra<K>& a, const Matrix<K>& x, const Matrix<K>& y) {
  std::vector<Vec<K>> cols;
  for (std::size_t i = 0; i < x.cols(); ++i) {
    const auto lx = a.left_mult(x.col(i));
    for (std::size_t j = 0; j < y.cols(); ++j) cols.push_back(lx * y.col(j));
  }
  return image_basis(Matrix<K>::from_columns(a.dim(), cols));
}

/// Quotient algebra A/I for a two-sided ideal I, on the coordinate complement
/// fixed by Reducer.
template <class K>
Algebra<K> quotient_algebra(const Algebra<K>& a, const Reducer<K>& red) {
  Algebra<K> q;
  std::vector<int> deg;
  for (auto c : red.complement()) deg.push_back(a.space.deg[c]);
  q.space = GradedSpace(a.space.group, deg);
  for (auto c : red.complement()) q.left.push_back(red.quotient_coords(a.left[c] * red.lift_basis()));
  q.unit = red.quotient_coords(a.unit);
  return q;
}

template <class K>
std::vector<K> trace_vector(const Algebra<K>& a) {
  std::vector<K> t;
  for (const auto& l : a.left) {
    K s(0);
    for (std::size_t i = 0; i < a.dim(); ++i) s += l(i, i);
    t.push_back(s);
  }
  return t;
}

/// Gram matrix of (x, y) -> tr(L_x L_y) = tr(L_{xy}).
template <class K>
Matrix<K> trace_form(const Algebra<K>& a) {
  const auto t = trace_vector(a);
  Matrix<K> g(a.dim(), a.dim());
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = 0; y < a.dim(); ++y) {
      K s(0);
      for (std::size_t m = 0; m < a.dim(); ++m)
        if (!a.left[x](m, y).is_zero() && !t[m].is_zero()) s += a.left[x](m, y) * t[m];
      g(x, y) = s;
    }
  return g;
}

template <class K>
std::vector<Matrix<K>> radical_powers(const Algebra<K>& a, const Matrix<K>& j) {
  std::vector<Matrix<K>> out = {Matrix<K>::identity(a.dim())};
  Matrix<K> cur = j;
  for (std::size_t step = 0; step <= a.dim() + 1; ++step) {
    out.push_back(cur);
    if (cur.cols() == 0) return out;
    cur = product_span(a, j, cur);
  }
  throw VerificationError("ideal is not nilpotent");
}

namespace detail {

/// Tr(lift(m)^(p^i)) / p^i mod p, with entries lifted to [0, p) and the power
/// taken modulo p^(i+1).
inline std::uint32_t lifted_trace(const Matrix<ModP>& m, std::uint32_t p, unsigned i) {
  using u128 = unsigned __int128;
  const std::size_t n = m.rows();
  std::uint64_t mod = p, pi = 1;
  for (unsigned t = 0; t < i; ++t) mod *= p, pi *= p;
  using Mat = std::vector<std::uint64_t>;
  auto mult = [&](const Mat& x, const Mat& y) {
    Mat z(n * n, 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) {
        if (!x[r * n + k]) continue;
        for (std::size_t c = 0; c < n; ++c)
          z[r * n + c] = static_cast<std::uint64_t>((u128(z[r * n + c]) + u128(x[r * n + k]) * y[k * n + c]) % mod);
      }
    return z;
  };
  Mat base(n * n), acc(n * n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    acc[r * n + r] = 1 % mod;
    for (std::size_t c = 0; c < n; ++c) base[r * n + c] = m(r, c).residue();
  }
  for (std::uint64_t e = pi; e; e >>= 1) {
    if (e & 1) acc = mult(acc, base);
    base = mult(base, base);
  }
  std::uint64_t tr = 0;
  for (std::size_t r = 0; r < n; ++r) tr = (tr + acc[r * n + r]) % mod;
  if (tr % pi != 0) throw VerificationError("lifted trace is not divisible by p^i");
  return static_cast<std::uint32_t>(tr / pi);
}

/// Cohen-Ivanyos-Wales: I_{-1} = A, I_i = {x in I_{i-1} : g_i(x b) = 0 for all b},
/// g_i the lifted trace above; I_l is the radical for p^l <= dim A < p^(l+1).
inline Matrix<ModP> radical_small_characteristic(const Algebra<ModP>& a) {
  const std::uint32_t p = ModP::modulus();
  const std::size_t n = a.dim();
  Matrix<ModP> ideal = Matrix<ModP>::identity(n);
  std::uint64_t pi = 1;
  for (unsigned i = 0; pi <= n && ideal.cols() > 0; ++i, pi *= p) {
    Matrix<ModP> g(n, ideal.cols());
    for (std::size_t j = 0; j < ideal.cols(); ++j) {
      const auto x = ideal.col(j);
      for (std::size_t b = 0; b < n; ++b) g(b, j) = ModP(lifted_trace(a.left_mult(a.mul(x, a.basis_vector(b))), p, i));
    }
    ideal = ideal * kernel_basis(g);
  }
  return ideal;
}

}  // namespace detail

/// Jacobson radical. In characteristic 0 or p > dim A it is the kernel of the
/// trace form; for small p the lifted-trace refinement is used. The result is
/// accepted only when it is a nilpotent two-sided ideal, and (trace-form case)
/// the quotient trace form is nondegenerate.
template <class K>
Matrix<K> jacobson_radical(const Algebra<K>& a) {
  const bool small_char = K::characteristic() != 0 && K::characteristic() <= a.dim();
  Matrix<K> j;
  if constexpr (std::is_same_v<K, ModP>) {
    j = small_char ? detail::radical_small_characteristic(a) : kernel_basis(trace_form(a));
  } else {
    j = kernel_basis(trace_form(a));
  }
  // (i) two-sided ideal
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto b = a.basis_vector(i);
    if (!span_contains(j, a.left_mult(b) * j) || !span_contains(j, a.right_mult(b) * j))
      throw PreconditionError("radical certificate failed: trace-form kernel is not an ideal (field " +
                              K::field().str() + ")");
  }
  // (ii) nilpotent
  Matrix<K> cur = j;
  std::size_t steps = 0;
  while (cur.cols() > 0) {
    if (++steps > a.dim() + 1)
      throw PreconditionError("radical certificate failed: trace-form kernel is not nilpotent (field " +
                              K::field().str() + ")");
    cur = product_span(a, j, cur);
  }
  // (iii) semisimple quotient; for small p the Wedderburn analysis certifies instead
  const Reducer<K> red(a.dim(), j);
  const auto q = quotient_algebra(a, red);
  if (!small_char && rank(trace_form(q)) != q.dim())
    throw PreconditionError("radical certificate failed: quotient trace form is degenerate (field " +
                            K::field().str() + ")");
  // homogeneous basis
  Matrix<K> hj = homogeneous_basis(a.space, j);
  if (hj.cols() != j.cols() || !span_equal(hj, j))
    throw PreconditionError("radical is not a graded subspace (field " + K::field().str() + ", group order " +
                            std::to_string(a.space.group->order()) + ")");
  return hj;
}

/// Result of the Wedderburn analysis of A/J.
template <class K>
struct Wedderburn {
  bool split = false;
  std::string diagnostic;
  Matrix<K> radical;
  std::vector<int> block_sizes;
  /// Primitive idempotents of A/J (quotient coordinates), grouped by block.
  std::vector<std::vector<Vec<K>>> block_primitives;
  /// Matrix units e_ij of each block (quotient coordinates).
  std::vector<std::vector<std::vector<Vec<K>>>> matrix_units;
  /// Complete orthogonal primitive idempotents of A, lifted from A/J.
  std::vector<Vec<K>> idempotents;
  std::vector<int> idempotent_block;
  /// Index into `idempotents` of the first idempotent of each block.
  std::vector<std::size_t> block_representative;
};

namespace detail {

template <class K>
bool is_multiple_of(const Vec<K>& x, const Vec<K>& u) {
  return rank(Matrix<K>::from_columns(x.size(), {u, x})) <= 1;
}

/// Minimal polynomial of x inside a corner algebra with identity u.
template <class K>
Vec<K> min_poly(const Algebra<K>& a, const Vec<K>& u, const Vec<K>& x) {
  std::vector<Vec<K>> powers = {u};
  const auto lx = a.left_mult(x);
  for (std::size_t d = 1; d <= a.dim() + 1; ++d) {
    Vec<K> next = lx * powers.back();
    auto sol = solve(Matrix<K>::from_columns(a.dim(), powers), next);
    if (sol) {
      Vec<K> mu(d + 1, K(0));
      for (std::size_t i = 0; i < d; ++i) mu[i] = -(*sol)[i];
      mu[d] = K(1);
      return mu;
    }
    powers.push_back(std::move(next));
  }
  throw VerificationError("minimal polynomial search did not terminate");
}

template <class K>
Vec<K> eval_in(const Algebra<K>& a, const Vec<K>& f, const Vec<K>& u, const Vec<K>& x) {
  Vec<K> acc(a.dim(), K(0));
  const auto lx = a.left_mult(x);
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = lx * acc;
    for (std::size_t i = 0; i < a.dim(); ++i) acc[i] += *it * u[i];
  }
  return acc;
}

template <class K>
Vec<K> sub(Vec<K> a, const Vec<K>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class K>
Vec<K> scaled(Vec<K> a, const K& s) {
  for (auto& x : a) x *= s;
  return a;
}

/// Idempotent of the lambda-eigenspace of a semisimple x in the corner u,
/// or nullopt if mu has no root in K.
template <class K>
std::optional<Vec<K>> eigen_idempotent(const Algebra<K>& q, const Vec<K>& u, const Vec<K>& x, const Vec<K>& mu,
                                       std::string& why) {
  const auto lambda = find_root(mu);
  if (!lambda) {
    why = "minimal polynomial " + poly::str(mu) + " has no root in the field";
    return std::nullopt;
  }
  const auto g = poly::divmod<K>(mu, {-*lambda, K(1)}).first;
  const K gl = poly::eval(g, *lambda);
  if (gl.is_zero()) throw VerificationError("semisimple element with repeated eigenvalue");
  return scaled(eval_in(q, g, u, x), gl.inv());
}

template <class K>
std::size_t corner_dim(const Algebra<K>& q, const Vec<K>& e, const Vec<K>& f) {
  std::vector<Vec<K>> cols;
  const auto le = q.left_mult(e);
  const auto rf = q.right_mult(f);
  for (std::size_t i = 0; i < q.dim(); ++i) cols.push_back(le * (rf * q.basis_vector(i)));
  return rank(Matrix<K>::from_columns(q.dim(), cols));
}

template <class K>
bool split_center(const Algebra<K>& q, const Vec<K>& f, const Matrix<K>& center, std::size_t from,
                  std::vector<Vec<K>>& out, std::string& why) {
  for (std::size_t c = from; c < center.cols(); ++c) {
    const Vec<K> x = q.mul(f, center.col(c));
    const auto mu = min_poly(q, f, x);
    if (poly::degree(mu) <= 1) continue;
    auto e = eigen_idempotent(q, f, x, mu, why);
    if (!e) return false;
    return split_center(q, *e, center, c + 1, out, why) && split_center(q, sub(f, *e), center, c, out, why);
  }
  out.push_back(f);
  return true;
}

template <class K>
bool split_simple(const Algebra<K>& q, const Vec<K>& u, std::vector<Vec<K>>& out, std::string& why) {
  if (corner_dim(q, u, u) == 1) {
    out.push_back(u);
    return true;
  }
  const auto lu = q.left_mult(u);
  const auto ru = q.right_mult(u);
  std::vector<Vec<K>> candidates;
  for (std::size_t i = 0; i < q.dim(); ++i) candidates.push_back(lu * (ru * q.basis_vector(i)));
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = i + 1; j < q.dim(); ++j) {
      Vec<K> s = q.basis_vector(i);
      s[j] += K(1);
      candidates.push_back(lu * (ru * s));
    }
  std::string last;
  for (const auto& x : candidates) {
    if (is_multiple_of(x, u)) continue;
    const auto mu = min_poly(q, u, x);
    if (poly::degree(mu) < 2) continue;
    auto e = eigen_idempotent(q, u, x, mu, last);
    if (!e) continue;
    return split_simple(q, *e, out, why) && split_simple(q, sub(u, *e), out, why);
  }
  why = "no idempotent found in a simple block of dimension " + std::to_string(corner_dim(q, u, u)) +
        (last.empty() ? "" : " (" + last + ")");
  return false;
}

}  // namespace detail

/// Decomposes A/J into blocks, certifies each is a full matrix algebra over K
/// by exhibiting matrix units, and lifts a complete set of orthogonal primitive
/// idempotents to A by iterating e <- 3e^2 - 2e^3. A non-split quotient yields
/// split == false with a diagnostic and no idempotents.
template <class K>
Wedderburn<K> wedderburn(const Algebra<K>& a) {
  using detail::sub;
  Wedderburn<K> w;
  w.radical = jacobson_radical(a);
  const Reducer<K> red(a.dim(), w.radical);
  const Algebra<K> q = quotient_algebra(a, red);

  // Center of A/J.
  Matrix<K> comm(0, q.dim());
  for (std::size_t i = 0; i < q.dim(); ++i) comm = vcat(comm, q.left[i] - q.right_mult(q.basis_vector(i)));
  const Matrix<K> center = kernel_basis(comm);

  std::vector<Vec<K>> central;
  if (!detail::split_center(q, q.unit, center, 0, central, w.diagnostic)) {
    w.diagnostic = "center of A/J does not split: " + w.diagnostic;
    return w;
  }
  for (const auto& f : central) {
    const std::size_t d = detail::corner_dim(q, f, f);
    std::size_t n = 0;
    while ((n + 1) * (n + 1) <= d) ++n;
    if (n * n != d) {
      w.diagnostic = "block of dimension " + std::to_string(d) + " is not a full matrix algebra";
      return w;
    }
    std::vector<Vec<K>> prims;
    if (!detail::split_simple(q, f, prims, w.diagnostic)) return w;
    if (prims.size() != n) {
      w.diagnostic = "block of dimension " + std::to_string(d) + " split into " + std::to_string(prims.size()) +
                     " primitive idempotents";
      return w;
    }
    w.block_sizes.push_back(static_cast<int>(n));
    w.block_primitives.push_back(std::move(prims));
  }

  // Matrix units: e_1j in e_1 Q e_j, e_j1 in e_j Q e_1 normalised so e_1j e_j1 = e_1.
  for (const auto& prims : w.block_primitives) {
    const std::size_t n = prims.size();
    std::vector<Vec<K>> row(n), colm(n);
    row[0] = colm[0] = prims[0];
    auto first_nonzero_in = [&](const Vec<K>& e, const Vec<K>& f) {
      const auto le = q.left_mult(e);
      const auto rf = q.right_mult(f);
      for (std::size_t i = 0; i < q.dim(); ++i) {
        auto x = le * (rf * q.basis_vector(i));
        if (!Matrix<K>::column(x).is_zero()) return x;
      }
      throw VerificationError("matrix units: empty corner e_i Q e_j");
    };
    for (std::size_t j = 1; j < n; ++j) {
      row[j] = first_nonzero_in(prims[0], prims[j]);
      Vec<K> y = first_nonzero_in(prims[j], prims[0]);
      const auto p = q.mul(row[j], y);
      std::size_t k = 0;
      while (prims[0][k].is_zero()) ++k;
      const K c = p[k] / prims[0][k];
      if (c.is_zero() || detail::scaled(prims[0], c) != p) throw VerificationError("matrix units: bad normalisation");
      colm[j] = detail::scaled(y, c.inv());
    }
    std::vector<std::vector<Vec<K>>> units(n, std::vector<Vec<K>>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) units[i][j] = q.mul(colm[i], row[j]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            const auto p = q.mul(units[i][j], units[k][l]);
            const auto expect = j == k ? units[i][l] : Vec<K>(q.dim(), K(0));
            if (p != expect) throw VerificationError("matrix unit relations fail");
          }
    w.matrix_units.push_back(std::move(units));
  }

  // Lift to A.
  std::vector<Vec<K>> bar;
  for (std::size_t b = 0; b < w.block_primitives.size(); ++b) {
    w.block_representative.push_back(bar.size());
    for (const auto& e : w.block_primitives[b]) {
      bar.push_back(e);
      w.idempotent_block.push_back(static_cast<int>(b));
    }
  }
  Vec<K> f = a.unit;
  for (std::size_t t = 0; t < bar.size(); ++t) {
    Vec<K> x;
    if (t + 1 == bar.size()) {
      x = f;
    } else {
      x = a.mul(a.mul(f, red.lift(bar[t])), f);
      for (int it = 0;; ++it) {
        const auto x2 = a.mul(x, x);
        if (x2 == x) break;
        if (it > 64) throw VerificationError("idempotent lifting did not converge");
        const auto x3 = a.mul(x2, x);
        x = sub(detail::scaled(x2, K(3)), detail::scaled(x3, K(2)));
      }
    }
    if (red.quotient_coords(x) != bar[t]) throw VerificationError("lifted idempotent does not reduce correctly");
    f = sub(f, x);
    w.idempotents.push_back(std::move(x));
  }
  // Certificates.
  Vec<K> total(a.dim(), K(0));
  for (std::size_t s = 0; s < w.idempotents.size(); ++s) {
    for (std::size_t t = 0; t < w.idempotents.size(); ++t) {
      const auto p = a.mul(w.idempotents[s], w.idempotents[t]);
      if (p != (s == t ? w.idempotents[s] : Vec<K>(a.dim(), K(0))))
        throw VerificationError("lifted idempotents are not orthogonal idempotents");
    }
    for (std::size_t i = 0; i < a.dim(); ++i) total[i] += w.idempotents[s][i];
    if (detail::corner_dim(q, bar[s], bar[s]) != 1) throw VerificationError("idempotent is not primitive");
  }
  if (total != a.unit) throw VerificationError("idempotents do not sum to 1");
  w.split = true;
  return w;
}

/// Pass iff A/J is a product of full matrix algebras over K; records block sizes.
template <class K>
struct SplitReport {
  bool ok = false;
  std::string detail;
  std::vector<int> block_sizes;
};

template <class K>
SplitReport<K> wedderburn_split_check(const Algebra<K>& a) {
  const auto w = wedderburn(a);
  return {w.split, w.split ? "split" : w.diagnostic, w.block_sizes};
}

template <class K>
std::vector<Vec<K>> primitive_idempotents(const Algebra<K>& a) {
  auto w = wedderburn(a);
  if (!w.split) throw PreconditionError("algebra is not split semisimple modulo its radical: " + w.diagnostic);
  return w.idempotents;
}

}  // namespace coradical
