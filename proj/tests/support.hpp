#pragma once

#include <random>
#include <string>
#include <vector>

#include "coradical/coradical.hpp"

namespace testing_support {

using coradical::Matrix;
using coradical::Rational;

template <class K>
Matrix<K> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3, double density = 0.6) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::bernoulli_distribution keep(density);
  Matrix<K> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng)) m(i, j) = K(d(rng));
  return m;
}

/// Low-rank product, so kernels and images are nontrivial.
template <class K>
Matrix<K> random_low_rank(std::mt19937& rng, std::size_t r, std::size_t c, std::size_t k) {
  return random_matrix<K>(rng, r, k) * random_matrix<K>(rng, k, c);
}

/// Laplace expansion; only for tiny matrices.
template <class K>
K det_bruteforce(const Matrix<K>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return K(1);
  if (n == 1) return m(0, 0);
  K out(0);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<K> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(i - 1, cc++) = m(i, c);
    const K term = m(0, j) * det_bruteforce(minor);
    out = (j % 2 == 0) ? out + term : out - term;
  }
  return out;
}

/// Largest nonvanishing minor, by enumeration.
template <class K>
std::size_t rank_by_minors(const Matrix<K>& m) {
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + k, true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + k, true);
      do {
        std::vector<std::size_t> ri, ci;
        for (std::size_t i = 0; i < r; ++i)
          if (rs[i]) ri.push_back(i);
        for (std::size_t j = 0; j < c; ++j)
          if (cs[j]) ci.push_back(j);
        if (!det_bruteforce(m.select_rows(ri).select_columns(ci)).is_zero()) return k;
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
  }
  return 0;
}

inline std::string fixture_dir() { return CORADICAL_FIXTURES; }

}  // namespace testing_support
