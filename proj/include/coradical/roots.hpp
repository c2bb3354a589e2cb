#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "coradical/exactla.hpp"

namespace coradical {

/// Univariate polynomials, coefficients low degree first, no trailing zeros.
namespace poly {

template <class K>
void trim(Vec<K>& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

template <class K>
int degree(const Vec<K>& f) {
  return static_cast<int>(f.size()) - 1;
}

template <class K>
K eval(const Vec<K>& f, const K& x) {
  K acc(0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Quotient and remainder; g must be nonzero.
template <class K>
std::pair<Vec<K>, Vec<K>> divmod(Vec<K> f, Vec<K> g) {
  trim(f);
  trim(g);
  if (g.empty()) throw Error("polynomial division by zero");
  if (f.size() < g.size()) return {{}, f};
  Vec<K> q(f.size() - g.size() + 1, K(0));
  const K lead_inv = g.back().inv();
  for (int i = degree(f) - degree(g); i >= 0; --i) {
    const K c = f[i + g.size() - 1] * lead_inv;
    q[i] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < g.size(); ++j) f[i + j] -= c * g[j];
  }
  trim(f);
  trim(q);
  return {q, f};
}

template <class K>
Vec<K> mul(const Vec<K>& a, const Vec<K>& b) {
  if (a.empty() || b.empty()) return {};
  Vec<K> c(a.size() + b.size() - 1, K(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

template <class K>
Vec<K> monic(Vec<K> f) {
  trim(f);
  if (f.empty()) return f;
  const K inv = f.back().inv();
  for (auto& c : f) c = c * inv;
  return f;
}

template <class K>
Vec<K> gcd(Vec<K> a, Vec<K> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class K>
Vec<K> powmod(Vec<K> base, std::uint64_t e, const Vec<K>& m) {
  Vec<K> acc = {K(1)};
  base = divmod(base, m).second;
  while (e) {
    if (e & 1) acc = divmod(mul(acc, base), m).second;
    base = divmod(mul(base, base), m).second;
    e >>= 1;
  }
  return acc;
}

template <class K>
std::string str(const Vec<K>& f) {
  std::string s;
  for (int i = degree(f); i >= 0; --i) {
    if (f[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + f[i].str() + ")";
    if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace poly

namespace detail {

inline std::vector<std::complex<long double>> approximate_roots(const std::vector<long double>& f) {
  // Durand-Kerner on the monic normalisation.
  const int n = static_cast<int>(f.size()) - 1;
  std::vector<std::complex<long double>> z(n);
  const std::complex<long double> seed(0.4L, 0.9L);
  for (int i = 0; i < n; ++i) z[i] = std::pow(seed, i);
  auto p = [&](std::complex<long double> x) {
    std::complex<long double> acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * x + f[i] / f[n];
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double delta = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<long double> den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      if (std::abs(den) == 0) den = 1e-18L;
      const auto step = p(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-16L) break;
  }
  return z;
}

/// Continued-fraction convergents of x with denominators up to `bound`.
inline std::vector<std::pair<mpz_class, mpz_class>> convergents(long double x, long bound) {
  std::vector<std::pair<mpz_class, mpz_class>> out;
  mpz_class h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  long double r = x;
  for (int it = 0; it < 40; ++it) {
    const long double a = std::floor(r);
    const mpz_class ai(static_cast<double>(a));
    mpz_class h = ai * h0 + h1, k = ai * k0 + k1;
    if (k > bound) break;
    out.emplace_back(h, k);
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    const long double frac = r - a;
    if (std::fabs(frac) < 1e-14L) break;
    r = 1 / frac;
  }
  return out;
}

}  // namespace detail

/// A root in K of a nonzero polynomial, or nullopt when none exists.
///
/// Over Q, candidates come from numerically approximated real roots rounded by
/// continued fractions and are confirmed exactly; a nullopt is therefore "no
/// rational root found", which callers report as a failed split certificate.
inline std::optional<Rational> find_root(Vec<Rational> f) {
  poly::trim(f);
  if (poly::degree(f) < 1) return std::nullopt;
  if (f[0].is_zero()) return Rational(0);
  if (poly::degree(f) == 1) return -f[0] / f[1];
  std::vector<long double> approx;
  for (const auto& c : f) approx.push_back(static_cast<long double>(c.to_double()));
  for (const auto& z : detail::approximate_roots(approx)) {
    if (std::fabs(z.imag()) > 1e-6L * (1 + std::fabs(z.real()))) continue;
    for (const auto& [h, k] : detail::convergents(z.real(), 1000000)) {
      const Rational cand(mpq_class(h, k));
      if (poly::eval(f, cand).is_zero()) return cand;
    }
    for (long d : {-1L, 0L, 1L}) {
      const Rational cand(static_cast<long>(std::llround(z.real())) + d);
      if (poly::eval(f, cand).is_zero()) return cand;
    }
  }
  return std::nullopt;
}

/// Exact over F_p: gcd with x^p - x, then Cantor-Zassenhaus equal-degree splitting.
inline std::optional<ModP> find_root(Vec<ModP> f) {
  poly::trim(f);
  if (poly::degree(f) < 1) return std::nullopt;
  const std::uint32_t p = ModP::modulus();
  if (p == 2) {
    for (long v : {0L, 1L})
      if (poly::eval(f, ModP(v)).is_zero()) return ModP(v);
    return std::nullopt;
  }
  f = poly::monic(f);
  Vec<ModP> xp = poly::powmod<ModP>({ModP(0), ModP(1)}, p, f);
  xp.resize(std::max<std::size_t>(xp.size(), 2), ModP(0));
  xp[1] -= ModP(1);
  poly::trim(xp);
  Vec<ModP> g = poly::gcd(f, xp);
  if (poly::degree(g) < 1) return std::nullopt;
  for (long a = 0; poly::degree(g) > 1; ++a) {
    Vec<ModP> h = poly::powmod<ModP>({ModP(a), ModP(1)}, (p - 1) / 2, g);
    if (h.empty()) h = {ModP(0)};
    h[0] -= ModP(1);
    poly::trim(h);
    const Vec<ModP> d = poly::gcd(g, h);
    if (poly::degree(d) >= 1 && poly::degree(d) < poly::degree(g)) g = d;
    if (a > 10000) throw Error("root splitting did not converge");
  }
  return -g[0];
}

}  // namespace coradical
