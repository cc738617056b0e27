#pragma once

// Independent reference implementations used only by the tests.

#include <cstdint>
#include <vector>

#include "ffdio/bigint.hpp"
#include "ffdio/field.hpp"
#include "ffdio/poly.hpp"

namespace oracle {

using ffdio::Elt;
using ffdio::Field;

/// Schoolbook GF(l^s) multiplication on coefficient vectors, reducing by
/// the modulus one degree at a time.
inline std::vector<std::uint64_t> slow_mul(const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b,
                                           const std::vector<std::uint64_t>& modulus, std::uint64_t l) {
  const std::size_t s = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * s, 0);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % l;
  }
  for (std::size_t d = prod.size(); d-- > s;) {
    const std::uint64_t c = prod[d];
    if (!c) continue;
    for (std::size_t k = 0; k <= s; ++k) prod[d - s + k] = (prod[d - s + k] + (l - c) * modulus[k] % l) % l;
  }
  prod.resize(s);
  return prod;
}

/// Determinant over a field by Gaussian elimination.
inline Elt determinant(const Field& k, std::vector<std::vector<Elt>> m) {
  const std::size_t n = m.size();
  Elt det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = k.neg(det);
    }
    det = k.mul(det, m[c][c]);
    const Elt inv = k.inv(m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Elt factor = k.mul(m[r][c], inv);
      for (std::size_t j = c; j < n; ++j) m[r][j] = k.sub(m[r][j], k.mul(factor, m[c][j]));
    }
  }
  return det;
}

/// Sylvester matrix of f, g (coefficients constant term first).
template <class T>
std::vector<std::vector<T>> sylvester(const std::vector<T>& f, const std::vector<T>& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
  std::vector<std::vector<T>> s(size, std::vector<T>(size, T(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f[m - i];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g[n - i];
  }
  return s;
}

inline Elt sylvester_resultant(const ffdio::Poly& f, const ffdio::Poly& g) {
  return determinant(f.field(), sylvester(f.coeffs(), g.coeffs()));
}

/// Fraction-free (Bareiss) determinant over the integers.
inline ffdio::BigInt bareiss(std::vector<std::vector<ffdio::BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  ffdio::BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Roots by evaluation at every field element.
inline std::vector<Elt> brute_roots(const ffdio::Poly& f) {
  std::vector<Elt> out;
  for (Elt a = 0; a < f.field().order(); ++a) {
    if (f.eval(a) == 0) out.push_back(a);
  }
  return out;
}

/// Multiplicity of the root a by repeated synthetic division.
inline unsigned brute_multiplicity(ffdio::Poly f, Elt a) {
  unsigned m = 0;
  const ffdio::Poly lin(f.field(), {f.field().neg(a), 1});
  while (!f.is_zero() && f.eval(a) == 0) {
    f = f / lin;
    ++m;
  }
  return m;
}

}  // namespace oracle
