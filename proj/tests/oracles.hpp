#pragma once

// Deliberately naive reference arithmetic used as test oracles. Nothing here
// calls into the library, so agreement is evidence rather than tautology.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;  // ascending coefficients mod p

inline std::int64_t md(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Vec norm(Vec a, std::int64_t p) {
  for (auto& c : a) c = md(c, p);
  trim(a);
  return a;
}

inline Vec mul(const Vec& a, const Vec& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = md(r[i + j] + a[i] * b[j], p);
  }
  trim(r);
  return r;
}

inline Vec sub(Vec a, const Vec& b, std::int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = md(a[i] - b[i], p);
  trim(a);
  return a;
}

/// Inverse mod p by the extended Euclidean algorithm (0 for a = 0).
inline std::int64_t inv(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = md(a, p), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::swap(r0, r1);
    r1 -= q * r0;
    std::swap(s0, s1);
    s1 -= q * s0;
  }
  return r0 == 1 ? md(s0, p) : 0;
}

/// Remainder of a by b (b nonzero).
inline Vec rem(Vec a, const Vec& b, std::int64_t p) {
  const std::int64_t li = inv(b.back(), p);
  while (a.size() >= b.size()) {
    const std::int64_t c = md(a.back() * li, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = md(a[shift + i] - c * b[i], p);
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

inline Vec gcd(Vec a, Vec b, std::int64_t p) {
  while (!b.empty()) {
    Vec r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// All monic polynomials of exact degree d.
inline std::vector<Vec> monics(int d, std::int64_t p) {
  std::vector<Vec> out;
  std::int64_t n = 1;
  for (int i = 0; i < d; ++i) n *= p;
  for (std::int64_t idx = 0; idx < n; ++idx) {
    Vec v(d + 1, 0);
    std::int64_t r = idx;
    for (int i = 0; i < d; ++i) {
      v[i] = r % p;
      r /= p;
    }
    v[d] = 1;
    out.push_back(v);
  }
  return out;
}

/// Trial division by every monic polynomial of degree <= deg/2.
inline bool irreducible(const Vec& f, std::int64_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) return false;
  for (int d = 1; 2 * d <= n; ++d) {
    for (const auto& g : monics(d, p)) {
      if (rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

/// Number of units in F_p[t]/(m), by testing every residue.
inline std::uint64_t unit_count(const Vec& m, std::int64_t p) {
  const int n = static_cast<int>(m.size()) - 1;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(p);
  std::uint64_t units = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vec r(n, 0);
    std::uint64_t x = idx;
    for (int i = 0; i < n; ++i) {
      r[i] = static_cast<std::int64_t>(x % p);
      x /= p;
    }
    trim(r);
    if (r.empty()) continue;
    if (gcd(m, r, p).size() == 1) ++units;
  }
  return units;
}

inline std::int64_t eval(const Vec& f, std::int64_t x, std::int64_t p) {
  std::int64_t r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = md(r * x + *it, p);
  return r;
}

inline bool is_square_mod(std::int64_t a, std::int64_t p) {
  a = md(a, p);
  for (std::int64_t y = 0; y < p; ++y) {
    if (md(y * y, p) == a) return true;
  }
  return false;
}

/// Determinant mod p by Gaussian elimination.
inline std::int64_t det(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  const std::size_t n = m.size();
  std::int64_t d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && md(m[piv][c], p) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = md(-d, p);
    }
    d = md(d * m[c][c], p);
    const std::int64_t iv = inv(md(m[c][c], p), p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::int64_t f = md(m[r][c] * iv, p);
      for (std::size_t k = c; k < n; ++k) m[r][k] = md(m[r][k] - f * m[c][k], p);
    }
  }
  return d;
}

/// Discriminant of a univariate polynomial over F_p via the Sylvester matrix
/// of f and f' (f' taken with formal degree n-1).
inline std::int64_t disc(const Vec& f, std::int64_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  Vec df(n, 0);
  for (int i = 1; i <= n; ++i) df[i - 1] = md(i * f[i], p);
  const int m = n - 1;
  const int size = n + m;
  std::vector<std::vector<std::int64_t>> s(size, std::vector<std::int64_t>(size, 0));
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) s[r][r + (n - i)] = f[i];
  }
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) s[m + r][r + (m - i)] = df[i];
  }
  std::int64_t res = det(s, p);
  if ((n * (n - 1) / 2) % 2) res = md(-res, p);
  return md(res * inv(f[n], p), p);
}

}  // namespace oracle
