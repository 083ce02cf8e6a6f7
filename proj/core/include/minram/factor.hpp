#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "minram/errors.hpp"
#include "minram/poly.hpp"

namespace minram {

inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eedf00dULL;

/// f = unit * prod factor^exponent, factors monic irreducible, pairwise
/// distinct, in canonical order.
template <class F>
struct Factorization {
  typename F::Elem unit;
  std::vector<std::pair<Poly<F>, unsigned>> factors;

  Poly<F> expand(const F& field) const {
    Poly<F> r = Poly<F>::constant(field, unit);
    for (const auto& [g, e] : factors) r *= g.pow(e);
    return r;
  }
};

namespace detail {

/// g with g^p = f, for f whose exponents are all multiples of p.
template <class F>
Poly<F> poly_pth_root(const Poly<F>& f) {
  const F& fld = f.field();
  const std::uint64_t p = fld.characteristic();
  std::vector<typename F::Elem> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(fld.pth_root(f.coeffs()[i]));
  return Poly<F>(fld, std::move(v));
}

/// Squarefree decomposition of a monic f: pairs (g_i, i) with f = prod g_i^i,
/// g_i squarefree and pairwise coprime. Handles f' = 0 via p-th roots.
template <class F>
std::vector<std::pair<Poly<F>, unsigned>> squarefree_decomposition(const Poly<F>& f) {
  std::vector<std::pair<Poly<F>, unsigned>> out;
  if (f.degree() <= 0) return out;
  const std::uint64_t p = f.field().characteristic();
  Poly<F> c = gcd(f, f.derivative());
  Poly<F> w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly<F> y = gcd(w, c);
    Poly<F> fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac, i);
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) {
    for (auto& [g, e] : squarefree_decomposition(poly_pth_root(c))) {
      out.emplace_back(g, static_cast<unsigned>(e * p));
    }
  }
  return out;
}

/// Distinct-degree factorization of a monic squarefree f.
template <class F>
std::vector<std::pair<Poly<F>, unsigned>> distinct_degree(Poly<F> f) {
  std::vector<std::pair<Poly<F>, unsigned>> out;
  const Poly<F> x = Poly<F>::variable(f.field());
  Poly<F> h = x % f;
  unsigned d = 0;
  while (2 * (d + 1) <= static_cast<unsigned>(f.degree())) {
    ++d;
    h = powmod(h, f.field().size(), f);
    Poly<F> g = gcd(h - x, f);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

template <class F>
Poly<F> random_poly(const F& field, int max_deg, std::mt19937_64& rng) {
  std::vector<typename F::Elem> v;
  for (int i = 0; i <= max_deg; ++i) v.push_back(field.element(rng() % field.size()));
  return Poly<F>(field, std::move(v));
}

/// Equal-degree splitting (Cantor-Zassenhaus; trace map in characteristic 2).
template <class F>
void equal_degree(const Poly<F>& f, unsigned d, std::mt19937_64& rng, std::vector<Poly<F>>& out) {
  const int n = f.degree();
  if (n == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const F& fld = f.field();
  const std::uint64_t q = fld.size();
  for (;;) {
    Poly<F> a = random_poly(fld, n - 1, rng);
    if (a.degree() <= 0) continue;
    Poly<F> b(fld);
    if (q % 2 == 1) {
      // a^((q^d - 1)/2) = prod_{i<d} (a^((q-1)/2))^(q^i)
      Poly<F> r = powmod(a, (q - 1) / 2, f);
      Poly<F> s = r;
      b = r;
      for (unsigned i = 1; i < d; ++i) {
        s = powmod(s, q, f);
        b = (b * s) % f;
      }
      b = b - Poly<F>::one(fld);
    } else {
      // Absolute trace to F_2 of the degree-d extension: sum of a^(2^j).
      unsigned k = 0;
      for (std::uint64_t t = q; t > 1; t >>= 1) ++k;
      Poly<F> s = a % f;
      b = s;
      for (unsigned j = 1; j < k * d; ++j) {
        s = (s * s) % f;
        b = b + s;
      }
    }
    Poly<F> g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Complete factorization over the coefficient field. Deterministic for a
/// given seed; the canonical ordering makes the result seed-independent.
template <class F>
Factorization<F> factor(const Poly<F>& f, std::uint64_t seed = kDefaultFactorSeed) {
  if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
  Factorization<F> out{f.lc(), {}};
  std::mt19937_64 rng(seed);
  for (const auto& [sq, mult] : detail::squarefree_decomposition(f.monic())) {
    for (const auto& [block, d] : detail::distinct_degree(sq)) {
      std::vector<Poly<F>> parts;
      detail::equal_degree(block, d, rng, parts);
      for (auto& g : parts) out.factors.emplace_back(std::move(g), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return out;
}

/// True iff f = g^2 for some polynomial g over the same field (0 is a square).
template <class F>
bool is_square(const Poly<F>& f) {
  if (f.is_zero()) return true;
  auto fac = factor(f);
  if (!f.field().is_square(fac.unit)) return false;
  for (const auto& [g, e] : fac.factors) {
    if (e % 2) return false;
  }
  return true;
}

template <class F>
struct SquarefreePart {
  Poly<F> part;             ///< monic product of odd-multiplicity irreducibles
  typename F::Elem unit;    ///< leading coefficient of the input
  bool unit_is_square;
};

template <class F>
SquarefreePart<F> squarefree_part(const Poly<F>& f) {
  if (f.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  auto fac = factor(f);
  Poly<F> r = Poly<F>::one(f.field());
  for (const auto& [g, e] : fac.factors) {
    if (e % 2) r *= g;
  }
  return {r, fac.unit, f.field().is_square(fac.unit)};
}

/// Monic divisors of f (nonzero), optionally only those of degree <= max_deg.
template <class F>
std::vector<Poly<F>> monic_divisors(const Poly<F>& f, int max_deg = -1) {
  auto fac = factor(f);
  std::vector<Poly<F>> out{Poly<F>::one(f.field())};
  for (const auto& [g, e] : fac.factors) {
    std::vector<Poly<F>> next;
    for (const auto& d : out) {
      Poly<F> cur = d;
      for (unsigned k = 0; k <= e; ++k) {
        if (max_deg >= 0 && cur.degree() > max_deg) break;
        next.push_back(cur);
        cur *= g;
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return canonical_less(a, b); });
  return out;
}

/// Order of (F_p[t]/M)^x: prod (p^{d e} - p^{d (e-1)}) over M = prod pi^e.
std::uint64_t phi(const FpPoly& m);

}  // namespace minram
