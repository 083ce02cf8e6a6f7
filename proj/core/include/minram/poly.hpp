#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "minram/errors.hpp"
#include "minram/prime_field.hpp"

namespace minram {

/// Degree reported for the zero polynomial (stands in for -infinity).
inline constexpr int kZeroDegree = -1;

/// Dense univariate polynomial over a finite field F, ascending coefficients,
/// no trailing zeros. The same type serves for F_p[t] and for F_q[x].
template <class F>
class Poly {
 public:
  using Field = F;
  using Elem = typename F::Elem;

  explicit Poly(F field) : field_(std::move(field)) {}
  Poly(F field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& field, Elem c) { return Poly(field, std::vector<Elem>{std::move(c)}); }
  static Poly one(const F& field) { return constant(field, field.one()); }
  static Poly monomial(const F& field, Elem c, std::size_t deg) {
    std::vector<Elem> v(deg + 1, field.zero());
    v[deg] = std::move(c);
    return Poly(field, std::move(v));
  }
  /// The polynomial "x" (or "t").
  static Poly variable(const F& field) { return monomial(field, field.one(), 1); }

  const F& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && field_.is_one(c_[0]); }
  bool is_monic() const { return !c_.empty() && field_.is_one(c_.back()); }

  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  /// Leading coefficient; zero for the zero polynomial.
  Elem lc() const { return c_.empty() ? field_.zero() : c_.back(); }

  Poly monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(field_.inv(lc()));
  }

  Poly scaled(const Elem& s) const {
    if (field_.is_zero(s)) return Poly(field_);
    std::vector<Elem> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(field_.mul(a, s));
    return Poly(field_, std::move(v));
  }

  Elem eval(const Elem& x) const {
    Elem r = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_.add(field_.mul(r, x), *it);
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<Elem> v;
    v.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      v.push_back(field_.mul(field_.from_int(static_cast<long long>(i % field_.characteristic())), c_[i]));
    }
    return Poly(field_, std::move(v));
  }

  Poly operator-() const {
    std::vector<Elem> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(field_.neg(a));
    return Poly(field_, std::move(v));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const F& f = a.field_;
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = f.add(v[i], b.c_[i]);
    return Poly(f, std::move(v));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    const F& f = a.field_;
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = f.sub(v[i], b.c_[i]);
    return Poly(f, std::move(v));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    const F& f = a.field_;
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (f.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
      }
    }
    return Poly(f, std::move(v));
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Euclidean division; throws DomainError on division by zero.
  std::pair<Poly, Poly> divrem(const Poly& d) const {
    const F& f = field_;
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (degree() < d.degree()) return {Poly(f), *this};
    std::vector<Elem> r = c_;
    std::vector<Elem> q(c_.size() - d.c_.size() + 1, f.zero());
    const Elem lead_inv = f.inv(d.lc());
    const bool monic_divisor = f.is_one(d.lc());
    for (std::size_t k = q.size(); k-- > 0;) {
      const Elem& top = r[k + d.c_.size() - 1];
      if (f.is_zero(top)) continue;
      Elem qk = monic_divisor ? top : f.mul(top, lead_inv);
      for (std::size_t j = 0; j < d.c_.size(); ++j) {
        r[k + j] = f.sub(r[k + j], f.mul(qk, d.c_[j]));
      }
      q[k] = std::move(qk);
    }
    r.resize(d.c_.size() - 1);
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
  }

  friend Poly operator/(const Poly& a, const Poly& b) { return a.divrem(b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divrem(b).second; }

  bool divides(const Poly& other) const { return (other % *this).is_zero(); }

  Poly pow(std::uint64_t e) const {
    Poly r = one(field_), b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  /// Substitution this(g).
  Poly compose(const Poly& g) const {
    Poly r(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * g + constant(field_, *it);
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
    }
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  F field_;
  std::vector<Elem> c_;
};

using FpPoly = Poly<PrimeField>;

/// Canonical order: ascending degree, then the coefficient vector compared
/// from the leading term down using the field's element index.
template <class F>
bool canonical_less(const Poly<F>& a, const Poly<F>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const F& f = a.field();
  for (int i = a.degree(); i >= 0; --i) {
    auto ia = f.index(a.coeffs()[i]);
    auto ib = f.index(b.coeffs()[i]);
    if (ia != ib) return ia < ib;
  }
  return false;
}

/// Monic gcd (zero iff both inputs are zero).
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// a^e mod m.
template <class F>
Poly<F> powmod(const Poly<F>& a, std::uint64_t e, const Poly<F>& m) {
  Poly<F> r = Poly<F>::one(a.field()) % m;
  Poly<F> b = a % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return r;
}

/// a^(q^k) mod m via k successive q-th powers; keeps exponents within 64 bits.
template <class F>
Poly<F> frobenius_powmod(const Poly<F>& a, unsigned k, const Poly<F>& m) {
  Poly<F> r = a % m;
  const std::uint64_t q = a.field().size();
  for (unsigned i = 0; i < k; ++i) r = powmod(r, q, m);
  return r;
}

/// Rabin's irreducibility test. Constants are not irreducible.
template <class F>
bool is_irreducible(const Poly<F>& f) {
  if (f.is_zero()) throw DomainError("irreducibility of the zero polynomial");
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const Poly<F> m = f.monic();
  const Poly<F> x = Poly<F>::variable(f.field());
  for (std::uint64_t r : prime_divisors(static_cast<std::uint64_t>(n))) {
    Poly<F> h = frobenius_powmod(x, static_cast<unsigned>(n / r), m);
    if (!gcd(h - x, m).is_one()) return false;
  }
  return frobenius_powmod(x, static_cast<unsigned>(n), m) == x % m;
}

/// True iff gcd(f, f') = 1 (no repeated root in an algebraic closure).
template <class F>
bool is_squarefree(const Poly<F>& f) {
  if (f.is_zero()) return false;
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).is_one();
}

}  // namespace minram
