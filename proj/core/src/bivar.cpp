#include "minram/bivar.hpp"

#include <algorithm>
#include <utility>

#include "minram/errors.hpp"

namespace minram {

XPoly::XPoly(PrimeField field, std::vector<FpPoly> coeffs) : field_(field), c_(std::move(coeffs)) { trim(); }

void XPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly XPoly::constant(const FpPoly& c) { return XPoly(c.field(), {c}); }

XPoly XPoly::x(const PrimeField& field) { return XPoly(field, {FpPoly(field), FpPoly::one(field)}); }

int XPoly::t_degree() const {
  int d = kZeroDegree;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

XPoly XPoly::derivative() const {
  std::vector<FpPoly> v;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v.push_back(c_[i].scaled(field_.from_int(static_cast<long long>(i % field_.characteristic()))));
  }
  return XPoly(field_, std::move(v));
}

FpPoly XPoly::evaluate(const FpPoly& r) const {
  FpPoly acc(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * r + *it;
  return acc;
}

FpPoly XPoly::specialize(PrimeField::Elem c) const {
  std::vector<PrimeField::Elem> v;
  v.reserve(c_.size());
  for (const auto& a : c_) v.push_back(a.eval(c));
  return FpPoly(field_, std::move(v));
}

XPoly XPoly::operator-() const {
  std::vector<FpPoly> v;
  for (const auto& a : c_) v.push_back(-a);
  return XPoly(field_, std::move(v));
}

XPoly operator+(const XPoly& a, const XPoly& b) {
  std::vector<FpPoly> v(std::max(a.c_.size(), b.c_.size()), FpPoly(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return XPoly(a.field_, std::move(v));
}

XPoly operator-(const XPoly& a, const XPoly& b) { return a + (-b); }

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return XPoly(a.field_);
  std::vector<FpPoly> v(a.c_.size() + b.c_.size() - 1, FpPoly(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return XPoly(a.field_, std::move(v));
}

XPoly XPoly::pow(unsigned e) const {
  XPoly r = constant(FpPoly::one(field_));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

FpPoly bareiss_determinant(std::vector<std::vector<FpPoly>> m, const PrimeField& field) {
  const std::size_t n = m.size();
  if (n == 0) return FpPoly::one(field);
  bool negate = false;
  FpPoly prev = FpPoly::one(field);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return FpPoly(field);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        FpPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto [q, r] = num.divrem(prev);
        if (!r.is_zero()) throw InternalError("Bareiss step left a nonzero remainder");
        m[i][j] = std::move(q);
      }
    }
    prev = m[k][k];
  }
  FpPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

FpPoly resultant(const XPoly& f, const XPoly& g, int g_formal_degree) {
  const PrimeField& field = f.field();
  const int n = f.degree();
  const int m = g_formal_degree < 0 ? g.degree() : g_formal_degree;
  if (n < 0 || g.is_zero()) return FpPoly(field);
  if (m < g.degree()) throw DomainError("formal degree below actual degree");
  const std::size_t size = static_cast<std::size_t>(n + m);
  if (size == 0) return FpPoly::one(field);
  std::vector<std::vector<FpPoly>> s(size, std::vector<FpPoly>(size, FpPoly(field)));
  // Rows 0..m-1: shifts of f; rows m..m+n-1: shifts of g. Columns run from the
  // highest power down.
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) s[r][r + (n - i)] = f.coeff(i);
  }
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) s[m + r][r + (m - i)] = g.coeff(i);
  }
  return bareiss_determinant(std::move(s), field);
}

Discriminant discriminant(const XPoly& f) {
  const int n = f.degree();
  if (n < 2) throw DomainError("discriminant needs x-degree >= 2");
  if (f.lc().degree() != 0) throw DomainError("discriminant needs a constant leading coefficient");
  const PrimeField& field = f.field();
  XPoly df = f.derivative();
  if (df.is_zero()) return {FpPoly(field), true};
  FpPoly res = resultant(f, df, n - 1);
  FpPoly d = res.scaled(field.inv(f.lc().lc()));
  if ((static_cast<long long>(n) * (n - 1) / 2) % 2) d = -d;
  return {d, false};
}

Poly<ExtensionField> reduce_mod_place(const XPoly& f, const FpPoly& place) {
  if (place.degree() < 1 || !is_irreducible(place)) throw DomainError("place must be an irreducible polynomial");
  ExtensionField residue(FieldSpec{f.field().characteristic(), place.monic()});
  std::vector<ExtensionField::Elem> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(residue.reduce(c));
  return Poly<ExtensionField>(residue, std::move(v));
}

}  // namespace minram
