#pragma once

#include <cstddef>
#include <vector>

#include "minram/extension_field.hpp"
#include "minram/poly.hpp"

namespace minram {

/// Polynomial in x whose coefficients lie in F_p[t]; ascending x-degree.
class XPoly {
 public:
  explicit XPoly(PrimeField field) : field_(field) {}
  XPoly(PrimeField field, std::vector<FpPoly> coeffs);

  static XPoly constant(const FpPoly& c);
  static XPoly x(const PrimeField& field);

  const PrimeField& field() const { return field_; }
  const std::vector<FpPoly>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FpPoly coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FpPoly(field_); }
  FpPoly lc() const { return c_.empty() ? FpPoly(field_) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  /// Largest t-degree among the coefficients.
  int t_degree() const;

  /// d/dx.
  XPoly derivative() const;
  /// f(r) for r in F_p[t].
  FpPoly evaluate(const FpPoly& r) const;
  /// f(c, x) for a constant c in F_p, as a polynomial in x.
  FpPoly specialize(PrimeField::Elem c) const;

  XPoly operator-() const;
  friend XPoly operator+(const XPoly& a, const XPoly& b);
  friend XPoly operator-(const XPoly& a, const XPoly& b);
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  XPoly pow(unsigned e) const;
  friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_ && a.field_ == b.field_; }

 private:
  void trim();

  PrimeField field_;
  std::vector<FpPoly> c_;
};

/// Sylvester resultant Res_x(f, g) over F_p[t] by fraction-free (Bareiss)
/// elimination. g is taken with formal degree g_formal_degree (>= deg g) so
/// leading zero rows behave like the generic resultant.
FpPoly resultant(const XPoly& f, const XPoly& g, int g_formal_degree = -1);

/// Determinant of a square matrix over F_p[t] (Bareiss).
FpPoly bareiss_determinant(std::vector<std::vector<FpPoly>> m, const PrimeField& field);

struct Discriminant {
  FpPoly value;
  bool inseparable = false;  ///< f' vanished identically; value is zero
};

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f). Requires deg f >= 2 and lc(f)
/// a nonzero constant.
Discriminant discriminant(const XPoly& f);

/// Coefficientwise reduction into the residue field F_p[t]/(place).
Poly<ExtensionField> reduce_mod_place(const XPoly& f, const FpPoly& place);

}  // namespace minram
