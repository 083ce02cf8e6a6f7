#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minram/poly.hpp"

namespace minram {

/// An F_p-linear ("additive") polynomial sum_i taus[i] * x^(p^i) with
/// coefficients in F_p[t]. Only the x^(p^i) coefficients are stored, so the
/// x-degree p^n never has to be materialized.
class AdditivePoly {
 public:
  explicit AdditivePoly(PrimeField field) : field_(field) {}
  AdditivePoly(PrimeField field, std::vector<FpPoly> taus);

  const PrimeField& field() const { return field_; }
  const std::vector<FpPoly>& taus() const { return taus_; }
  bool is_zero() const { return taus_.empty(); }
  /// Largest i with taus[i] != 0 (the x-degree is p^height).
  int height() const { return static_cast<int>(taus_.size()) - 1; }

  /// Coefficientwise sum.
  friend AdditivePoly operator+(const AdditivePoly& a, const AdditivePoly& b);
  friend bool operator==(const AdditivePoly& a, const AdditivePoly& b) { return a.taus_ == b.taus_; }

  /// Evaluation at alpha inside F_p[t]/(modulus).
  FpPoly evaluate(const FpPoly& alpha, const FpPoly& modulus) const;

  /// "(1)*x^(3^2)+(t^3+t)*x^(3^1)+(t^2)*x^(3^0)".
  std::string to_string() const;

 private:
  PrimeField field_;
  std::vector<FpPoly> taus_;
};

/// a^(p^k) for a in F_p[t]: sum c_i t^(i p^k).
FpPoly frobenius(const FpPoly& a, unsigned k);

/// [M](x) from [1](x) = x, [t](x) = x^p + t x, [t^n] = [t]([t^{n-1}]) and
/// F_p-linearity in M.
AdditivePoly carlitz_poly(const FpPoly& m);

/// (A o B)(x) = A(B(x)).
AdditivePoly compose(const AdditivePoly& a, const AdditivePoly& b);

/// M . alpha = [M](alpha) in F_p[t]/(modulus). Iterates alpha -> alpha^p + t alpha
/// instead of materializing [M], so large M stay cheap.
FpPoly carlitz_action(const FpPoly& m, const FpPoly& alpha, const FpPoly& modulus);

/// |Gal(F_p(t, Lambda_M)/F_p(t))| = |(F_p[t]/M)^x|. The infinite place has
/// ramification index p-1 in the full M-th cyclotomic function field.
std::uint64_t cyclotomic_group_order(const FpPoly& m);

}  // namespace minram
