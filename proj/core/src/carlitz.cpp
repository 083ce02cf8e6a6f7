#include "minram/carlitz.hpp"

#include <algorithm>

#include "minram/errors.hpp"
#include "minram/factor.hpp"
#include "minram/text.hpp"

namespace minram {

AdditivePoly::AdditivePoly(PrimeField field, std::vector<FpPoly> taus) : field_(field), taus_(std::move(taus)) {
  while (!taus_.empty() && taus_.back().is_zero()) taus_.pop_back();
}

AdditivePoly operator+(const AdditivePoly& a, const AdditivePoly& b) {
  std::vector<FpPoly> v(std::max(a.taus_.size(), b.taus_.size()), FpPoly(a.field_));
  for (std::size_t i = 0; i < a.taus_.size(); ++i) v[i] = a.taus_[i];
  for (std::size_t i = 0; i < b.taus_.size(); ++i) v[i] += b.taus_[i];
  return AdditivePoly(a.field_, std::move(v));
}

FpPoly AdditivePoly::evaluate(const FpPoly& alpha, const FpPoly& modulus) const {
  const std::uint64_t p = field_.characteristic();
  FpPoly acc(field_);
  FpPoly power = alpha % modulus;
  for (std::size_t i = 0; i < taus_.size(); ++i) {
    acc = (acc + (taus_[i] % modulus) * power) % modulus;
    power = powmod(power, p, modulus);
  }
  return acc;
}

std::string AdditivePoly::to_string() const {
  if (taus_.empty()) return "0";
  std::string out;
  const std::string p = std::to_string(field_.characteristic());
  for (std::size_t i = taus_.size(); i-- > 0;) {
    if (taus_[i].is_zero()) continue;
    if (!out.empty()) out += '+';
    out += '(' + minram::to_string(taus_[i]) + ")*x^(" + p + '^' + std::to_string(i) + ')';
  }
  return out;
}

FpPoly frobenius(const FpPoly& a, unsigned k) {
  if (a.is_zero()) return a;
  const std::uint64_t stride = checked_pow(a.field().characteristic(), k);
  const std::uint64_t deg = checked_mul(static_cast<std::uint64_t>(a.degree()), stride);
  if (deg > (1u << 26)) throw ResourceError("Frobenius image too large to store densely");
  std::vector<PrimeField::Elem> v(deg + 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) v[i * stride] = a.coeffs()[i];
  return FpPoly(a.field(), std::move(v));
}

AdditivePoly carlitz_poly(const FpPoly& m) {
  const PrimeField& field = m.field();
  const FpPoly t = FpPoly::variable(field);
  AdditivePoly result(field);
  // power holds [t^k]; next taus: frob(b_{i-1}) + t*b_i.
  std::vector<FpPoly> power{FpPoly::one(field)};
  for (int k = 0; k <= m.degree(); ++k) {
    if (k > 0) {
      std::vector<FpPoly> next(power.size() + 1, FpPoly(field));
      for (std::size_t i = 0; i < power.size(); ++i) {
        next[i] += t * power[i];
        next[i + 1] += frobenius(power[i], 1);
      }
      power = std::move(next);
    }
    const auto c = m.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    std::vector<FpPoly> scaled;
    for (const auto& tau : power) scaled.push_back(tau.scaled(c));
    result = result + AdditivePoly(field, std::move(scaled));
  }
  return result;
}

AdditivePoly compose(const AdditivePoly& a, const AdditivePoly& b) {
  const PrimeField& field = a.field();
  if (a.is_zero() || b.is_zero()) return AdditivePoly(field);
  // a_i (sum_j b_j x^{p^j})^{p^i} = sum_j a_i b_j^{p^i} x^{p^{i+j}}
  std::vector<FpPoly> v(a.taus().size() + b.taus().size() - 1, FpPoly(field));
  for (std::size_t i = 0; i < a.taus().size(); ++i) {
    if (a.taus()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.taus().size(); ++j) {
      v[i + j] += a.taus()[i] * frobenius(b.taus()[j], static_cast<unsigned>(i));
    }
  }
  return AdditivePoly(field, std::move(v));
}

FpPoly carlitz_action(const FpPoly& m, const FpPoly& alpha, const FpPoly& modulus) {
  if (modulus.is_zero()) throw DomainError("Carlitz action modulo zero");
  if (modulus.degree() < 1) throw DomainError("Carlitz action needs a nonconstant modulus");
  const PrimeField& field = m.field();
  const std::uint64_t p = field.characteristic();
  const FpPoly t = FpPoly::variable(field) % modulus;
  FpPoly acc(field);
  FpPoly beta = alpha % modulus;  // [t^k](alpha)
  for (int k = 0; k <= m.degree(); ++k) {
    if (k > 0) beta = (powmod(beta, p, modulus) + t * beta) % modulus;
    const auto c = m.coeff(static_cast<std::size_t>(k));
    if (c != 0) acc = acc + beta.scaled(c);
  }
  return acc % modulus;
}

std::uint64_t cyclotomic_group_order(const FpPoly& m) { return phi(m); }

}  // namespace minram
