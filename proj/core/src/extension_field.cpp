#include "minram/extension_field.hpp"

#include <string>

#include "minram/errors.hpp"

namespace minram {

std::uint64_t FieldSpec::q() const {
  unsigned k = modulus ? static_cast<unsigned>(modulus->degree()) : 1;
  std::uint64_t q = checked_pow(p, k);
  if (q >> 63) throw ResourceError("field size exceeds 2^63");
  return q;
}

ExtensionField::ExtensionField(const FieldSpec& spec) {
  PrimeField base(spec.p);
  if (!spec.modulus) throw DomainError("extension field needs a modulus");
  const FpPoly& m = *spec.modulus;
  if (!(m.field() == base)) throw DomainError("modulus defined over a different prime field");
  if (m.degree() < 1 || !m.is_monic()) throw DomainError("extension modulus must be monic of positive degree");
  if (!is_irreducible(m)) throw DomainError("extension modulus is reducible");
  impl_ = std::make_shared<const Impl>(Impl{base, m, static_cast<unsigned>(m.degree()), spec.q()});
}

ExtensionField ExtensionField::of_degree(std::uint64_t p, unsigned k) {
  PrimeField base(p);
  return ExtensionField(FieldSpec{p, smallest_irreducible(base, k)});
}

ExtensionField::Elem ExtensionField::one() const {
  Elem e(impl_->k, 0);
  e[0] = 1;
  return e;
}

ExtensionField::Elem ExtensionField::from_int(long long v) const {
  Elem e(impl_->k, 0);
  e[0] = impl_->base.from_int(v);
  return e;
}

ExtensionField::Elem ExtensionField::reduce(const FpPoly& a) const {
  FpPoly r = a % impl_->modulus;
  Elem e(impl_->k, 0);
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) e[i] = r.coeffs()[i];
  return e;
}

FpPoly ExtensionField::lift(const Elem& a) const { return FpPoly(impl_->base, a); }

ExtensionField::Elem ExtensionField::generator() const {
  return reduce(FpPoly::variable(impl_->base));
}

ExtensionField::Elem ExtensionField::add(const Elem& a, const Elem& b) const {
  Elem r(impl_->k);
  for (unsigned i = 0; i < impl_->k; ++i) r[i] = impl_->base.add(a[i], b[i]);
  return r;
}

ExtensionField::Elem ExtensionField::sub(const Elem& a, const Elem& b) const {
  Elem r(impl_->k);
  for (unsigned i = 0; i < impl_->k; ++i) r[i] = impl_->base.sub(a[i], b[i]);
  return r;
}

ExtensionField::Elem ExtensionField::neg(const Elem& a) const {
  Elem r(impl_->k);
  for (unsigned i = 0; i < impl_->k; ++i) r[i] = impl_->base.neg(a[i]);
  return r;
}

ExtensionField::Elem ExtensionField::mul(const Elem& a, const Elem& b) const {
  const unsigned k = impl_->k;
  const std::uint64_t p = impl_->base.characteristic();
  if (k == 1) return Elem{a[0] * b[0] % p};
  // Schoolbook product then reduction by the monic modulus.
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  const auto& m = impl_->modulus.coeffs();
  for (unsigned d = 2 * k - 1; d-- > k;) {
    std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (unsigned j = 0; j < k; ++j) {
      prod[d - k + j] = (prod[d - k + j] + (p - c) * m[j]) % p;
    }
    prod[d] = 0;
  }
  prod.resize(k);
  return prod;
}

ExtensionField::Elem ExtensionField::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

ExtensionField::Elem ExtensionField::inv(const Elem& a) const {
  if (is_zero(a)) throw DomainError("inverse of zero in extension field");
  return pow(a, impl_->q - 2);
}

bool ExtensionField::is_zero(const Elem& a) const {
  for (auto c : a) {
    if (c) return false;
  }
  return true;
}

bool ExtensionField::is_one(const Elem& a) const {
  if (a[0] != 1) return false;
  for (unsigned i = 1; i < impl_->k; ++i) {
    if (a[i]) return false;
  }
  return true;
}

ExtensionField::Elem ExtensionField::element(std::uint64_t index) const {
  const std::uint64_t p = impl_->base.characteristic();
  Elem e(impl_->k, 0);
  for (unsigned i = 0; i < impl_->k; ++i) {
    e[i] = index % p;
    index /= p;
  }
  return e;
}

std::uint64_t ExtensionField::index(const Elem& a) const {
  const std::uint64_t p = impl_->base.characteristic();
  std::uint64_t r = 0;
  for (unsigned i = impl_->k; i-- > 0;) r = r * p + a[i];
  return r;
}

ExtensionField::Elem ExtensionField::pth_root(const Elem& a) const {
  return pow(a, impl_->q / impl_->base.characteristic());
}

bool ExtensionField::is_square(const Elem& a) const {
  if (impl_->base.characteristic() == 2 || is_zero(a)) return true;
  return is_one(pow(a, (impl_->q - 1) / 2));
}

FpPoly smallest_irreducible(const PrimeField& field, unsigned k) {
  if (k == 0) throw DomainError("irreducible of degree 0 requested");
  const std::uint64_t count = checked_pow(field.size(), k);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint64_t> c(k + 1, 0);
    std::uint64_t v = idx;
    for (unsigned i = 0; i < k; ++i) {
      c[i] = v % field.size();
      v /= field.size();
    }
    c[k] = 1;
    FpPoly f(field, std::move(c));
    if (is_irreducible(f)) return f;
  }
  throw InternalError("no irreducible polynomial of degree " + std::to_string(k));
}

}  // namespace minram
