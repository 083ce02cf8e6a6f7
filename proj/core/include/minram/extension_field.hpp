#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "minram/poly.hpp"
#include "minram/prime_field.hpp"

namespace minram {

/// Description of a finite field: F_p, or F_p[t]/(modulus) when a monic
/// irreducible modulus is supplied.
struct FieldSpec {
  std::uint64_t p = 2;
  std::optional<FpPoly> modulus;

  /// Field size p^deg(modulus); ResourceError if it does not fit in 63 bits.
  std::uint64_t q() const;
};

/// F_p[t]/(modulus). Elements are coefficient vectors of fixed length
/// deg(modulus), ascending powers of the residue class of t.
class ExtensionField {
 public:
  using Elem = std::vector<std::uint64_t>;

  /// Throws DomainError unless spec.modulus is present, monic and irreducible.
  explicit ExtensionField(const FieldSpec& spec);
  /// F_{p^k} built on the canonically smallest monic irreducible of degree k.
  static ExtensionField of_degree(std::uint64_t p, unsigned k);

  const PrimeField& base() const { return impl_->base; }
  const FpPoly& modulus() const { return impl_->modulus; }
  std::uint64_t characteristic() const { return impl_->base.characteristic(); }
  std::uint64_t size() const { return impl_->q; }
  unsigned degree() const { return impl_->k; }

  Elem zero() const { return Elem(impl_->k, 0); }
  Elem one() const;
  Elem from_int(long long v) const;
  /// Residue class of a polynomial in t.
  Elem reduce(const FpPoly& a) const;
  /// Residue class as a polynomial in t of degree < k.
  FpPoly lift(const Elem& a) const;
  /// Residue class of t.
  Elem generator() const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inv(const Elem& a) const;

  bool is_zero(const Elem& a) const;
  bool is_one(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  Elem element(std::uint64_t index) const;
  std::uint64_t index(const Elem& a) const;

  Elem pth_root(const Elem& a) const;
  bool is_square(const Elem& a) const;

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
    return a.impl_ == b.impl_ || (a.impl_->base == b.impl_->base && a.impl_->modulus == b.impl_->modulus);
  }

 private:
  struct Impl {
    PrimeField base;
    FpPoly modulus;
    unsigned k;
    std::uint64_t q;
  };
  explicit ExtensionField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// The canonically smallest monic irreducible polynomial of degree k over F_p.
FpPoly smallest_irreducible(const PrimeField& field, unsigned k);

}  // namespace minram
