#pragma once

#include <cstdint>
#include <vector>

namespace minram {

/// Deterministic primality for 64-bit inputs: trial division below 2^16, then
/// Miller-Rabin with a base set that is exact below 2^64.
bool is_prime(std::uint64_t n);

/// Distinct prime divisors in ascending order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// n = prod p^e, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n);

/// Integer power with overflow detection; throws ResourceError on overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

/// The prime field F_p. Elements are residues in [0, p).
///
/// Every field type in this library exposes the same surface (Elem, add, mul,
/// inv, element/index enumeration, pth_root, is_square) so that Poly<F> and
/// the factorization routines are written once.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  /// Throws DomainError unless p is a prime below 2^31.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  std::uint64_t size() const { return p_; }
  unsigned degree() const { return 1; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Elem>(r < 0 ? r + static_cast<long long>(p_) : r);
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inv(Elem a) const;

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool equal(Elem a, Elem b) const { return a == b; }

  /// Bijection [0, q) <-> field elements, used for enumeration and ordering.
  Elem element(std::uint64_t index) const { return index % p_; }
  std::uint64_t index(Elem a) const { return a; }

  Elem pth_root(Elem a) const { return a; }
  /// Zero counts as a square.
  bool is_square(Elem a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

/// True iff c is a quadratic residue mod p (0 included).
bool fp_is_square(std::uint64_t p, std::uint64_t c);

}  // namespace minram
