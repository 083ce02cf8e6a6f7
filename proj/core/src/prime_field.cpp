#include "minram/prime_field.hpp"

#include <limits>
#include <string>

#include "minram/errors.hpp"

namespace minram {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod64(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < s; ++i) {
    x = mulmod64(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::uint64_t kTrialLimit = 1u << 16;
  for (std::uint64_t d = 2; d < kTrialLimit && d * d <= n; ++d) {
    if (n % d == 0) return n == d;
  }
  if (n < kTrialLimit * kTrialLimit) return true;
  // Exact for all n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, a)) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [q, e] : factor_integer(n)) out.push_back(q);
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  u128 r = static_cast<u128>(a) * b;
  if (r > std::numeric_limits<std::uint64_t>::max()) {
    throw ResourceError("integer overflow in exact computation");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 31)) {
    throw DomainError("characteristic " + std::to_string(p) + " exceeds 2^31");
  }
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const { return powmod64(a, e, p_); }

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(p_));
  return powmod64(a, p_ - 2, p_);
}

bool PrimeField::is_square(Elem a) const {
  if (p_ == 2 || a == 0) return true;
  return pow(a, (p_ - 1) / 2) == 1;
}

bool fp_is_square(std::uint64_t p, std::uint64_t c) { return PrimeField(p).is_square(c % p); }

}  // namespace minram
