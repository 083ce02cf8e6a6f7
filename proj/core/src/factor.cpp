#include "minram/factor.hpp"

namespace minram {

std::uint64_t phi(const FpPoly& m) {
  if (m.is_zero() || m.degree() < 1) throw DomainError("phi needs a nonconstant modulus");
  const std::uint64_t p = m.field().characteristic();
  std::uint64_t r = 1;
  for (const auto& [g, e] : factor(m).factors) {
    const unsigned d = static_cast<unsigned>(g.degree());
    const std::uint64_t unit_part = checked_pow(p, d) - 1;
    r = checked_mul(r, checked_mul(unit_part, checked_pow(p, d * (e - 1))));
  }
  return r;
}

}  // namespace minram
