#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "minram/bivar.hpp"

namespace minram {

enum class GroupTag { C2, C3, S3, V4, C4, D8, Reducible, Unknown };

std::string_view to_string(GroupTag g);
GroupTag parse_group_tag(std::string_view s);

struct Classification {
  GroupTag tag = GroupTag::Unknown;
  /// Monic factors whose product is the input; non-empty exactly when Reducible.
  std::vector<XPoly> witness;
};

/// A nontrivial monic factorization g*h of a monic f with deg_x f <= 4, or
/// nullopt when f is irreducible over F_p(t).
///
/// By Gauss's lemma factors may be taken monic in F_p[t][x]. Roots of f (and
/// hence coefficients of factors) have t-degree bounded by the slope b of the
/// Newton polygon at infinity, and every root divides the constant term, so
/// the search runs over divisors of f(0) only.
std::optional<std::pair<XPoly, XPoly>> find_factor(const XPoly& f);

/// Irreducibility over F_p(t) for monic f of x-degree <= 4. Specializations
/// t -> c serve as a fast path; the divisor search decides the rest.
bool xpoly_is_irreducible(const XPoly& f);

/// A root of monic f in F_p[t], if any.
std::optional<FpPoly> root_in_poly_ring(const XPoly& f);

/// C3 / S3 / Reducible for a monic cubic via the square-discriminant test.
Classification classify_cubic(const XPoly& f);
/// V4 / C4 / D8 / Reducible for x^4 + a x^2 + b, p odd.
Classification classify_biquadratic(const FpPoly& a, const FpPoly& b);
/// Dispatch by shape: quadratics, cubics, and quartics without odd terms.
Classification classify(const XPoly& f);

}  // namespace minram
