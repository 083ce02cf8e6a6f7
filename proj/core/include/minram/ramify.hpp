#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "minram/bivar.hpp"
#include "minram/poly.hpp"

namespace minram {

enum class InfinityVerdict { Unramified, Inconclusive, RamifiedQuadratic };
enum class PlaceMethod { DiscriminantResidue, QuadraticRule, InfinityProcedure };

std::string_view to_string(InfinityVerdict v);
std::string_view to_string(PlaceMethod m);
InfinityVerdict parse_infinity_verdict(std::string_view s);
PlaceMethod parse_place_method(std::string_view s);

struct RamifiedPlace {
  FpPoly place;  ///< monic irreducible
  PlaceMethod method;
};

/// Ramified finite places of F_p(t) plus a tri-state verdict at infinity.
struct RamReport {
  std::vector<RamifiedPlace> finite;
  InfinityVerdict infinity = InfinityVerdict::Inconclusive;
  PlaceMethod infinity_method = PlaceMethod::InfinityProcedure;

  std::size_t finite_count() const { return finite.size(); }
  /// Finite places plus infinity when it is known to ramify. Inconclusive
  /// infinity is not counted.
  std::size_t total_count() const;
  std::vector<FpPoly> places() const;

  /// {"finite":[...],"infinity":"...","counts":{"finite":n,"total":m},
  ///  "methods":[...],"infinity_method":"..."}
  nlohmann::json to_json() const;
  static RamReport from_json(const nlohmann::json& j, const PrimeField& field);
};

/// Monic irreducible divisors pi of disc(f) whose residue reduction has a
/// repeated root, in canonical order. Throws DomainError when disc(f) = 0.
std::vector<FpPoly> finite_ramified_places(const XPoly& f);

struct InfinityCheck {
  InfinityVerdict verdict;
  int shift;  ///< the substitution exponent b in x -> x t^b
  FpPoly g;   ///< the reduced polynomial over F_p
};

/// Substitute x t^b, divide by t^(b n), reduce mod 1/t and test the result for
/// repeated roots. A squarefree reduction proves infinity is unramified;
/// otherwise the test says nothing.
InfinityCheck infinity_check(const XPoly& f);

/// Exact ramification of F_p(t)(sqrt D) for odd p.
RamReport quadratic_places(const FpPoly& d);

/// finite_ramified_places + infinity_check as a report.
RamReport ramification_report(const XPoly& f);

}  // namespace minram
