#include "minram/ramify.hpp"

#include <algorithm>
#include <string>

#include "minram/errors.hpp"
#include "minram/factor.hpp"
#include "minram/text.hpp"
#include "json_guard.hpp"

namespace minram {

std::string_view to_string(InfinityVerdict v) {
  switch (v) {
    case InfinityVerdict::Unramified: return "Unramified";
    case InfinityVerdict::Inconclusive: return "Inconclusive";
    case InfinityVerdict::RamifiedQuadratic: return "RamifiedQuadratic";
  }
  return "?";
}

std::string_view to_string(PlaceMethod m) {
  switch (m) {
    case PlaceMethod::DiscriminantResidue: return "discriminant-residue";
    case PlaceMethod::QuadraticRule: return "quadratic-rule";
    case PlaceMethod::InfinityProcedure: return "infinity-procedure";
  }
  return "?";
}

InfinityVerdict parse_infinity_verdict(std::string_view s) {
  for (auto v : {InfinityVerdict::Unramified, InfinityVerdict::Inconclusive, InfinityVerdict::RamifiedQuadratic}) {
    if (to_string(v) == s) return v;
  }
  throw ParseError("unknown infinity verdict: " + std::string(s));
}

PlaceMethod parse_place_method(std::string_view s) {
  for (auto m : {PlaceMethod::DiscriminantResidue, PlaceMethod::QuadraticRule, PlaceMethod::InfinityProcedure}) {
    if (to_string(m) == s) return m;
  }
  throw ParseError("unknown place method: " + std::string(s));
}

std::size_t RamReport::total_count() const {
  return finite.size() + (infinity == InfinityVerdict::RamifiedQuadratic ? 1 : 0);
}

std::vector<FpPoly> RamReport::places() const {
  std::vector<FpPoly> out;
  for (const auto& r : finite) out.push_back(r.place);
  return out;
}

nlohmann::json RamReport::to_json() const {
  nlohmann::json j;
  j["finite"] = nlohmann::json::array();
  j["methods"] = nlohmann::json::array();
  for (const auto& r : finite) {
    j["finite"].push_back(minram::to_string(r.place));
    j["methods"].push_back(std::string(minram::to_string(r.method)));
  }
  j["infinity"] = std::string(minram::to_string(infinity));
  j["infinity_method"] = std::string(minram::to_string(infinity_method));
  j["counts"] = {{"finite", finite_count()}, {"total", total_count()}};
  return j;
}

RamReport RamReport::from_json(const nlohmann::json& j, const PrimeField& field) {
  return detail::decode_json("RamReport", [&] {
    RamReport r;
    const auto& places = j.at("finite");
    const bool has_methods = j.contains("methods");
    for (std::size_t i = 0; i < places.size(); ++i) {
      PlaceMethod m = has_methods ? parse_place_method(j.at("methods").at(i).get<std::string>())
                                  : PlaceMethod::DiscriminantResidue;
      r.finite.push_back({parse_poly(places.at(i).get<std::string>(), field), m});
    }
    r.infinity = parse_infinity_verdict(j.at("infinity").get<std::string>());
    if (j.contains("infinity_method")) {
      r.infinity_method = parse_place_method(j.at("infinity_method").get<std::string>());
    }
    return r;
  });
}

std::vector<FpPoly> finite_ramified_places(const XPoly& f) {
  Discriminant d = discriminant(f);
  if (d.value.is_zero()) throw DomainError("inseparable input: discriminant is zero");
  std::vector<FpPoly> out;
  for (const auto& [pi, e] : factor(d.value).factors) {
    auto reduced = reduce_mod_place(f, pi);
    if (!gcd(reduced, reduced.derivative()).is_one()) out.push_back(pi);
  }
  return out;
}

InfinityCheck infinity_check(const XPoly& f) {
  if (!f.is_monic()) throw DomainError("infinity check needs a polynomial monic in x");
  const int n = f.degree();
  const PrimeField& field = f.field();
  // Smallest b with deg c_i <= b (n - i) for every nonzero c_i, i < n.
  int b = 0;
  for (int i = 0; i < n; ++i) {
    const int d = f.coeffs()[i].degree();
    if (d <= 0) continue;
    const int span = n - i;
    b = std::max(b, (d + span - 1) / span);
  }
  std::vector<PrimeField::Elem> g(static_cast<std::size_t>(n) + 1, 0);
  g[n] = 1;
  for (int i = 0; i < n; ++i) {
    const FpPoly& c = f.coeffs()[i];
    if (!c.is_zero() && c.degree() == b * (n - i)) g[i] = c.lc();
  }
  FpPoly gp(field, std::move(g));
  const bool separable = gcd(gp, gp.derivative()).is_one();
  return {separable ? InfinityVerdict::Unramified : InfinityVerdict::Inconclusive, b, gp};
}

RamReport quadratic_places(const FpPoly& d) {
  if (d.field().characteristic() == 2) throw UnsupportedError("quadratic rule needs odd characteristic");
  if (d.is_zero() || is_square(d)) throw DomainError("not a quadratic extension: D is a square");
  RamReport r;
  auto fac = factor(d);
  int odd_degree = 0;
  for (const auto& [pi, e] : fac.factors) {
    if (e % 2 == 0) continue;
    r.finite.push_back({pi, PlaceMethod::QuadraticRule});
    odd_degree += pi.degree();
  }
  r.infinity = odd_degree % 2 ? InfinityVerdict::RamifiedQuadratic : InfinityVerdict::Unramified;
  r.infinity_method = PlaceMethod::QuadraticRule;
  return r;
}

RamReport ramification_report(const XPoly& f) {
  RamReport r;
  for (auto& pi : finite_ramified_places(f)) r.finite.push_back({std::move(pi), PlaceMethod::DiscriminantResidue});
  r.infinity = infinity_check(f).verdict;
  r.infinity_method = PlaceMethod::InfinityProcedure;
  return r;
}

}  // namespace minram
