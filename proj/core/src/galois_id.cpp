#include "minram/galois_id.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "minram/errors.hpp"
#include "minram/factor.hpp"

namespace minram {
namespace {

// Quotient of f by a monic g (division in F_p[t][x]); remainder must vanish.
XPoly divide_exact(const XPoly& f, const XPoly& g) {
  const PrimeField& field = f.field();
  const int n = f.degree(), m = g.degree();
  std::vector<FpPoly> r = f.coeffs();
  std::vector<FpPoly> q(static_cast<std::size_t>(n - m + 1), FpPoly(field));
  for (int k = n - m; k >= 0; --k) {
    FpPoly c = r[k + m];
    for (int j = 0; j <= m; ++j) r[k + j] -= c * g.coeffs()[j];
    q[k] = std::move(c);
  }
  for (int i = 0; i < m; ++i) {
    if (!r[i].is_zero()) throw InternalError("exact division in F_p[t][x] left a remainder");
  }
  return XPoly(field, std::move(q));
}

int newton_slope(const XPoly& f) {
  const int n = f.degree();
  int b = 0;
  for (int i = 0; i < n; ++i) {
    const int d = f.coeffs()[i].degree();
    if (d > 0) b = std::max(b, (d + (n - i) - 1) / (n - i));
  }
  return b;
}

XPoly linear(const FpPoly& root) {
  return XPoly(root.field(), {-root, FpPoly::one(root.field())});
}

XPoly quadratic(const FpPoly& lin, const FpPoly& cst) {
  return XPoly(lin.field(), {cst, lin, FpPoly::one(lin.field())});
}

// Proper factor degrees compatible with every specialization t -> c.
std::set<int> compatible_degrees(const XPoly& f) {
  const int n = f.degree();
  std::set<int> allowed;
  for (int k = 1; k < n; ++k) allowed.insert(k);
  const std::uint64_t p = f.field().characteristic();
  for (std::uint64_t c = 0; c < std::min<std::uint64_t>(p, 8) && !allowed.empty(); ++c) {
    FpPoly fc = f.specialize(c);
    std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
    reach[0] = true;
    for (const auto& [g, e] : factor(fc).factors) {
      for (unsigned rep = 0; rep < e; ++rep) {
        for (int s = n; s >= g.degree(); --s) {
          if (reach[s - g.degree()]) reach[s] = true;
        }
      }
    }
    for (auto it = allowed.begin(); it != allowed.end();) {
      it = reach[*it] ? std::next(it) : allowed.erase(it);
    }
  }
  return allowed;
}

}  // namespace

std::string_view to_string(GroupTag g) {
  switch (g) {
    case GroupTag::C2: return "C2";
    case GroupTag::C3: return "C3";
    case GroupTag::S3: return "S3";
    case GroupTag::V4: return "V4";
    case GroupTag::C4: return "C4";
    case GroupTag::D8: return "D8";
    case GroupTag::Reducible: return "Reducible";
    case GroupTag::Unknown: return "Unknown";
  }
  return "?";
}

GroupTag parse_group_tag(std::string_view s) {
  for (auto g : {GroupTag::C2, GroupTag::C3, GroupTag::S3, GroupTag::V4, GroupTag::C4, GroupTag::D8,
                 GroupTag::Reducible, GroupTag::Unknown}) {
    if (to_string(g) == s) return g;
  }
  throw ParseError("unknown group tag: " + std::string(s));
}

std::optional<FpPoly> root_in_poly_ring(const XPoly& f) {
  if (!f.is_monic()) throw DomainError("root search needs a monic polynomial");
  const PrimeField& field = f.field();
  if (f.degree() < 1) return std::nullopt;
  const FpPoly& c0 = f.coeffs()[0];
  if (c0.is_zero()) return FpPoly(field);
  const int bound = newton_slope(f);

  // Cheap filter: f(c, r(c)) must vanish at a few constants c.
  std::vector<std::pair<std::uint64_t, FpPoly>> probes;
  for (std::uint64_t c = 0; c < std::min<std::uint64_t>(field.characteristic(), 4); ++c) {
    probes.emplace_back(c, f.specialize(c));
  }
  for (const auto& m : monic_divisors(c0, bound)) {
    for (std::uint64_t u = 1; u < field.characteristic(); ++u) {
      FpPoly r = m.scaled(u);
      bool possible = true;
      for (const auto& [c, fc] : probes) {
        if (fc.eval(r.eval(c)) != 0) {
          possible = false;
          break;
        }
      }
      if (possible && f.evaluate(r).is_zero()) return r;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<XPoly, XPoly>> find_factor(const XPoly& f) {
  if (!f.is_monic()) throw DomainError("factor search needs a polynomial monic in x");
  const int n = f.degree();
  if (n > 4) throw UnsupportedError("factor search supports x-degree <= 4");
  if (n <= 1) return std::nullopt;
  if (auto r = root_in_poly_ring(f)) {
    XPoly lin = linear(*r);
    return std::make_pair(lin, divide_exact(f, lin));
  }
  if (n < 4) return std::nullopt;

  // (x^2 + al x + be)(x^2 + ga x + de) with be*de = c0.
  const PrimeField& field = f.field();
  const FpPoly &c0 = f.coeffs()[0], &c1 = f.coeffs()[1], &c2 = f.coeffs()[2], &c3 = f.coeffs()[3];
  const int bound = 2 * newton_slope(f);
  for (const auto& m : monic_divisors(c0, bound)) {
    for (std::uint64_t u = 1; u < field.characteristic(); ++u) {
      FpPoly be = m.scaled(u);
      auto [de, rem] = c0.divrem(be);
      if (!rem.is_zero() || de.degree() > bound) continue;
      if (de != be) {
        // al (de - be) = c1 - be c3
        auto [al, r2] = (c1 - be * c3).divrem(de - be);
        if (!r2.is_zero()) continue;
        FpPoly ga = c3 - al;
        if (be + de + al * ga == c2) return std::make_pair(quadratic(al, be), quadratic(ga, de));
      } else {
        if (c1 != be * c3) continue;
        // al + ga = c3, al ga = c2 - 2 be
        XPoly q(field, {c2 - be - be, -c3, FpPoly::one(field)});
        if (auto al = root_in_poly_ring(q)) {
          FpPoly ga = c3 - *al;
          return std::make_pair(quadratic(*al, be), quadratic(ga, de));
        }
      }
    }
  }
  return std::nullopt;
}

bool xpoly_is_irreducible(const XPoly& f) {
  if (!f.is_monic()) throw DomainError("irreducibility test needs a polynomial monic in x");
  const int n = f.degree();
  if (n > 4) throw UnsupportedError("irreducibility over F_p(t) supported for x-degree <= 4");
  if (n <= 0) return false;
  if (n == 1) return true;
  if (compatible_degrees(f).empty()) return true;
  return !find_factor(f).has_value();
}

Classification classify_cubic(const XPoly& f) {
  if (f.degree() != 3) throw DomainError("classify_cubic needs x-degree 3");
  if (!f.is_monic()) throw DomainError("classify_cubic needs a monic cubic");
  if (f.field().characteristic() == 2) throw UnsupportedError("square-discriminant test is invalid in characteristic 2");
  if (auto fac = find_factor(f)) return {GroupTag::Reducible, {fac->first, fac->second}};
  Discriminant d = discriminant(f);
  if (d.value.is_zero()) return {GroupTag::Unknown, {}};
  return {is_square(d.value) ? GroupTag::C3 : GroupTag::S3, {}};
}

Classification classify_biquadratic(const FpPoly& a, const FpPoly& b) {
  const PrimeField& field = a.field();
  if (field.characteristic() == 2) throw UnsupportedError("biquadratic family is handled by the p-group theory when p = 2");
  XPoly f(field, {b, FpPoly(field), a, FpPoly(field), FpPoly::one(field)});
  if (auto fac = find_factor(f)) return {GroupTag::Reducible, {fac->first, fac->second}};
  const FpPoly d = a * a - b.scaled(4 % field.characteristic());
  if (is_square(b)) return {GroupTag::V4, {}};
  if (is_square(b * d)) return {GroupTag::C4, {}};
  if (!is_square(d)) return {GroupTag::D8, {}};
  return {GroupTag::Unknown, {}};
}

Classification classify(const XPoly& f) {
  if (!f.is_monic()) throw DomainError("classification needs a polynomial monic in x");
  switch (f.degree()) {
    case 2: {
      if (auto fac = find_factor(f)) return {GroupTag::Reducible, {fac->first, fac->second}};
      return {GroupTag::C2, {}};
    }
    case 3:
      return classify_cubic(f);
    case 4:
      if (f.coeffs()[3].is_zero() && f.coeffs()[1].is_zero()) return classify_biquadratic(f.coeffs()[2], f.coeffs()[0]);
      return {GroupTag::Unknown, {}};
    default:
      return {GroupTag::Unknown, {}};
  }
}

}  // namespace minram
