#include "minram/curves.hpp"

#include <cmath>
#include <string>

#include "minram/errors.hpp"
#include "minram/extension_field.hpp"
#include "minram/factor.hpp"
#include "json_guard.hpp"

namespace minram {
namespace {

constexpr std::uint64_t kMaxFieldSize = 10000000;

template <class F>
typename F::Elem eval_lifted(const F& field, const FpPoly& f, const typename F::Elem& x) {
  auto r = field.zero();
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    r = field.add(field.mul(r, x), field.from_int(static_cast<long long>(*it)));
  }
  return r;
}

template <class F>
std::uint64_t hyperelliptic_count(const F& field, const FpPoly& d) {
  const std::uint64_t q = field.size();
  std::vector<char> square(q, 0);
  for (std::uint64_t i = 0; i < q; ++i) {
    auto e = field.element(i);
    square[field.index(field.mul(e, e))] = 1;
  }
  std::uint64_t n = 0;
  for (std::uint64_t i = 0; i < q; ++i) {
    auto v = eval_lifted(field, d, field.element(i));
    if (field.is_zero(v)) {
      n += 1;
    } else if (square[field.index(v)]) {
      n += 2;
    }
  }
  if (d.degree() % 2) return n + 1;
  auto lc = field.from_int(static_cast<long long>(d.lc()));
  return n + (square[field.index(lc)] ? 2 : 0);
}

template <class F>
std::uint64_t artin_schreier_count(const F& field, const FpPoly& r) {
  const std::uint64_t q = field.size();
  const unsigned k = field.degree();
  std::uint64_t n = 1;  // the single point over infinity
  for (std::uint64_t i = 0; i < q; ++i) {
    auto z = eval_lifted(field, r, field.element(i));
    auto tr = z;
    auto power = z;
    for (unsigned j = 1; j < k; ++j) {
      power = field.mul(power, power);
      tr = field.add(tr, power);
    }
    if (field.is_zero(tr)) n += 2;
  }
  return n;
}

long long ipow(long long b, unsigned e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

std::string_view to_string(ModelKind k) {
  return k == ModelKind::Hyperelliptic ? "hyperelliptic" : "artin-schreier";
}

QuadraticModel QuadraticModel::hyperelliptic(const FpPoly& d) {
  if (d.field().characteristic() == 2) throw UnsupportedError("hyperelliptic model needs odd p; use artin_schreier");
  if (d.is_zero()) throw DomainError("D must be nonzero");
  auto sf = squarefree_part(d);
  FpPoly norm = sf.part.scaled(sf.unit);
  if (norm.degree() < 1) throw DomainError("D is a constant times a square: no geometric quadratic extension");
  return QuadraticModel(ModelKind::Hyperelliptic, norm, static_cast<unsigned>((norm.degree() - 1) / 2));
}

QuadraticModel QuadraticModel::artin_schreier(const FpPoly& rhs) {
  if (rhs.field().characteristic() != 2) throw UnsupportedError("Artin-Schreier model is implemented for p = 2 only");
  if (rhs.degree() < 1 || rhs.degree() % 2 == 0) {
    throw UnsupportedError("Artin-Schreier right-hand side must be a polynomial of odd degree");
  }
  return QuadraticModel(ModelKind::ArtinSchreier, rhs, static_cast<unsigned>((rhs.degree() - 1) / 2));
}

std::uint64_t count_points(const QuadraticModel& model, unsigned k) {
  if (k == 0) throw DomainError("extension degree must be positive");
  const std::uint64_t p = model.p();
  const std::uint64_t q = checked_pow(p, k);
  if (q > kMaxFieldSize) throw ResourceError("F_" + std::to_string(p) + "^" + std::to_string(k) + " too large to enumerate");
  std::uint64_t n;
  if (k == 1) {
    PrimeField field(p);
    n = model.kind() == ModelKind::Hyperelliptic ? hyperelliptic_count(field, model.poly())
                                                 : artin_schreier_count(field, model.poly());
  } else {
    auto field = ExtensionField::of_degree(p, k);
    n = model.kind() == ModelKind::Hyperelliptic ? hyperelliptic_count(field, model.poly())
                                                 : artin_schreier_count(field, model.poly());
  }
  const double dev = std::fabs(static_cast<double>(n) - static_cast<double>(q + 1));
  if (dev > 2.0 * model.genus() * std::sqrt(static_cast<double>(q)) + 1e-9) {
    throw InternalError("point count " + std::to_string(n) + " violates the Weil bound");
  }
  return n;
}

nlohmann::json ClassNumber::to_json() const {
  return {{"h", h}, {"L_coeffs", L}, {"genus", genus}, {"N", N}};
}

ClassNumber ClassNumber::from_json(const nlohmann::json& j) {
  return detail::decode_json("ClassNumber", [&] {
    ClassNumber c;
    c.h = j.at("h").get<std::uint64_t>();
    c.L = j.at("L_coeffs").get<std::vector<long long>>();
    c.genus = j.at("genus").get<unsigned>();
    c.N = j.at("N").get<std::vector<std::uint64_t>>();
    return c;
  });
}

ClassNumber class_number(const QuadraticModel& model) {
  const unsigned g = model.genus();
  const long long p = static_cast<long long>(model.p());
  if (g > 0 && checked_pow(model.p(), g) > kMaxFieldSize) throw ResourceError("genus too large for point counting");
  ClassNumber out;
  out.genus = g;
  for (unsigned k = 1; k <= std::max(g, 1u); ++k) out.N.push_back(count_points(model, k));

  // log L(T) = sum (N_k - 1 - p^k) T^k / k; Newton: k a_k = -sum s_j a_{k-j}.
  std::vector<long long> a(2 * g + 1, 0);
  a[0] = 1;
  for (unsigned k = 1; k <= g; ++k) {
    long long acc = 0;
    for (unsigned j = 1; j <= k; ++j) {
      const long long s = 1 + ipow(p, j) - static_cast<long long>(out.N[j - 1]);
      acc -= s * a[k - j];
    }
    if (acc % static_cast<long long>(k) != 0) throw InternalError("point counts are not consistent with a zeta function");
    a[k] = acc / static_cast<long long>(k);
  }
  for (unsigned i = 0; i < g; ++i) a[2 * g - i] = ipow(p, g - i) * a[i];

  // |a_i| <= C(2g, i) p^(i/2)
  double binom = 1;
  for (unsigned i = 0; i <= 2 * g; ++i) {
    if (std::fabs(static_cast<double>(a[i])) > binom * std::pow(static_cast<double>(p), i / 2.0) + 1e-6) {
      throw InternalError("L-polynomial coefficient exceeds the Weil bound");
    }
    binom = binom * (2 * g - i) / (i + 1);
  }
  long long h = 0;
  for (auto c : a) h += c;
  if (h < 1) throw InternalError("L(1) is not positive");
  out.L = std::move(a);
  out.h = static_cast<std::uint64_t>(h);
  return out;
}

bool check_div3(const QuadraticModel& model) { return class_number(model).h % 3 == 0; }

}  // namespace minram
