#include "minram/construct.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "minram/curves.hpp"
#include "minram/errors.hpp"
#include "minram/factor.hpp"
#include "minram/galois_id.hpp"
#include "minram/text.hpp"
#include "json_guard.hpp"

namespace minram {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

/// Monic polynomial of degree d whose lower coefficients are the base-p
/// digits of idx, constant term least significant.
FpPoly monic_from_index(const PrimeField& field, unsigned d, std::uint64_t idx) {
  const std::uint64_t p = field.characteristic();
  std::vector<PrimeField::Elem> v(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    v[i] = idx % p;
    idx /= p;
  }
  v[d] = 1;
  return FpPoly(field, std::move(v));
}

/// Fisher-Yates with the raw engine output, so the order does not depend on
/// the standard library's distribution implementation.
std::vector<std::uint64_t> seeded_permutation(std::uint64_t n, std::uint64_t seed) {
  std::vector<std::uint64_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = n; i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
  return v;
}

/// Smallest accepted index below limit. Work is split into batches so the
/// answer is the first in canonical order regardless of thread count.
template <class Pred>
std::optional<std::uint64_t> first_accepted(std::uint64_t limit, unsigned threads, Pred pred) {
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::uint64_t i = 0; i < limit; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  const std::uint64_t batch = 64ull * threads;
  for (std::uint64_t start = 0; start < limit; start += batch) {
    const std::uint64_t end = std::min(limit, start + batch);
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::uint64_t i = start + t; i < end && i < best.load(); i += threads) {
          if (pred(i)) {
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (best.load() != std::numeric_limits<std::uint64_t>::max()) return best.load();
  }
  return std::nullopt;
}

XPoly biquadratic(const FpPoly& a, const FpPoly& b) {
  const PrimeField& f = a.field();
  return XPoly(f, {b, FpPoly(f), a, FpPoly(f), FpPoly::one(f)});
}

FpPoly konst(const PrimeField& f, long long c) { return FpPoly::constant(f, f.from_int(c)); }

template <class Fn>
void check(Verification& v, std::string name, Fn&& fn) {
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    v.notes.push_back(name + ": " + e.what());
  }
  v.checks.push_back({std::move(name), ok});
}

template <class F>
PollackResult pollack_impl(const F& field, unsigned n, const std::vector<Poly<F>>& f_list) {
  const std::uint64_t q = field.size();
  if (n == 0) throw DomainError("degree n must be positive");
  if (std::gcd(q, 2ull * n) != 1) throw DomainError("need gcd(q, 2n) = 1");
  unsigned B = 0;
  for (const auto& f : f_list) {
    if (f.degree() < 1) throw DomainError("each f_i must be nonconstant");
    B += static_cast<unsigned>(f.degree());
  }
  const std::uint64_t total = checked_pow(q, n);
  if (total > 10000000) throw ResourceError("q^n above 1e7 is outside the exhaustive regime");

  PollackResult out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<typename F::Elem> v;
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < n; ++i) {
      v.push_back(field.element(rest % q));
      rest /= q;
    }
    v.push_back(field.one());
    Poly<F> g(field, std::move(v));
    bool all = true;
    for (const auto& f : f_list) {
      if (!is_irreducible(f.compose(g))) {
        all = false;
        break;
      }
    }
    if (all) ++out.count;
  }
  const auto r = static_cast<unsigned>(f_list.size());
  out.main_term = static_cast<double>(total) / std::pow(static_cast<double>(n), r);
  out.ratio = static_cast<double>(out.count) / out.main_term;
  out.lower = pollack_lower_bound(static_cast<double>(q), n, r, B);
  return out;
}

}  // namespace

std::vector<FpPoly> abelian_moduli(std::uint64_t p, const std::vector<std::uint64_t>& invariants) {
  PrimeField field(p);
  std::vector<FpPoly> out;
  for (std::uint64_t n : invariants) {
    if (n <= 1) throw DomainError("cyclic orders must exceed 1");
    if (n % p == 0) {
      throw UnsupportedError("order " + std::to_string(n) + " is divisible by p = " + std::to_string(p) +
                             ": use the p-group construction (principal units) for that part");
    }
    const std::uint64_t m = checked_mul(p - 1, n);
    unsigned d = 1;
    for (std::uint64_t pw = p % m; pw != 1 % m; pw = mulmod(pw, p, m)) ++d;
    const std::uint64_t count = checked_pow(p, d);
    if (count > 100000000) throw ResourceError("conductor degree " + std::to_string(d) + " too large to scan");
    bool found = false;
    for (std::uint64_t idx = 0; idx < count && !found; ++idx) {
      FpPoly cand = monic_from_index(field, d, idx);
      if (std::find(out.begin(), out.end(), cand) != out.end()) continue;
      if (is_irreducible(cand)) {
        out.push_back(std::move(cand));
        found = true;
      }
    }
    if (!found) throw DomainError("not enough irreducibles of degree " + std::to_string(d));
  }
  return out;
}

std::vector<std::uint64_t> unit_group_structure(std::uint64_t p, unsigned n) {
  PrimeField field(p);
  if (n < 1) throw DomainError("truncation degree must be positive");
  const std::uint64_t size = checked_pow(p, n);
  if (size > 3000000) throw ResourceError("p^n above 3e6 is outside the brute-force regime");

  // In characteristic p, (1 + sum a_i u^i)^p = 1 + sum a_i u^(ip).
  std::vector<std::uint64_t> exact;  // exact[k] = #elements of order p^k
  std::vector<std::uint64_t> a(n + 1), b(n + 1);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned i = 1; i <= n; ++i) {
      a[i] = rest % p;
      rest /= p;
    }
    unsigned k = 0;
    while (std::any_of(a.begin() + 1, a.end(), [](auto c) { return c != 0; })) {
      std::fill(b.begin(), b.end(), 0);
      for (unsigned i = 1; static_cast<std::uint64_t>(i) * p <= n; ++i) b[i * p] = a[i];
      std::swap(a, b);
      ++k;
    }
    if (exact.size() <= k) exact.resize(k + 1, 0);
    ++exact[k];
  }
  // rank[k] = number of cyclic factors of order >= p^k.
  std::vector<unsigned> rank(exact.size() + 1, 0);
  std::uint64_t prev = exact[0];
  for (std::size_t k = 1; k < exact.size(); ++k) {
    const std::uint64_t cur = prev + exact[k];
    std::uint64_t ratio = cur / prev;
    if (ratio * prev != cur) throw InternalError("order profile is not that of an abelian p-group");
    unsigned r = 0;
    while (ratio > 1) {
      if (ratio % p) throw InternalError("order profile is not that of an abelian p-group");
      ratio /= p;
      ++r;
    }
    rank[k] = r;
    prev = cur;
  }
  std::vector<std::uint64_t> out;
  for (std::size_t k = 1; k < exact.size(); ++k) {
    for (unsigned j = rank[k + 1]; j < rank[k]; ++j) out.push_back(checked_pow(p, static_cast<unsigned>(k)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_abelian_quotient(std::vector<std::uint64_t> g, std::vector<std::uint64_t> h) {
  auto primary = [](const std::vector<std::uint64_t>& v) {
    std::map<std::uint64_t, std::vector<unsigned>> m;
    for (auto n : v) {
      for (auto [l, e] : factor_integer(n)) m[l].push_back(e);
    }
    for (auto& [l, es] : m) std::sort(es.rbegin(), es.rend());
    return m;
  };
  auto pg = primary(g), ph = primary(h);
  for (const auto& [l, es] : ph) {
    auto it = pg.find(l);
    if (it == pg.end() || it->second.size() < es.size()) return false;
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (es[i] > it->second[i]) return false;
    }
  }
  return true;
}

// ---- witnesses -------------------------------------------------------------

D8Witness D8Witness::from_ab(const FpPoly& a, const FpPoly& b) {
  const PrimeField& field = a.field();
  const auto A = a.lc(), B = b.lc();
  RamReport ram;
  try {
    ram = ramification_report(biquadratic(a, b));
  } catch (const DomainError&) {
    // degenerate input; verify_d8 reports the failing condition
  }
  return D8Witness{field.characteristic(),
                   A,
                   B,
                   a,
                   b,
                   a * a - b.scaled(field.from_int(4)),
                   field.sub(field.mul(A, A), field.mul(field.from_int(4), B)),
                   std::move(ram)};
}

nlohmann::json D8Witness::to_json() const {
  return {{"p", p},
          {"A", A},
          {"B", B},
          {"a", to_string(a)},
          {"b", to_string(b)},
          {"a^2-4b", to_string(disc_ab)},
          {"A^2-4B", disc_AB},
          {"ram", ram.to_json()}};
}

D8Witness D8Witness::from_json(const nlohmann::json& j) {
  return detail::decode_json("D8Witness", [&] {
    PrimeField field(j.at("p").get<std::uint64_t>());
    D8Witness w = from_ab(parse_poly(j.at("a").get<std::string>(), field), parse_poly(j.at("b").get<std::string>(), field));
    // Keep stored columns so verification can compare them with recomputed ones.
    w.A = j.at("A").get<std::uint64_t>();
    if (j.contains("B")) w.B = j.at("B").get<std::uint64_t>();
    if (j.contains("a^2-4b")) w.disc_ab = parse_poly(j.at("a^2-4b").get<std::string>(), field);
    w.disc_AB = j.at("A^2-4B").get<std::uint64_t>();
    if (j.contains("ram")) w.ram = RamReport::from_json(j.at("ram"), field);
    return w;
  });
}

S3Witness S3Witness::from_uw(std::uint64_t u, const FpPoly& w) {
  const PrimeField& field = w.field();
  const std::uint64_t p = field.characteristic();
  FpPoly pi = w.pow(3).scaled(field.from_int(4)) - konst(field, 27 * static_cast<long long>(u % p));
  FpPoly disc = pi.scaled(field.pow(u % p, 3));
  return S3Witness{p, u % p, w, std::move(pi), std::move(disc)};
}

XPoly S3Witness::cubic() const {
  PrimeField field(p);
  const auto uu = field.mul(u, u);
  return XPoly(field, {FpPoly::constant(field, field.neg(uu)), -w.scaled(u), FpPoly(field), FpPoly::one(field)});
}

nlohmann::json S3Witness::to_json() const {
  return {{"p", p}, {"u", u}, {"w", to_string(w)}, {"pi", to_string(pi)}, {"disc", to_string(disc)}};
}

S3Witness S3Witness::from_json(const nlohmann::json& j) {
  return detail::decode_json("S3Witness", [&] {
    PrimeField field(j.at("p").get<std::uint64_t>());
    S3Witness s = from_uw(j.at("u").get<std::uint64_t>(), parse_poly(j.at("w").get<std::string>(), field));
    if (j.contains("pi")) s.pi = parse_poly(j.at("pi").get<std::string>(), field);
    if (j.contains("disc")) s.disc = parse_poly(j.at("disc").get<std::string>(), field);
    return s;
  });
}

bool Verification::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

std::vector<std::string> Verification::failed() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.ok) out.push_back(c.name);
  }
  return out;
}

Verification verify_d8(const D8Witness& w, const D8VerifyOptions& opt) {
  Verification v;
  PrimeField field(w.p);
  const FpPoly& a = w.a;
  const FpPoly& b = w.b;
  const FpPoly d = a * a - b.scaled(field.from_int(4));
  const XPoly f = biquadratic(a, b);

  check(v, "p odd", [&] { return w.p % 2 == 1; });
  check(v, "deg b = 2 deg a", [&] { return !a.is_zero() && b.degree() == 2 * a.degree(); });
  check(v, "b irreducible", [&] {
    if (is_irreducible(b)) return true;
    if (!opt.allow_prime_power_b || b.degree() < 1) return false;
    auto fac = factor(b);
    if (fac.factors.size() != 1) return false;
    v.notes.push_back("b = " + std::to_string(fac.unit) + "*(" + to_string(fac.factors[0].first) + ")^" +
                      std::to_string(fac.factors[0].second) + " is a prime power; accepted under the relaxed rule");
    return true;
  });
  check(v, "a^2-4b irreducible", [&] { return is_irreducible(d); });
  check(v, "b nonsquare", [&] { return !is_square(b); });
  check(v, "a^2-4b nonsquare", [&] { return !is_square(d); });
  check(v, "b(a^2-4b) nonsquare", [&] { return !is_square(b * d); });
  const auto AB = field.sub(field.mul(a.lc(), a.lc()), field.mul(field.from_int(4), b.lc()));
  check(v, "A^2-4B nonsquare", [&] { return AB != 0 && !field.is_square(AB); });
  check(v, "columns consistent", [&] {
    return w.A == a.lc() && w.B == b.lc() && w.disc_ab == d && w.disc_AB == AB;
  });
  check(v, "Galois group D8", [&] { return classify_biquadratic(a, b).tag == GroupTag::D8; });
  check(v, "infinity unramified", [&] { return infinity_check(f).verdict == InfinityVerdict::Unramified; });
  check(v, "total ramified places = 2", [&] {
    RamReport r = ramification_report(f);
    // Union over the three quadratic subfields, for comparison.
    std::set<std::vector<PrimeField::Elem>> sub;
    for (const auto& D : {b, d, b * d}) {
      if (is_square(D)) continue;
      for (const auto& pl : quadratic_places(D).places()) sub.insert(pl.coeffs());
    }
    if (sub.size() != r.finite_count()) {
      v.notes.push_back("quadratic subfields ramify at " + std::to_string(sub.size()) +
                        " finite place(s); the discriminant-residue test reports " +
                        std::to_string(r.finite_count()));
    }
    return r.total_count() == 2;
  });
  return v;
}

Verification verify_s3(const S3Witness& s) {
  Verification v;
  PrimeField field(s.p);
  const FpPoly pi = s.w.pow(3).scaled(field.from_int(4)) - konst(field, 27 * static_cast<long long>(s.u % s.p));
  const FpPoly disc = pi.scaled(field.pow(s.u % s.p, 3));
  const XPoly f = s.cubic();

  check(v, "u nonzero", [&] { return s.u % s.p != 0; });
  check(v, "w monic", [&] { return s.w.is_monic(); });
  check(v, "w nonconstant of even degree", [&] { return s.w.degree() >= 1 && s.w.degree() % 2 == 0; });
  check(v, "pi = 4w^3-27u", [&] { return s.pi == pi; });
  check(v, "disc = u^3 pi", [&] { return s.disc == disc && discriminant(f).value == disc; });
  check(v, "pi irreducible", [&] { return is_irreducible(pi); });
  check(v, "disc nonsquare", [&] { return !is_square(disc); });
  check(v, "Galois group S3", [&] { return classify_cubic(f).tag == GroupTag::S3; });
  check(v, "one ramified place", [&] { return quadratic_places(disc).total_count() == 1; });
  check(v, "infinity unramified", [&] { return infinity_check(f).verdict == InfinityVerdict::Unramified; });
  if (s.p % 3 != 1) v.notes.push_back("p is not 1 mod 3; outside the searched family");
  return v;
}

D8Witness search_d8(std::uint64_t p, unsigned deg_b, const SearchOptions& opt, SearchStats* stats) {
  if (p == 2) throw UnsupportedError("D8 search needs odd p; p = 2 is covered by the p-group construction");
  PrimeField field(p);
  if (deg_b < 2 || deg_b % 2) throw DomainError("deg b must be even and positive");
  const unsigned deg_a = deg_b / 2;

  std::vector<std::pair<std::uint64_t, std::uint64_t>> a_list;  // (A, c)
  for (std::uint64_t A = 1; A < p; ++A) {
    const auto disc = field.sub(field.mul(A, A), 4 % p);
    if (disc == 0 || field.is_square(disc)) continue;
    for (std::uint64_t c = 0; c < p; ++c) a_list.emplace_back(A, c);
  }
  const std::uint64_t n_b = checked_pow(p, deg_b);
  const std::uint64_t per_a = std::min<std::uint64_t>(n_b, 4096);
  const std::uint64_t limit = std::min<std::uint64_t>(opt.budget, a_list.size() * per_a);
  const auto shuffle = seeded_permutation(p, opt.seed);

  auto candidate = [&](std::uint64_t i) {
    auto [A, c] = a_list[i / per_a];
    const std::uint64_t j = i % per_a;
    FpPoly a = FpPoly::monomial(field, A, deg_a) + FpPoly::constant(field, c);
    FpPoly b = monic_from_index(field, deg_b, (j / p) * p + shuffle[j % p]);
    return std::make_pair(a, b);
  };
  auto accept = [&](std::uint64_t i) {
    auto [a, b] = candidate(i);
    if (!is_irreducible(b) || !is_irreducible(a * a - b.scaled(field.from_int(4)))) return false;
    return verify_d8(D8Witness::from_ab(a, b)).ok();
  };
  auto hit = first_accepted(limit, opt.threads, accept);
  if (stats) stats->examined = hit ? *hit + 1 : limit;
  if (!hit) throw SearchExhausted("no D8 witness for p = " + std::to_string(p) + " within budget", limit);
  auto [a, b] = candidate(*hit);
  return D8Witness::from_ab(a, b);
}

S3Witness search_s3(std::uint64_t p, unsigned deg_w, const SearchOptions& opt, SearchStats* stats) {
  PrimeField field(p);
  if (p % 3 != 1 || p < 7) throw UnsupportedError("S3 search family needs p = 1 mod 3");
  if (deg_w < 2 || deg_w % 2) throw DomainError("deg w must be even and positive");
  const std::uint64_t n_w = checked_pow(p, deg_w);
  const std::uint64_t limit = std::min<std::uint64_t>(opt.budget, checked_mul(p - 1, n_w));
  const auto shuffle = seeded_permutation(p - 1, opt.seed);

  auto candidate = [&](std::uint64_t i) {
    return S3Witness::from_uw(shuffle[i % (p - 1)] + 1, monic_from_index(field, deg_w, i / (p - 1)));
  };
  auto accept = [&](std::uint64_t i) {
    S3Witness s = candidate(i);
    return is_irreducible(s.pi) && verify_s3(s).ok();
  };
  auto hit = first_accepted(limit, opt.threads, accept);
  if (stats) stats->examined = hit ? *hit + 1 : limit;
  if (!hit) throw SearchExhausted("no S3 witness for p = " + std::to_string(p) + " within budget", limit);
  return candidate(*hit);
}

SpecialS3 special_s3(std::uint64_t p) {
  PrimeField field(p);
  if (p == 2) {
    return {2, parse_xpoly("x^2+x+(t+1)^3", field),
            "y^2+y=(t+1)^3: genus 1, class number 3; the unramified cubic cover of this quadratic field "
            "is an S3 extension ramified only at infinity"};
  }
  if (p == 3) {
    return {3, parse_xpoly("x^3-(t^2+1)*x+(t-1)", field),
            "cubic with discriminant (t^2+1)^3, ramified only at t^2+1"};
  }
  throw DomainError("special S3 constructions exist for p = 2 and p = 3 only");
}

Verification verify_special_s3(const SpecialS3& s) {
  Verification v;
  PrimeField field(s.p);
  if (s.p == 2) {
    const FpPoly rhs = -s.f.coeff(0);
    check(v, "shape y^2+y=R", [&] {
      return s.f.degree() == 2 && s.f.is_monic() && s.f.coeff(1).is_one();
    });
    check(v, "class number 3", [&] { return class_number(QuadraticModel::artin_schreier(rhs)).h == 3; });
    check(v, "infinity is the only ramified place", [&] {
      // y^2+y=R with R a polynomial is unramified at every finite place.
      return rhs.degree() % 2 == 1;
    });
    return v;
  }
  const FpPoly t2p1 = parse_poly("t^2+1", field);
  check(v, "disc = (t^2+1)^3", [&] { return discriminant(s.f).value == t2p1.pow(3); });
  check(v, "Galois group S3", [&] { return classify_cubic(s.f).tag == GroupTag::S3; });
  check(v, "ramified set {t^2+1}", [&] {
    auto places = finite_ramified_places(s.f);
    return places.size() == 1 && places[0] == t2p1;
  });
  check(v, "infinity unramified", [&] { return infinity_check(s.f).verdict == InfinityVerdict::Unramified; });
  return v;
}

PollackLowerBound pollack_lower_bound(double q, unsigned n, unsigned r, unsigned B) {
  PollackLowerBound lb;
  const double nn = n;
  lb.threshold = 4 * nn * nn * (1 + B * (B - 1.0) / 2);
  lb.first = std::pow(q, nn - 1) - lb.threshold * std::pow(q, nn - 2);
  double fact = 1;
  for (unsigned i = 2; i <= n; ++i) fact *= i;
  const double nr = std::pow(nn, r);
  lb.second = q / nr - 2 / nr * (std::sqrt(q) + 1 + std::pow(fact, B)) - (nn - 1) * B;
  lb.value = lb.first * lb.second;
  lb.certifies_positive = lb.first > 0 && lb.second > 0;
  return lb;
}

PollackResult pollack_count(const FieldSpec& q, unsigned n, const std::vector<FpPoly>& f_list) {
  if (!q.modulus) return pollack_impl(PrimeField(q.p), n, f_list);
  ExtensionField field(q);
  std::vector<Poly<ExtensionField>> lifted;
  for (const auto& f : f_list) {
    std::vector<ExtensionField::Elem> v;
    for (auto c : f.coeffs()) v.push_back(field.from_int(static_cast<long long>(c)));
    lifted.emplace_back(field, std::move(v));
  }
  return pollack_impl(field, n, lifted);
}

PollackResult pollack_count(const ExtensionField& field, unsigned n, const std::vector<Poly<ExtensionField>>& f_list) {
  return pollack_impl(field, n, f_list);
}

}  // namespace minram
