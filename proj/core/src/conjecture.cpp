#include "minram/conjecture.hpp"

#include <algorithm>
#include <charconv>

#include "minram/errors.hpp"
#include "minram/prime_field.hpp"
#include "json_guard.hpp"

namespace minram {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::uint64_t parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("expected a positive integer, got '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::uint64_t> parse_list(std::string_view s) {
  std::vector<std::uint64_t> out;
  while (!s.empty()) {
    auto comma = s.find(',');
    out.push_back(parse_uint(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

bool is_power_of(std::uint64_t n, std::uint64_t l) {
  if (n < l) return false;
  while (n % l == 0) n /= l;
  return n == 1;
}

void require_invariant_form(const std::vector<std::uint64_t>& v, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 2) throw DomainError(std::string(what) + ": entries must exceed 1");
    if (i > 0 && v[i] % v[i - 1]) throw DomainError(std::string(what) + ": not in invariant-factor form");
  }
}

std::vector<std::uint64_t> dihedral_ab(std::uint64_t a) {
  return a % 2 ? std::vector<std::uint64_t>{2} : std::vector<std::uint64_t>{2, 2};
}

void validate(const GroupDescriptor& g) {
  std::visit(overloaded{
                 [](const Abelian& a) {
                   for (auto n : a.orders) {
                     if (n < 2) throw DomainError("abelian: orders must exceed 1");
                   }
                 },
                 [](const Dihedral& d) {
                   if (d.order < 4 || d.order % 2) throw DomainError("dihedral: order must be 2a with a >= 2");
                 },
                 [](const SymmetricS3&) {},
                 [](const IteratedWreathCyclic& w) {
                   if (!is_prime(w.l)) throw DomainError("wreath: l must be prime");
                   for (auto n : w.orders) {
                     if (!is_power_of(n, w.l)) throw DomainError("wreath: orders must be powers of l");
                   }
                 },
                 [](const Explicit& e) {
                   if (e.order < 1) throw DomainError("explicit: order must be positive");
                   require_invariant_form(e.ab, "explicit ab");
                   for (const auto& [p, v] : e.p_quotient_ab) {
                     if (!is_prime(p)) throw DomainError("explicit: p-quotient key must be prime");
                     require_invariant_form(v, "explicit p-quotient");
                   }
                 },
             },
             g);
}

}  // namespace

GroupDescriptor parse_group(std::string_view text) {
  auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  GroupDescriptor g;
  if (kind == "abelian") {
    g = Abelian{parse_list(rest)};
  } else if (kind == "dihedral") {
    g = Dihedral{parse_uint(rest)};
  } else if (kind == "s3") {
    if (!rest.empty()) throw ParseError("s3 takes no arguments");
    g = SymmetricS3{};
  } else if (kind == "wreath") {
    // l=3:3,9
    if (rest.substr(0, 2) != "l=") throw ParseError("wreath descriptor must start with l=");
    auto sep = rest.find(':');
    if (sep == std::string_view::npos) throw ParseError("wreath descriptor needs orders after l=<prime>:");
    g = IteratedWreathCyclic{parse_uint(rest.substr(2, sep - 2)), parse_list(rest.substr(sep + 1))};
  } else if (kind == "explicit") {
    Explicit e;
    bool have_order = false;
    std::string_view s = rest;
    while (!s.empty()) {
      auto semi = s.find(';');
      std::string_view item = s.substr(0, semi);
      auto eq = item.find('=');
      if (eq == std::string_view::npos) throw ParseError("explicit: expected key=value, got '" + std::string(item) + "'");
      std::string_view key = item.substr(0, eq), val = item.substr(eq + 1);
      if (key == "ab") {
        e.ab = parse_list(val);
      } else if (key == "order") {
        e.order = parse_uint(val);
        have_order = true;
      } else if (key.size() > 1 && key[0] == 'p') {
        auto v = parse_list(val);
        v.erase(std::remove(v.begin(), v.end(), 1), v.end());
        e.p_quotient_ab[parse_uint(key.substr(1))] = v;
      } else {
        throw ParseError("explicit: unknown key '" + std::string(key) + "'");
      }
      if (semi == std::string_view::npos) break;
      s.remove_prefix(semi + 1);
    }
    if (!have_order) throw ParseError("explicit descriptor needs order=");
    g = std::move(e);
  } else {
    throw ParseError("unknown group kind '" + std::string(kind) + "'");
  }
  validate(g);
  return g;
}

std::string to_string(const GroupDescriptor& g) {
  return std::visit(overloaded{
                        [](const Abelian& a) { return "abelian:" + join(a.orders); },
                        [](const Dihedral& d) { return "dihedral:" + std::to_string(d.order); },
                        [](const SymmetricS3&) { return std::string("s3"); },
                        [](const IteratedWreathCyclic& w) {
                          return "wreath:l=" + std::to_string(w.l) + ":" + join(w.orders);
                        },
                        [](const Explicit& e) {
                          std::string s = "explicit:ab=" + join(e.ab);
                          for (const auto& [p, v] : e.p_quotient_ab) s += ";p" + std::to_string(p) + "=" + join(v);
                          return s + ";order=" + std::to_string(e.order);
                        },
                    },
                    g);
}

std::vector<std::uint64_t> invariant_factors(const std::vector<std::uint64_t>& orders) {
  std::map<std::uint64_t, std::vector<unsigned>> primary;
  for (auto n : orders) {
    if (n == 0) throw DomainError("cyclic orders must be positive");
    if (n == 1) continue;
    for (auto [l, e] : factor_integer(n)) primary[l].push_back(e);
  }
  std::size_t len = 0;
  for (auto& [l, es] : primary) {
    std::sort(es.rbegin(), es.rend());
    len = std::max(len, es.size());
  }
  // i-th largest invariant factor collects the i-th largest power of each prime.
  std::vector<std::uint64_t> out(len, 1);
  for (const auto& [l, es] : primary) {
    for (std::size_t i = 0; i < es.size(); ++i) out[i] = checked_mul(out[i], checked_pow(l, es[i]));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::uint64_t group_order(const GroupDescriptor& g) {
  return std::visit(overloaded{
                        [](const Abelian& a) {
                          std::uint64_t n = 1;
                          for (auto o : a.orders) n = checked_mul(n, o);
                          return n;
                        },
                        [](const Dihedral& d) { return d.order; },
                        [](const SymmetricS3&) { return std::uint64_t{6}; },
                        [](const IteratedWreathCyclic& w) {
                          std::uint64_t n = 1;
                          for (auto o : w.orders) {
                            n = checked_mul(checked_pow(n, static_cast<unsigned>(o)), o);
                          }
                          return n;
                        },
                        [](const Explicit& e) { return e.order; },
                    },
                    g);
}

std::vector<std::uint64_t> abelianization(const GroupDescriptor& g) {
  return std::visit(overloaded{
                        [](const Abelian& a) { return invariant_factors(a.orders); },
                        [](const Dihedral& d) { return dihedral_ab(d.order / 2); },
                        [](const SymmetricS3&) { return std::vector<std::uint64_t>{2}; },
                        [](const IteratedWreathCyclic& w) { return invariant_factors(w.orders); },
                        [](const Explicit& e) { return e.ab; },
                    },
                    g);
}

std::vector<std::uint64_t> p_quotient_abelianization(const GroupDescriptor& g, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  return std::visit(
      overloaded{
          [p](const Abelian& a) {
            std::vector<std::uint64_t> rest;
            for (auto n : a.orders) {
              while (n % p == 0) n /= p;
              if (n > 1) rest.push_back(n);
            }
            return invariant_factors(rest);
          },
          [p](const Dihedral& d) {
            std::uint64_t a = d.order / 2;
            // Reflections have order 2 and generate.
            if (p == 2) return std::vector<std::uint64_t>{};
            while (a % p == 0) a /= p;
            return dihedral_ab(a);
          },
          [p](const SymmetricS3&) {
            return p == 2 ? std::vector<std::uint64_t>{} : std::vector<std::uint64_t>{2};
          },
          [p](const IteratedWreathCyclic& w) {
            return w.l == p ? std::vector<std::uint64_t>{} : invariant_factors(w.orders);
          },
          [p](const Explicit& e) {
            auto it = e.p_quotient_ab.find(p);
            if (it != e.p_quotient_ab.end()) return it->second;
            if (e.order % p) return e.ab;  // p(G) is trivial
            throw DomainError("explicit descriptor has no p-quotient data for p = " + std::to_string(p));
          },
      },
      g);
}

bool is_trivial(const GroupDescriptor& g) { return group_order(g) == 1; }

unsigned bound(const GroupDescriptor& g, std::uint64_t p) {
  validate(g);
  if (is_trivial(g)) throw DomainError("the bound is stated for nontrivial groups only");
  const auto q = p_quotient_abelianization(g, p);
  const auto d = static_cast<unsigned>(q.size());
  std::uint64_t ab_order = 1;
  for (auto n : abelianization(g)) ab_order = checked_mul(ab_order, n);
  if (ab_order % p == 0) return d + 1;
  return std::max(d, 1u);
}

std::string_view to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::Matches: return "Matches";
    case BoundStatus::AboveBound: return "AboveBound";
    case BoundStatus::Violation: return "Violation";
  }
  return "?";
}

nlohmann::json BoundVerdict::to_json() const {
  return {{"bound", bound}, {"observed", observed}, {"status", std::string(to_string(status))}};
}

BoundVerdict BoundVerdict::from_json(const nlohmann::json& j) {
  return detail::decode_json("BoundVerdict", [&] {
    BoundVerdict v;
    v.bound = j.at("bound").get<unsigned>();
    v.observed = j.at("observed").get<unsigned>();
    const auto s = j.at("status").get<std::string>();
    if (s == "Matches") {
      v.status = BoundStatus::Matches;
    } else if (s == "AboveBound") {
      v.status = BoundStatus::AboveBound;
    } else if (s == "Violation") {
      v.status = BoundStatus::Violation;
    } else {
      throw ParseError("unknown bound status: " + s);
    }
    return v;
  });
}

BoundVerdict verdict(const GroupDescriptor& g, std::uint64_t p, unsigned observed) {
  BoundVerdict v;
  v.bound = bound(g, p);
  v.observed = observed;
  v.status = observed == v.bound ? BoundStatus::Matches
             : observed > v.bound ? BoundStatus::AboveBound
                                  : BoundStatus::Violation;
  return v;
}

Explicit direct_product(const std::vector<GroupDescriptor>& factors) {
  Explicit e;
  e.order = 1;
  std::vector<std::uint64_t> ab;
  for (const auto& g : factors) {
    validate(g);
    e.order = checked_mul(e.order, group_order(g));
    for (auto n : abelianization(g)) ab.push_back(n);
  }
  e.ab = invariant_factors(ab);
  for (auto p : prime_divisors(e.order)) {
    std::vector<std::uint64_t> q;
    for (const auto& g : factors) {
      for (auto n : p_quotient_abelianization(g, p)) q.push_back(n);
    }
    e.p_quotient_ab[p] = invariant_factors(q);
  }
  return e;
}

}  // namespace minram
