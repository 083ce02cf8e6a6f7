#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "minram/bivar.hpp"
#include "minram/extension_field.hpp"
#include "minram/poly.hpp"
#include "minram/ramify.hpp"

namespace minram {

/// One conductor per requested cyclic order n_i: distinct monic irreducibles
/// M_i of the least degree d with (p-1) n_i | p^d - 1, smallest first.
/// Orders divisible by p are rejected: those need the p-group construction.
std::vector<FpPoly> abelian_moduli(std::uint64_t p, const std::vector<std::uint64_t>& invariants);

/// Invariant factors (ascending, each dividing the next) of the principal
/// units 1 + a_1 u + ... + a_n u^n under multiplication mod u^(n+1).
/// Brute force over all p^n elements; p^n above 3e6 is a ResourceError.
std::vector<std::uint64_t> unit_group_structure(std::uint64_t p, unsigned n);

/// Whether the abelian group with invariants h is a quotient of the one with
/// invariants g (both in any order).
bool is_abelian_quotient(std::vector<std::uint64_t> g, std::vector<std::uint64_t> h);

struct D8Witness {
  std::uint64_t p;
  std::uint64_t A;  ///< lc(a)
  std::uint64_t B;  ///< lc(b)
  FpPoly a, b;
  FpPoly disc_ab;          ///< a^2 - 4b
  std::uint64_t disc_AB;  ///< A^2 - 4B mod p
  RamReport ram;

  /// Fills in B and the derived columns from (p, a, b).
  static D8Witness from_ab(const FpPoly& a, const FpPoly& b);

  nlohmann::json to_json() const;
  static D8Witness from_json(const nlohmann::json& j);
};

struct S3Witness {
  std::uint64_t p;
  std::uint64_t u;
  FpPoly w;
  FpPoly pi;    ///< 4w^3 - 27u
  FpPoly disc;  ///< u^3 pi

  static S3Witness from_uw(std::uint64_t u, const FpPoly& w);
  /// x^3 - u w x - u^2
  XPoly cubic() const;

  nlohmann::json to_json() const;
  static S3Witness from_json(const nlohmann::json& j);
};

struct Check {
  std::string name;
  bool ok = false;
};

struct Verification {
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool ok() const;
  std::vector<std::string> failed() const;
};

struct D8VerifyOptions {
  /// Accept b = unit * pi^k in place of an irreducible b (the nonsquare
  /// conditions are still checked).
  bool allow_prime_power_b = false;
};

/// Re-derives every D8 condition from (a, b) alone.
Verification verify_d8(const D8Witness& w, const D8VerifyOptions& opt = {});
Verification verify_s3(const S3Witness& w);

struct SearchOptions {
  std::uint64_t budget = 1000000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct SearchStats {
  std::uint64_t examined = 0;
};

/// Walks a = A t^(deg_b/2) + c with A^2-4 a nonsquare, and monic b of degree
/// deg_b (constant term in a seeded shuffle, other coefficients ascending).
/// Throws SearchExhausted when the budget runs out.
D8Witness search_d8(std::uint64_t p, unsigned deg_b, const SearchOptions& opt, SearchStats* stats = nullptr);

/// u in a seeded shuffle of F_p^x, w monic of even degree deg_w ascending.
/// Only p = 1 mod 3, p >= 7 is supported.
S3Witness search_s3(std::uint64_t p, unsigned deg_w, const SearchOptions& opt, SearchStats* stats = nullptr);

/// Hand-built one-place S3 data for p = 2 and p = 3, which the searched
/// family does not cover.
struct SpecialS3 {
  std::uint64_t p = 0;
  XPoly f;
  std::string description;
};
SpecialS3 special_s3(std::uint64_t p);
Verification verify_special_s3(const SpecialS3& s);

/// Two-factor explicit lower bound for the number of admissible g.
struct PollackLowerBound {
  double threshold = 0;  ///< 4 n^2 (1 + C(B,2))
  double first = 0;      ///< q^(n-1) - 4 n^2 q^(n-2) (1 + C(B,2))
  double second = 0;     ///< q/n^r - 2/n^r (sqrt q + 1 + n!^B) - (n-1) B
  double value = 0;      ///< first * second
  /// Both factors positive. The product alone can be positive with two
  /// negative factors, which proves nothing.
  bool certifies_positive = false;
};
PollackLowerBound pollack_lower_bound(double q, unsigned n, unsigned r, unsigned B);

struct PollackResult {
  std::uint64_t count = 0;
  double main_term = 0;  ///< q^n / n^r
  double ratio = 0;      ///< count / main_term
  PollackLowerBound lower;
};

/// Counts monic g of degree n over F_q with every f_i(g) irreducible, by
/// enumerating all q^n candidates (capped at 1e7).
PollackResult pollack_count(const FieldSpec& q, unsigned n, const std::vector<FpPoly>& f_list);
PollackResult pollack_count(const ExtensionField& field, unsigned n,
                            const std::vector<Poly<ExtensionField>>& f_list);

}  // namespace minram
