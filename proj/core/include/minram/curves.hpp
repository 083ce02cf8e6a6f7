#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "minram/poly.hpp"

namespace minram {

enum class ModelKind { Hyperelliptic, ArtinSchreier };

std::string_view to_string(ModelKind k);

/// y^2 = D (p odd) or y^2 + y = R (p = 2) over F_p(t).
class QuadraticModel {
 public:
  /// D is replaced by lc(D) times the product of its odd-multiplicity
  /// primes; sqrt(D) and sqrt(D s^2) generate the same field. A D that is a
  /// constant times a square gives no geometric extension and is rejected.
  static QuadraticModel hyperelliptic(const FpPoly& d);
  /// Only polynomial R of odd degree is supported.
  static QuadraticModel artin_schreier(const FpPoly& rhs);

  ModelKind kind() const { return kind_; }
  std::uint64_t p() const { return poly_.field().characteristic(); }
  const FpPoly& poly() const { return poly_; }
  unsigned genus() const { return genus_; }

 private:
  QuadraticModel(ModelKind kind, FpPoly poly, unsigned genus)
      : kind_(kind), poly_(std::move(poly)), genus_(genus) {}

  ModelKind kind_;
  FpPoly poly_;
  unsigned genus_;
};

/// Rational points of the smooth projective model over F_{p^k}. Asserts the
/// Weil bound; p^k above 1e7 is a ResourceError.
std::uint64_t count_points(const QuadraticModel& model, unsigned k);

struct ClassNumber {
  std::uint64_t h = 0;
  std::vector<long long> L;      ///< L(T) coefficients, constant term first
  unsigned genus = 0;
  std::vector<std::uint64_t> N;  ///< N_1 .. N_max(g,1)

  nlohmann::json to_json() const;
  static ClassNumber from_json(const nlohmann::json& j);
};

/// h = L(1) from N_1..N_g and the functional equation. A reconstruction
/// that violates the Weil coefficient bounds throws InternalError.
ClassNumber class_number(const QuadraticModel& model);

bool check_div3(const QuadraticModel& model);

}  // namespace minram
