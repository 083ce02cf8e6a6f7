#pragma once

#include <random>
#include <vector>

#include "minram/bivar.hpp"
#include "minram/poly.hpp"
#include "oracles.hpp"

namespace testing_util {

inline minram::FpPoly from_vec(const oracle::Vec& v, const minram::PrimeField& f) {
  std::vector<minram::PrimeField::Elem> c;
  for (auto x : v) c.push_back(f.from_int(x));
  return minram::FpPoly(f, c);
}

inline oracle::Vec to_vec(const minram::FpPoly& f) {
  oracle::Vec v;
  for (auto c : f.coeffs()) v.push_back(static_cast<std::int64_t>(c));
  return v;
}

inline minram::FpPoly random_poly(const minram::PrimeField& f, int deg, std::mt19937_64& rng, bool monic = false) {
  std::vector<minram::PrimeField::Elem> c(deg + 1);
  for (auto& x : c) x = rng() % f.characteristic();
  if (monic) {
    c[deg] = 1;
  } else if (c[deg] == 0) {
    c[deg] = 1 + rng() % (f.characteristic() - 1);
  }
  return minram::FpPoly(f, c);
}

}  // namespace testing_util
