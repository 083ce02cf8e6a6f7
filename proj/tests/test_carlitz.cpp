#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "minram/carlitz.hpp"
#include "minram/errors.hpp"
#include "minram/factor.hpp"
#include "minram/text.hpp"

using namespace minram;
using testing_util::from_vec;
using testing_util::random_poly;
using testing_util::to_vec;

namespace {

/// [M](alpha) mod m from the coefficient list, with naive arithmetic.
oracle::Vec naive_eval(const AdditivePoly& a, const oracle::Vec& alpha, const oracle::Vec& m, std::int64_t p) {
  oracle::Vec acc, power = oracle::rem(alpha, m, p);
  for (const auto& tau : a.taus()) {
    oracle::Vec term = oracle::rem(oracle::mul(to_vec(tau), power, p), m, p);
    oracle::Vec neg = oracle::sub({}, term, p);
    acc = oracle::sub(acc, neg, p);
    oracle::Vec next{1};
    for (std::int64_t i = 0; i < p; ++i) next = oracle::rem(oracle::mul(next, power, p), m, p);
    power = next;
  }
  return acc;
}

}  // namespace

TEST(Carlitz, SmallPolynomials) {
  PrimeField f(3);
  auto c = carlitz_poly(parse_poly("t^2", f));
  ASSERT_EQ(c.taus().size(), 3u);
  EXPECT_EQ(c.taus()[0], parse_poly("t^2", f));
  EXPECT_EQ(c.taus()[1], parse_poly("t^3+t", f));
  EXPECT_TRUE(c.taus()[2].is_one());
  EXPECT_EQ(carlitz_poly(FpPoly::constant(f, 2)).taus(), std::vector<FpPoly>{FpPoly::constant(f, 2)});
  EXPECT_EQ(c.to_string(), "(1)*x^(3^2)+(t^3+t)*x^(3^1)+(t^2)*x^(3^0)");
}

TEST(Carlitz, RingHomomorphism) {
  std::mt19937_64 rng(31);
  for (std::uint64_t p : {2, 3, 5}) {
    PrimeField f(p);
    for (int it = 0; it < 15; ++it) {
      FpPoly a = random_poly(f, rng() % 4, rng), b = random_poly(f, rng() % 4, rng);
      EXPECT_EQ(carlitz_poly(a * b), compose(carlitz_poly(a), carlitz_poly(b)));
      EXPECT_EQ(compose(carlitz_poly(a), carlitz_poly(b)), compose(carlitz_poly(b), carlitz_poly(a)));
      EXPECT_EQ(carlitz_poly(a + b), carlitz_poly(a) + carlitz_poly(b));
      EXPECT_EQ(carlitz_poly(a).height(), a.degree());
    }
  }
}

TEST(Carlitz, ActionMatchesNaiveEvaluation) {
  std::mt19937_64 rng(32);
  for (std::int64_t p : {2, 3, 7}) {
    PrimeField f(p);
    for (int it = 0; it < 15; ++it) {
      FpPoly m = random_poly(f, 1 + rng() % 3, rng);
      FpPoly mod = random_poly(f, 1 + rng() % 4, rng, true);
      FpPoly alpha = random_poly(f, rng() % 5, rng);
      FpPoly act = carlitz_action(m, alpha, mod);
      EXPECT_EQ(act, from_vec(naive_eval(carlitz_poly(m), to_vec(alpha), to_vec(mod), p), f));
      EXPECT_EQ(act, carlitz_poly(m).evaluate(alpha, mod));
    }
  }
}

TEST(Carlitz, Frobenius) {
  PrimeField f(3);
  FpPoly a = parse_poly("t^2+2t+1", f);
  EXPECT_EQ(frobenius(a, 1), a.pow(3));
  EXPECT_EQ(frobenius(a, 2), a.pow(9));
}

TEST(Carlitz, GroupOrderIsPhi) {
  PrimeField f(5);
  EXPECT_EQ(cyclotomic_group_order(parse_poly("t", f)), 4u);
  EXPECT_EQ(cyclotomic_group_order(parse_poly("t^2", f)), 20u);
  EXPECT_EQ(cyclotomic_group_order(parse_poly("t^2+2", f)), phi(parse_poly("t^2+2", f)));
  EXPECT_THROW(cyclotomic_group_order(FpPoly(f)), DomainError);
}
