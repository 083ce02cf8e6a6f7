#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "minram/curves.hpp"
#include "minram/errors.hpp"
#include "minram/factor.hpp"
#include "minram/text.hpp"

using namespace minram;
using testing_util::random_poly;
using testing_util::to_vec;

namespace {

/// F_{p^k} as residues mod an irreducible found by trial division; elements
/// are indices 0..q-1 in base p.
struct NaiveField {
  std::int64_t p;
  int k;
  oracle::Vec mod;
  std::int64_t q;

  NaiveField(std::int64_t p_, int k_) : p(p_), k(k_), q(1) {
    for (int i = 0; i < k; ++i) q *= p;
    for (const auto& m : oracle::monics(k, p)) {
      if (k == 1 || oracle::irreducible(m, p)) {
        mod = m;
        break;
      }
    }
  }
  oracle::Vec vec(std::int64_t idx) const {
    oracle::Vec v;
    for (int i = 0; i < k; ++i, idx /= p) v.push_back(idx % p);
    return oracle::norm(v, p);
  }
  std::int64_t idx(const oracle::Vec& v) const {
    std::int64_t r = 0;
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) r = r * p + v[i];
    return r;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    return idx(oracle::rem(oracle::mul(vec(a), vec(b), p), mod, p));
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const {
    oracle::Vec x = vec(a), y = vec(b);
    return idx(oracle::sub(x, oracle::sub({}, y, p), p));
  }
  /// D(x) with D over F_p.
  std::int64_t eval(const oracle::Vec& d, std::int64_t x) const {
    std::int64_t r = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) r = add(mul(r, x), idx(oracle::norm({*it}, p)));
    return r;
  }
};

std::uint64_t brute_hyperelliptic(const oracle::Vec& d, std::int64_t p, int k) {
  NaiveField F(p, k);
  std::vector<int> roots(F.q, 0);
  for (std::int64_t y = 0; y < F.q; ++y) roots[F.mul(y, y)]++;
  std::uint64_t n = 0;
  for (std::int64_t x = 0; x < F.q; ++x) n += roots[F.eval(d, x)];
  const int deg = static_cast<int>(d.size()) - 1;
  if (deg % 2) {
    n += 1;
  } else {
    n += roots[F.idx(oracle::norm({d.back()}, p))];  // 2 if lc is a square in F_q, else 0
  }
  return n;
}

std::uint64_t brute_artin_schreier(const oracle::Vec& r, int k) {
  NaiveField F(2, k);
  std::uint64_t n = 1;
  for (std::int64_t x = 0; x < F.q; ++x) {
    const std::int64_t rx = F.eval(r, x);
    for (std::int64_t y = 0; y < F.q; ++y) n += F.add(F.mul(y, y), y) == rx;
  }
  return n;
}

}  // namespace

TEST(Curves, HyperellipticCountsAgainstBruteForce) {
  std::mt19937_64 rng(61);
  for (std::int64_t p : {3, 5, 7}) {
    PrimeField f(p);
    for (int it = 0; it < 12; ++it) {
      FpPoly d = random_poly(f, 1 + rng() % 6, rng);
      if (!is_squarefree(d) || d.degree() < 1) continue;
      auto m = QuadraticModel::hyperelliptic(d);
      for (int k = 1; k <= (p == 7 ? 2 : 3); ++k) {
        EXPECT_EQ(count_points(m, k), brute_hyperelliptic(to_vec(d), p, k)) << to_string(d) << " k=" << k;
      }
    }
  }
}

TEST(Curves, ArtinSchreierCountsAgainstBruteForce) {
  PrimeField f(2);
  for (const char* r : {"t", "t^3", "t^3+t+1", "t^5+t^2", "t^7+t^3+1"}) {
    auto m = QuadraticModel::artin_schreier(parse_poly(r, f));
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(count_points(m, k), brute_artin_schreier(to_vec(parse_poly(r, f)), k)) << r;
  }
  EXPECT_THROW(QuadraticModel::artin_schreier(parse_poly("t^2", f)), DomainError);
  EXPECT_THROW(QuadraticModel::artin_schreier(parse_poly("t^3", PrimeField(3))), DomainError);
}

TEST(Curves, NormalizationToSquarefree) {
  PrimeField f(5);
  auto m = QuadraticModel::hyperelliptic(parse_poly("2*t^3*(t+1)^2", f));
  EXPECT_EQ(m.poly(), parse_poly("2t", f));
  EXPECT_EQ(m.genus(), 0u);
  EXPECT_THROW(QuadraticModel::hyperelliptic(parse_poly("3*(t+1)^2", f)), DomainError);
  EXPECT_THROW(QuadraticModel::hyperelliptic(parse_poly("t", PrimeField(2))), DomainError);
}

TEST(Curves, ClassNumbers) {
  PrimeField f13(13), f5(5), f2(2);
  auto h = class_number(QuadraticModel::hyperelliptic(parse_poly("2*(4t^6+11)", f13)));
  EXPECT_EQ(h.h, 399u);
  EXPECT_EQ(h.genus, 2u);
  EXPECT_TRUE(check_div3(QuadraticModel::hyperelliptic(parse_poly("2*(4t^6+11)", f13))));
  auto as = class_number(QuadraticModel::artin_schreier(parse_poly("(t+1)^3", f2)));
  EXPECT_EQ(as.L, (std::vector<long long>{1, 0, 2}));
  EXPECT_EQ(as.h, 3u);
  // t^3+t+1 takes the value 1 at both rational t, so N_1 = 1 and a_1 = -2.
  auto other = class_number(QuadraticModel::artin_schreier(parse_poly("t^3+t+1", f2)));
  EXPECT_EQ(other.L, (std::vector<long long>{1, -2, 2}));
  EXPECT_EQ(other.h, 1u);
  EXPECT_EQ(class_number(QuadraticModel::hyperelliptic(parse_poly("t", f5))).h, 1u);
}

TEST(Curves, LPolynomialStructure) {
  std::mt19937_64 rng(62);
  for (std::uint64_t p : {3, 5, 7, 11}) {
    PrimeField f(p);
    for (int it = 0; it < 8; ++it) {
      FpPoly d = random_poly(f, 3 + rng() % 4, rng);
      if (!is_squarefree(d)) continue;
      auto m = QuadraticModel::hyperelliptic(d);
      auto c = class_number(m);
      const unsigned g = c.genus;
      ASSERT_EQ(c.L.size(), 2 * g + 1);
      EXPECT_EQ(c.L[0], 1);
      long long sum = 0;
      for (auto x : c.L) sum += x;
      EXPECT_EQ(static_cast<long long>(c.h), sum);
      for (unsigned i = 0; i <= g; ++i) {
        long long pw = 1;
        for (unsigned j = i; j < g; ++j) pw *= static_cast<long long>(p);
        EXPECT_EQ(c.L[2 * g - i], pw * c.L[i]);
      }
      // a_1 = N_1 - (q + 1).
      if (g > 0) EXPECT_EQ(c.L[1], static_cast<long long>(c.N[0]) - static_cast<long long>(p + 1));
      EXPECT_EQ(check_div3(m), c.h % 3 == 0);
      EXPECT_EQ(ClassNumber::from_json(c.to_json()).to_json(), c.to_json());
    }
  }
}

TEST(Curves, ResourceLimit) {
  PrimeField f(101);
  auto m = QuadraticModel::hyperelliptic(parse_poly("t^5+t+1", f));
  EXPECT_THROW(count_points(m, 4), ResourceError);
  EXPECT_EQ(to_string(ModelKind::ArtinSchreier), "artin-schreier");
}
