#include <gtest/gtest.h>

#include <set>

#include "minram/errors.hpp"
#include "minram/extension_field.hpp"
#include "minram/factor.hpp"
#include "minram/text.hpp"

using namespace minram;

namespace {

void check_field_axioms(const ExtensionField& F) {
  const std::uint64_t q = F.size();
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < q; ++i) {
    auto a = F.element(i);
    ASSERT_EQ(F.index(a), i);
    seen.insert(F.index(a));
    EXPECT_TRUE(F.equal(F.pow(a, q), a));
    EXPECT_TRUE(F.equal(F.pow(F.pth_root(a), F.characteristic()), a));
    if (!F.is_zero(a)) EXPECT_TRUE(F.is_one(F.mul(a, F.inv(a))));
    auto b = F.element((i * 7 + 3) % q);
    auto c = F.element((i * 13 + 1) % q);
    EXPECT_TRUE(F.equal(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c))));
    EXPECT_TRUE(F.equal(F.sub(F.add(a, b), b), a));
  }
  EXPECT_EQ(seen.size(), q);
}

}  // namespace

TEST(ExtensionField, AxiomsOverSmallFields) {
  check_field_axioms(ExtensionField::of_degree(2, 4));
  check_field_axioms(ExtensionField::of_degree(3, 2));
  check_field_axioms(ExtensionField::of_degree(5, 3));
  check_field_axioms(ExtensionField::of_degree(7, 2));
}

TEST(ExtensionField, GeneratorIsARootOfTheModulus) {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 5}, {3, 3}, {5, 2}, {7, 2}}) {
    auto F = ExtensionField::of_degree(p, k);
    auto g = F.generator();
    auto acc = F.zero();
    const auto& m = F.modulus();
    for (int i = m.degree(); i >= 0; --i) acc = F.add(F.mul(acc, g), F.from_int(static_cast<long long>(m.coeff(i))));
    EXPECT_TRUE(F.is_zero(acc));
    // 1, g, ..., g^(k-1) are the basis vectors.
    auto x = F.one();
    for (unsigned i = 0; i < k; ++i, x = F.mul(x, g)) EXPECT_EQ(F.lift(x), FpPoly::monomial(F.base(), 1, i));
  }
}

TEST(ExtensionField, HalfTheUnitsAreSquares) {
  auto F = ExtensionField::of_degree(3, 3);
  std::uint64_t squares = 0;
  for (std::uint64_t i = 1; i < F.size(); ++i) squares += F.is_square(F.element(i));
  EXPECT_EQ(squares, (F.size() - 1) / 2);
  auto G = ExtensionField::of_degree(2, 3);
  for (std::uint64_t i = 0; i < G.size(); ++i) EXPECT_TRUE(G.is_square(G.element(i)));
}

TEST(ExtensionField, RejectsBadModuli) {
  PrimeField f(3);
  EXPECT_THROW(ExtensionField(FieldSpec{3, parse_poly("t^2+2", f)}), DomainError);  // (t+1)(t+2)
  EXPECT_THROW(ExtensionField(FieldSpec{3, parse_poly("2t^2+1", f)}), DomainError);
  EXPECT_THROW(ExtensionField(FieldSpec{3, std::nullopt}), DomainError);
  EXPECT_NO_THROW(ExtensionField(FieldSpec{3, parse_poly("t^2+1", f)}));
}

TEST(ExtensionField, FieldSpecSize) {
  PrimeField f(7);
  EXPECT_EQ((FieldSpec{7, std::nullopt}.q()), 7u);
  EXPECT_EQ((FieldSpec{7, parse_poly("t^3+3", f)}.q()), 343u);
  PrimeField g(2);
  EXPECT_THROW((FieldSpec{2, FpPoly::monomial(g, 1, 70)}.q()), ResourceError);
}

TEST(ExtensionField, PolynomialsOverExtensionFactor) {
  // x^2 - t is irreducible over F_3 but splits over F_9 after embedding.
  auto F = ExtensionField::of_degree(3, 2);
  auto gen = F.generator();
  using P = Poly<ExtensionField>;
  P sq = P(F, {F.neg(F.mul(gen, gen)), F.zero(), F.one()});
  auto fac = factor(sq);
  ASSERT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(fac.expand(F), sq);
  EXPECT_FALSE(is_irreducible(sq));
  auto r = smallest_irreducible(PrimeField(3), 2);
  EXPECT_EQ(to_string(r), "t^2+1");
}
