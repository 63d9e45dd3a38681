#include <gtest/gtest.h>

#include <random>

#include "syzcurve/parse.hpp"
#include "syzcurve/roots.hpp"
#include "test_util.hpp"

using namespace syzcurve;

namespace {

const NumberField QQ = NumberField::rationals();

UPoly from_roots(const NumberField& k, const std::vector<FieldElement>& rs) {
  UPoly p = UPoly::constant(k.one());
  for (const auto& r : rs) p = p * UPoly(k, {-r, k.one()});
  return p;
}

}  // namespace

TEST(Roots, RationalRoots) {
  UPoly p = from_roots(QQ, {QQ.from_rational(Rational(1, 3)), QQ.from_int(-7), QQ.from_int(-7)});
  auto f = factor_low_degree(p);
  ASSERT_EQ(f.roots.size(), 2u);
  EXPECT_EQ(f.roots[0].first, QQ.from_int(-7));
  EXPECT_EQ(f.roots[0].second, 2);
  EXPECT_EQ(f.roots[1].second, 1);
  EXPECT_TRUE(f.quadratics.empty());
}

TEST(Roots, IrreducibleQuadraticsAndCubics) {
  UPoly p(QQ, {QQ.from_int(-5), QQ.zero(), QQ.one()});
  p = p * UPoly(QQ, {QQ.from_int(2), QQ.zero(), QQ.zero(), QQ.one()});
  auto f = factor_low_degree(p);
  EXPECT_TRUE(f.roots.empty());
  ASSERT_EQ(f.quadratics.size(), 1u);
  EXPECT_EQ(f.quadratics[0].first.coeff(0), QQ.from_int(-5));
  ASSERT_EQ(f.others.size(), 1u);
}

TEST(Roots, QuarticSplitsIntoQuadratics) {
  // (t^2 - 2)(t^2 - 3)
  UPoly p(QQ, {QQ.from_int(6), QQ.zero(), QQ.from_int(-5), QQ.zero(), QQ.one()});
  auto f = factor_low_degree(p);
  EXPECT_TRUE(f.roots.empty());
  EXPECT_EQ(f.quadratics.size(), 2u);
}

TEST(Roots, SquareRoots) {
  NumberField k = NumberField::adjoin_root("a", parse_univariate("a^2-5", "a"));
  auto r = sqrt_in_field(k.from_int(5));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r * *r, k.from_int(5));
  EXPECT_FALSE(sqrt_in_field(k.from_int(2)).has_value());
  auto s = sqrt_in_field(parse_field_element("6+2*a", k));  // (1+a)^2
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s * *s, parse_field_element("6+2*a", k));
  EXPECT_EQ(squarefree_kernel(Rational(-12, 5)), Integer(-15));
  EXPECT_EQ(squarefree_kernel(Rational(49)), Integer(1));
}

TEST(Roots, RandomRootsOverNumberFields) {
  std::mt19937 rng(99);
  std::vector<NumberField> fields = {QQ, NumberField::adjoin_root("a", parse_univariate("a^2-5", "a")),
                                     NumberField::adjoin_root("e", parse_univariate("e^2-e+1", "e")),
                                     NumberField::adjoin_root("w", parse_univariate("w^4+w^3+w^2+w+1", "w")),
                                     NumberField::adjoin_root("h", parse_univariate("h^2+1/2*h+3", "h"))};
  for (const auto& k : fields) {
    for (int i = 0; i < 8; ++i) {
      std::vector<FieldElement> rs;
      for (int j = 0; j < 1 + i % 4; ++j) rs.push_back(syzcurve::testing::random_element(k, rng));
      UPoly p = from_roots(k, rs);
      // an irreducible factor on top: t^2 - generator - 7 has no roots for these fields
      UPoly q(k, {-(k.generator() + k.from_int(7)), k.zero(), k.one()});
      bool q_irreducible = !sqrt_in_field(k.generator() + k.from_int(7)).has_value();
      auto f = factor_low_degree(p * q);
      std::vector<FieldElement> distinct = rs;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      ASSERT_EQ(f.roots.size(), distinct.size() + (q_irreducible ? 0 : 2)) << k.describe();
      if (q_irreducible) {
        for (std::size_t j = 0; j < distinct.size(); ++j) EXPECT_EQ(f.roots[j].first, distinct[j]);
        EXPECT_EQ(f.quadratics.size(), 1u);
      }
    }
  }
}
