#include <gtest/gtest.h>

#include <random>
#include <set>

#include "syzcurve/errors.hpp"
#include "syzcurve/localsing.hpp"
#include "syzcurve/parse.hpp"
#include "syzcurve/syzygy.hpp"
#include "test_util.hpp"

using namespace syzcurve;

namespace {

const NumberField QQ = NumberField::rationals();

HomogPoly P(const std::string& s) { return parse_poly(s, QQ); }
BivariatePoly B(const std::string& s) { return P(s).dehomogenize(2); }

ProjPoint pt(long a, long b, long c) { return {QQ.from_int(a), QQ.from_int(b), QQ.from_int(c)}; }

ProjPoint normalize(ProjPoint p) {
  std::size_t i = 0;
  while (p[i].is_zero()) ++i;
  FieldElement s = p[i].inverse();
  for (auto& v : p) v = v * s;
  return p;
}

}  // namespace

TEST(LocalSing, MilnorExamples) {
  // inhomogeneous inputs are written with z as a dummy homogenizing variable
  EXPECT_EQ(local_milnor(B("x^2+y^2")), 1);
  EXPECT_EQ(local_milnor(B("x^2*z^2+y^4")), 3);
  EXPECT_EQ(local_milnor(B("x^4+y^4")), 9);
  EXPECT_EQ(local_tjurina(B("x^2+y^2")), 1);
}

TEST(LocalSing, NonQuasiHomogeneous) {
  // x^4 + y^5 + x^2 y^3: mu = 12, tau = 11
  BivariatePoly g = B("x^4*z+y^5+x^2*y^3");
  EXPECT_EQ(local_milnor(g), 12);
  EXPECT_EQ(local_tjurina(g), 11);
}

TEST(LocalSing, Errors) {
  EXPECT_THROW(local_milnor(B("x+y^2")), Error);
  EXPECT_THROW(local_milnor(B("x^2")), Error);
  try {
    local_invariants_at(P("x*y*z"), pt(1, 1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PointNotOnCurve);
  }
  try {
    local_invariants_at(P("x*y*z"), pt(1, 0, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PointNotSingular);
  }
  NumberField k = NumberField::adjoin_root("a", parse_univariate("a^2-2", "a"));
  ProjPoint p{k.generator(), k.zero(), k.zero()};
  try {
    local_invariants_at(P("x*y*z"), p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldTooSmall);
  }
}

TEST(LocalSing, InvariantsAtExamples) {
  auto n = local_invariants_at(P("x*y*z"), pt(0, 0, 1));
  EXPECT_EQ(n.mu, 1);
  EXPECT_EQ(n.tau, 1);
  EXPECT_EQ(n.multiplicity, 2);
  auto z = local_invariants_at(P("x*y*(y^2+x*z)*(y^2+x^2+2*x*z)"), pt(0, 0, 1));
  EXPECT_EQ(z.multiplicity, 4);
  EXPECT_EQ(z.mu, 15);
  EXPECT_EQ(z.tau, 15);
  EXPECT_TRUE(z.quasi_homogeneous);
  EXPECT_EQ(classify_local(z).kind, SingTypeLabel::Kind::Other);
  // quadruple point of the WZZ arrangement: y=3x+5z, y=-3x+5z, x=0 and the conic meet at (0:5:1)
  HomogPoly q1 = P("(-24*x^2-23*y^2+76*y*z+195*z^2)*(y-3*x-5*z)*(y+3*x-5*z)*(y+z)*(y-3*z)*x*(x+y+z)");
  auto q = local_invariants_at(q1, pt(0, 5, 1), 4);
  EXPECT_EQ(q.mu, 9);
  EXPECT_EQ(q.tau, 9);
  EXPECT_EQ(classify_local(q).kind, SingTypeLabel::Kind::X9);
}

TEST(LocalSing, LabelTable) {
  EXPECT_EQ(classify_local({1, 1, 2, 2, true}).name(), "A_1");
  EXPECT_EQ(classify_local({3, 3, 2, 2, true}).name(), "A_3");
  EXPECT_EQ(classify_local({5, 5, 2, 2, true}).name(), "A_5");
  EXPECT_EQ(classify_local({4, 4, 3, 3, true}).name(), "D_4");
  EXPECT_EQ(classify_local({9, 9, 4, 4, true}).name(), "X_9");
  EXPECT_EQ(classify_local({16, 16, 5, 5, true}).name(), "Ordinary(5)");
  auto q = classify_local({16, 15, 5, 5, false});
  EXPECT_EQ(q.kind, SingTypeLabel::Kind::Other);
  EXPECT_NE(q.note.find("not quasi-homogeneous"), std::string::npos);
}

TEST(LocalSing, OrdinaryPointsHaveMuSquare) {
  std::mt19937 rng(3);
  for (int m = 2; m <= 5; ++m) {
    for (int trial = 0; trial < 5; ++trial) {
      // m pairwise independent lines through the origin
      std::set<std::pair<long, long>> slopes;
      HomogPoly f = HomogPoly::constant(QQ.one());
      while (static_cast<int>(slopes.size()) < m) {
        long a = static_cast<long>(rng() % 9) - 4, b = static_cast<long>(rng() % 9) - 4;
        if (a == 0 && b == 0) continue;
        long g = std::gcd(a, b);
        a /= g;
        b /= g;
        if (a < 0 || (a == 0 && b < 0)) { a = -a; b = -b; }
        if (!slopes.insert({a, b}).second) continue;
        f = f * HomogPoly::linear(QQ.from_int(a), QQ.from_int(b), QQ.zero());
      }
      BivariatePoly g = f.dehomogenize(2);
      EXPECT_EQ(local_milnor(g), (m - 1) * (m - 1));
      EXPECT_EQ(local_tjurina(g), (m - 1) * (m - 1));
    }
  }
}

TEST(LocalSing, InvariantUnderLinearChange) {
  std::mt19937 rng(11);
  const std::vector<std::pair<std::string, ProjPoint>> cases = {
      {"x*y*(y^2+x*z)*(y^2+x^2+2*x*z)", pt(0, 0, 1)},
      {"x*(x-13*y)*(y^2+x*z)*(y^2+x^2+2*x*z)", pt(0, 0, 1)},
      {"(x^4*z+y^5+x^2*y^3)", pt(0, 0, 1)},
      {"(x^2-y*z)*(x^2+z^2-y*z)", pt(0, 1, 0)},
      {"x*y*(x-y)*(x+2*y-z)", pt(0, 0, 1)}};
  for (const auto& [s, p] : cases) {
    HomogPoly f = P(s);
    auto base = local_invariants_at(f, p);
    for (int t = 0; t < 6; ++t) {
      Mat3 m = syzcurve::testing::random_invertible(QQ, rng);
      Mat3 inv = mat3_inverse(m);
      ProjPoint q;
      for (std::size_t i = 0; i < 3; ++i) q[i] = inv[i][0] * p[0] + inv[i][1] * p[1] + inv[i][2] * p[2];
      auto moved = local_invariants_at(f.substitute_linear(m), q);
      EXPECT_EQ(moved.mu, base.mu) << s;
      EXPECT_EQ(moved.tau, base.tau) << s;
      EXPECT_EQ(moved.multiplicity, base.multiplicity) << s;
    }
  }
}

TEST(LocalSing, LocalSumMatchesGlobalTjurina) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + trial % 4;
    std::vector<std::array<long, 3>> lines;
    HomogPoly f = HomogPoly::constant(QQ.one());
    while (static_cast<int>(lines.size()) < n) {
      std::array<long, 3> l{static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2,
                            static_cast<long>(rng() % 5) - 2};
      if (l == std::array<long, 3>{0, 0, 0}) continue;
      HomogPoly lf = HomogPoly::linear(QQ.from_int(l[0]), QQ.from_int(l[1]), QQ.from_int(l[2]));
      if (!is_reduced(f * lf)) continue;
      f = f * lf;
      lines.push_back(l);
    }
    // cross products give every intersection point
    std::set<std::vector<std::string>> seen;
    long sum = 0;
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        const auto& a = lines[i];
        const auto& b = lines[j];
        ProjPoint p = normalize(pt(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]));
        std::vector<std::string> key{p[0].to_string(), p[1].to_string(), p[2].to_string()};
        if (!seen.insert(key).second) continue;
        sum += local_invariants_at(f, p).tau;
      }
    EXPECT_EQ(sum, total_tjurina(f)) << f.to_string();
  }
}
