#include <gtest/gtest.h>

#include <set>

#include "syzcurve/catalog.hpp"
#include "syzcurve/errors.hpp"
#include "syzcurve/parse.hpp"

using namespace syzcurve;

namespace {

const NumberField QQ = NumberField::rationals();

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

NumberField quadratic(const std::string& minpoly) { return NumberField::adjoin_root("r", parse_univariate(minpoly, "r")); }

}  // namespace

TEST(Catalog, ListingAndLookup) {
  EXPECT_GE(catalog().size(), 12u);
  std::set<std::string> names;
  for (const auto& e : catalog()) EXPECT_TRUE(names.insert(e.name).second) << e.name;
  EXPECT_EQ(catalog_entry("wzz-1").name, "wzz-1");
  EXPECT_EQ(code_of([] { catalog_entry("no-such-entry"); }), ErrorCode::UnknownName);
}

TEST(Catalog, GoldenData) {
  for (const auto& e : catalog()) {
    SCOPED_TRACE(e.name);
    Arrangement a = e.build();
    EXPECT_TRUE(is_reduced(a.product()));
    const Golden& g = e.expected;
    CurveAnalysis c = classify(a.product());
    if (g.cls) EXPECT_EQ(c.cls, *g.cls);
    if (g.m) EXPECT_EQ(c.m, *g.m);
    if (!g.exponents.empty()) EXPECT_EQ(c.resolution.generator_degrees, g.exponents);
    if (g.relations) EXPECT_EQ(c.resolution.relation_degrees, *g.relations);
    if (g.mdr) EXPECT_EQ(c.mdr, *g.mdr);
    if (g.tau) EXPECT_EQ(c.tau, *g.tau);
    if (g.subtype) EXPECT_EQ(c.subtype, *g.subtype);
    if (!g.degree_counts.empty() || !g.singularities.empty()) {
      WeakCombinatorics w = weak_combinatorics(a);
      if (!g.degree_counts.empty()) EXPECT_EQ(w.degree_counts, g.degree_counts);
      if (!g.singularities.empty()) EXPECT_EQ(w.sing_counts, g.singularities);
    }
  }
}

TEST(Catalog, ResolutionCertificates) {
  for (const auto& e : catalog()) {
    SyzygyAnalyzer an(e.build().product());
    EXPECT_TRUE(an.certificate(3)) << e.name;
  }
}

TEST(Catalog, TjurinaEqualsMilnorSum) {
  for (const auto& e : catalog()) {
    SCOPED_TRACE(e.name);
    Arrangement a = e.build();
    SingularLocus locus = singular_points(a);
    long mu = 0, tau = 0;
    bool qh = true;
    for (const auto& p : locus.points) {
      mu += p.local.mu * p.count();
      tau += p.local.tau * p.count();
      qh = qh && p.local.quasi_homogeneous;
    }
    EXPECT_EQ(qh, e.quasi_homogeneous);
    long global = total_tjurina(a.product());
    EXPECT_EQ(tau, global);
    if (e.quasi_homogeneous) EXPECT_EQ(mu, global);
    else EXPECT_GT(mu, global);
  }
}

TEST(Catalog, CyclicModelCounts) {
  for (int n = 3; n <= 30; ++n) {
    // brute force over unordered distinct triples
    long brute = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          if ((a + b + c) % n == 0) ++brute;
    CyclicModel m = cyclic_model(n);
    EXPECT_EQ(static_cast<long>(m.triples.size()), brute) << n;
    EXPECT_EQ(orchard_triple_count(n), brute) << n;
    EXPECT_EQ(static_cast<long>(m.doubles.size()), static_cast<long>(n) * (n - 1) / 2 - 3 * brute) << n;
  }
  CyclicModel m3 = cyclic_model(3);
  ASSERT_EQ(m3.triples.size(), 1u);
  EXPECT_EQ(m3.triples[0], (std::array<int, 3>{0, 1, 2}));
  EXPECT_EQ(cyclic_model(10).triples.size(), 12u);
  EXPECT_EQ(cyclic_model(12).triples.size(), 19u);
}

TEST(Catalog, OrchardMatchesCyclicModel) {
  for (const char* name : {"orchard10-1", "orchard10-2", "orchard12-1", "orchard12-2"}) {
    Arrangement a = catalog_entry(name).build();
    EXPECT_TRUE(levi_isomorphic(levi_graph(a), cyclic_model(static_cast<int>(a.size())).levi())) << name;
  }
}

TEST(Catalog, OrchardValidation) {
  auto q = [](long v) { return QQ.from_int(v); };
  EXPECT_EQ(code_of([&] { orchard10(q(1), q(1)); }), ErrorCode::DegeneratePoint);
  EXPECT_EQ(code_of([&] { orchard10(QQ.from_rational(Rational(1, 2)), q(0)); }), ErrorCode::DegeneratePoint);
  EXPECT_EQ(code_of([&] { orchard10(q(5), q(4)); }), ErrorCode::ConstraintViolated);
  NumberField k5 = quadratic("r^2-r-1");
  for (const char* w : {"r", "1-r"})
    EXPECT_EQ(code_of([&] { orchard10(k5.zero(), parse_field_element(w, k5)); }), ErrorCode::DegeneratePoint) << w;

  EXPECT_EQ(code_of([&] { orchard12(q(1), q(1)); }), ErrorCode::ConstraintViolated);
  EXPECT_EQ(code_of([&] { orchard12(q(0), q(2)); }), ErrorCode::ConstraintViolated);
  EXPECT_EQ(code_of([&] { orchard12(q(0), q(0)); }), ErrorCode::ConstraintViolated);
  EXPECT_EQ(code_of([&] { orchard12(q(-3), q(2)); }), ErrorCode::ConstraintViolated);
  NumberField k3 = quadratic("r^2-r+1");
  FieldElement t = k3.generator();
  EXPECT_EQ(code_of([&] { orchard12(t * (k3.from_int(2) - t), t); }), ErrorCode::ConstraintViolated);

  // other rational points on the conic either validate or are rejected structurally
  int valid = 0;
  for (long tv = -6; tv <= 8; ++tv) {
    if (tv == 2) continue;
    // st - 2s - t^2 + t + 1 = 0  =>  s = (t^2 - t - 1) / (t - 2)
    Rational sq(tv * tv - tv - 1, tv - 2);
    sq.canonicalize();
    FieldElement s = QQ.from_rational(sq);
    try {
      Arrangement a = orchard10(s, q(tv));
      EXPECT_EQ(a.size(), 10u);
      ++valid;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::DegeneratePoint || e.code() == ErrorCode::DuplicateLines) << tv;
    }
  }
  EXPECT_GT(valid, 5);
}

TEST(Catalog, FullMonomial) {
  for (int n = 2; n <= 6; ++n) {
    Arrangement a = full_monomial(n);
    EXPECT_EQ(a.size(), static_cast<std::size_t>(3 * n + 3)) << n;
    EXPECT_TRUE(a.is_line_arrangement());
    EXPECT_TRUE(is_reduced(a.product())) << n;
  }
  EXPECT_EQ(full_monomial(5).field().degree(), 4);
  EXPECT_EQ(code_of([] { full_monomial(7); }), ErrorCode::DegreeUnsupported);
  EXPECT_EQ(code_of([] { full_monomial(1); }), ErrorCode::DegreeUnsupported);
}

TEST(Catalog, TriangularPairRemovals) {
  auto [l1, l2] = triangular_pair();
  EXPECT_EQ(l1.size(), 15u);
  EXPECT_EQ(l2.size(), 15u);
  EXPECT_TRUE(is_reduced(l1.product()));
  EXPECT_TRUE(is_reduced(l2.product()));
  // every remaining line is a line of the full arrangement
  Arrangement f6 = full_monomial(6);
  for (const auto& c : l1.components()) {
    bool found = false;
    for (const auto& d : f6.components()) found = found || d.poly.proportional_to(c.poly);
    EXPECT_TRUE(found);
  }
}
