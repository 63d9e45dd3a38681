// One PASS/FAIL line per acceptance criterion.
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "syzcurve/catalog.hpp"
#include "syzcurve/errors.hpp"
#include "syzcurve/parse.hpp"
#include "test_util.hpp"

using namespace syzcurve;
using namespace syzcurve::testing;

namespace {

const NumberField QQ = NumberField::rationals();

HomogPoly P(const std::string& s, const NumberField& k = QQ) { return parse_poly(s, k); }

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <typename A, typename B>
  void eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << show(got) << ", want " << show(want);
      failures.push_back(os.str());
    }
  }
  static std::string show(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  }
  static std::string show(const std::string& s) { return s; }
  static std::string show(const char* s) { return s; }
  static std::string show(const HomogPoly& p) { return p.to_string(); }
  static std::string show(const WeakCombinatorics& w) { return w.to_string(); }
  static std::string show(CurveClass c) {
    CurveAnalysis a;
    a.cls = c;
    return a.class_name();
  }
  static std::string show(Subtype s) { return subtype_name(s); }
  template <typename T>
  static std::string show(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }
};

CurveAnalysis entry_analysis(const std::string& name) { return classify(catalog_entry(name).build().product()); }

std::map<std::string, int> triangular_sing() { return {{"A_1", 24}, {"D_4", 12}, {"Ordinary(6)", 3}}; }

void c1(Check& c) {
  HomogPoly f = P("x*y*z");
  SyzygyAnalyzer a(f);
  CurveAnalysis r = a.classify();
  c.eq(r.cls, CurveClass::Free, "class");
  c.eq(r.exponents(), std::vector<int>{1, 1}, "exponents");
  c.eq(r.tau, 3L, "tau");
  c.eq(total_tjurina(f), 3L, "stabilized tau");
  HomogPoly zero(QQ, 1);
  SaitoResult s = saito_check(f, vec(P("x"), P("-y"), zero), vec(P("x"), zero, P("-z")));
  c.expect(s.passes, "Saito criterion on (x,-y,0), (x,0,-z)");
  c.eq(s.determinant, P("3*x*y*z"), "Saito determinant");
  const auto& g = a.generators();
  c.expect(g.size() == 2 && saito_check(f, g[0], g[1]).passes, "Saito criterion on computed generators");
}

void c2(Check& c) {
  c.eq(mdr(P("x*y")), 0, "mdr(xy)");
  HomogPoly g = P("(x^2-y*z)*(x^2+z^2-y*z)");
  CurveAnalysis r = classify(g);
  c.eq(r.mdr, 1, "mdr(G)");
  c.eq(r.cls, CurveClass::Free, "class of G");
  c.eq(r.exponents(), std::vector<int>{1, 2}, "exponents of G");
  c.eq(r.resolution.relation_degrees, std::vector<int>{}, "relations of G");
  c.expect(is_free(g).holds, "is_free(G)");
}

void c3(Check& c) {
  HomogPoly f1 = P("x*y*(y^2+x*z)*(y^2+x^2+2*x*z)"), f2 = P("x*(x-13*y)*(y^2+x*z)*(y^2+x^2+2*x*z)");
  CurveAnalysis a1 = classify(f1), a2 = classify(f2);
  c.eq(a1.cls, CurveClass::Free, "CL1 class");
  c.eq(a1.exponents(), std::vector<int>{2, 3}, "CL1 exponents");
  c.eq(a2.cls, CurveClass::NearlyFree, "CL2 class");
  c.eq(a2.exponents(), std::vector<int>{3, 3, 3}, "CL2 exponents");
  ProjPoint p = {QQ.zero(), QQ.zero(), QQ.one()};
  LocalInvariants l1 = local_invariants_at(f1, p), l2 = local_invariants_at(f2, p);
  c.eq(l1.mu, 15L, "CL1 mu at (0:0:1)");
  c.eq(l1.tau, 15L, "CL1 tau at (0:0:1)");
  c.expect(l2.mu != l2.tau, "CL2 mu != tau at (0:0:1)");
}

void c4(Check& c) {
  auto [l1, l2] = triangular_pair();
  c.eq(l1.field().minpoly_string(), "e^2 - e + 1", "L1 field");
  c.eq(l2.field().minpoly_string(), "v^4 + v^3 + v^2 + v + 1", "L2 field");
  CurveAnalysis a1 = classify(l1.product()), a2 = classify(l2.product());
  c.eq(a1.cls, CurveClass::Free, "L1 class");
  c.eq(a1.exponents(), std::vector<int>{7, 7}, "L1 exponents");
  c.eq(a2.cls, CurveClass::NearlyFree, "L2 class");
  c.eq(a2.exponents(), std::vector<int>{6, 9, 9}, "L2 exponents");
  WeakCombinatorics w1 = weak_combinatorics(l1), w2 = weak_combinatorics(l2);
  c.eq(w1, w2, "weak-combinatorics equal");
  c.eq(w1.degree_counts, std::vector<int>{15}, "15 lines");
  c.expect(w1.sing_counts == triangular_sing(), "(15; 24,12,0,0,3): got " + w1.to_string());
  PairVerdict v = pair_verdict(w1 == w2, "weak-combinatorics", a1, a2, PairVariant::Mdr);
  c.expect(v.is_pair, "weak Ziegler verdict: " + v.reason);
  c.eq(a1.mdr, 7, "mdr L1");
  c.eq(a2.mdr, 6, "mdr L2");
}

void c5(Check& c) {
  Arrangement cl1 = catalog_entry("st-1").build(), cl2 = catalog_entry("st-2").build();
  c.eq(cl1.field().minpoly_string(), "i^2 + 1", "CL1 field");
  CurveAnalysis a1 = classify(cl1.product()), a2 = classify(cl2.product());
  c.eq(a1.cls, CurveClass::Free, "CL1 class");
  c.eq(a1.exponents(), std::vector<int>{6, 6}, "CL1 exponents");
  c.eq(a2.cls, CurveClass::MSyzygy, "CL2 class");
  c.eq(a2.m, 4, "CL2 m");
  c.eq(a2.exponents(), std::vector<int>{7, 7, 7, 7}, "CL2 exponents");
  // the quintuple points of the conic-only arrangements
  HomogPoly c1 = catalog_entry("st-conics-1").build().product();
  HomogPoly c2 = catalog_entry("st-conics-2").build().product();
  auto check_point = [&](const HomogPoly& f, long a, long b, long d, const std::string& what) {
    LocalInvariants l = local_invariants_at(f, {QQ.from_int(a), QQ.from_int(b), QQ.from_int(d)});
    c.eq(l.multiplicity, 5, what + " multiplicity");
    c.eq(l.mu, 16L, what + " mu");
    c.eq(l.tau, 15L, what + " tau");
    c.expect(!l.quasi_homogeneous, what + " not quasi-homogeneous");
  };
  NumberField qi = c1.field();
  {
    LocalInvariants l = local_invariants_at(c1, {qi.zero(), qi.zero(), qi.one()});
    c.eq(l.mu, 16L, "C1 (0:0:1) mu");
    c.eq(l.tau, 15L, "C1 (0:0:1) tau");
    c.expect(!l.quasi_homogeneous, "C1 (0:0:1) not quasi-homogeneous");
  }
  check_point(c2, 0, 0, 1, "C2 (0:0:1)");
  check_point(c2, 1, 0, 1, "C2 (1:0:1)");
  check_point(c2, 0, 1, 1, "C2 (0:1:1)");
}

void c6(Check& c) {
  Arrangement q1 = catalog_entry("wzz-1").build(), q2 = catalog_entry("wzz-2").build();
  WeakCombinatorics w1 = weak_combinatorics(q1), w2 = weak_combinatorics(q2);
  std::map<std::string, int> sing = {{"A_1", 12}, {"D_4", 3}, {"X_9", 1}};
  c.expect(w1.sing_counts == sing, "CL1 singularities " + w1.to_string());
  c.eq(w1.degree_counts, std::vector<int>{6, 1}, "CL1 component degrees");
  c.eq(w1, w2, "weak-combinatorics equal");
  CurveAnalysis a1 = classify(q1.product()), a2 = classify(q2.product());
  c.eq(a1.resolution.display(), "0 -> S(-7)+S(-6) -> S(-6)+S(-5)^2+S(-4) -> AR(f)", "CL1 resolution");
  c.eq(a2.resolution.display(), "0 -> S(-7) -> S(-5)^2+S(-4) -> AR(f)", "CL2 resolution");
  c.eq(a1.subtype, Subtype::TwoB, "CL1 subtype");
  c.eq(a2.subtype, Subtype::TwoA, "CL2 subtype");
  c.expect(pair_verdict(w1 == w2, "weak-combinatorics", a1, a2, PairVariant::ArModule).is_pair, "weak Ziegler (AR)");
  // sum of (m-1)^2 over ordinary points, tacnode-free
  long oracle = 0;
  for (const auto& [key, n] : w1.sing_counts) {
    int m = key == "A_1" ? 2 : key == "D_4" ? 3 : 4;
    oracle += static_cast<long>(n) * (m - 1) * (m - 1);
  }
  c.eq(a1.tau, oracle, "CL1 tau");
  c.eq(a2.tau, oracle, "CL2 tau");
  c.eq(oracle, 33L, "oracle tau");
}

void orchard_common(Check& c, const std::string& n1, const std::string& n2, const std::string& r1,
                    const std::string& r2, long triples) {
  Arrangement a = catalog_entry(n1).build(), b = catalog_entry(n2).build();
  CurveAnalysis x = classify(a.product()), y = classify(b.product());
  c.eq(x.resolution.display(), r1, n1 + " resolution");
  c.eq(y.resolution.display(), r2, n2 + " resolution");
  c.eq(x.subtype, Subtype::TwoA, n1 + " subtype");
  c.eq(y.subtype, Subtype::TwoB, n2 + " subtype");
  SingularLocus la = singular_points(a), lb = singular_points(b);
  bool iso = levi_isomorphic(levi_graph(la, a), levi_graph(lb, b));
  c.expect(iso, "lattice-isomorphic");
  c.expect(pair_verdict(iso, "intersection lattice", x, y, PairVariant::ArModule).is_pair, "Ziegler verdict");
  long n = static_cast<long>(a.size()), t = 0, d = 0;
  for (const auto& p : la.points) (p.incident.size() == 3 ? t : d) += 1;
  c.eq(t, triples, "triple count");
  c.eq(t, orchard_triple_count(static_cast<int>(n)), "triple count vs formula");
  c.eq(d, n * (n - 1) / 2 - 3 * triples, "double count");
}

void c7(Check& c) {
  orchard_common(c, "orchard10-1", "orchard10-2", "0 -> S(-8) -> S(-6)^2+S(-5) -> AR(f)",
                 "0 -> S(-8)+S(-7) -> S(-7)+S(-6)^2+S(-5) -> AR(f)", 12);
}

void c8(Check& c) {
  orchard_common(c, "orchard12-1", "orchard12-2", "0 -> S(-10) -> S(-8)+S(-7)+S(-6) -> AR(f)",
                 "0 -> S(-10)+S(-9) -> S(-9)+S(-8)+S(-7)+S(-6) -> AR(f)", 19);
}

void c9(Check& c) {
  Arrangement a = catalog_entry("dual-hesse").build();
  CurveAnalysis r = classify(a.product());
  c.eq(r.cls, CurveClass::Free, "class");
  c.eq(r.exponents(), std::vector<int>{4, 4}, "exponents");
  c.eq(r.tau, 48L, "tau");
  int triples = 0, nodes = 0;
  for (const auto& p : singular_points(a).points) {
    if (p.incident.size() == 3) ++triples;
    if (p.incident.size() == 2) ++nodes;
  }
  c.eq(triples, 12, "triple points");
  c.eq(nodes, 0, "nodes");
}

void c10(Check& c) {
  std::mt19937 rng(20240611);
  NumberField q5 = NumberField::adjoin_root("a", parse_univariate("a^2-5", "a"));
  // Euler relation
  for (int i = 0; i < 120; ++i) {
    const NumberField& k = i % 2 ? q5 : QQ;
    int d = 1 + static_cast<int>(rng() % 6);
    HomogPoly f = random_poly(k, d, rng);
    HomogPoly lhs = HomogPoly::variable(k, 0) * f.partial(0) + HomogPoly::variable(k, 1) * f.partial(1) +
                    HomogPoly::variable(k, 2) * f.partial(2);
    c.expect(lhs == k.from_int(d) * f, "Euler relation for " + f.to_string());
  }
  // Koszul membership
  for (int i = 0; i < 100; ++i) {
    HomogPoly f = random_arrangement(rng, 2 + i % 3, i % 3 == 0);
    const int d = f.degree();
    HomogPoly fx = f.partial(0), fy = f.partial(1), fz = f.partial(2), zero(QQ, d - 1);
    std::vector<SyzygyVector> kz = {vec(fy, -fx, zero), vec(fz, zero, -fx), vec(zero, fz, -fy)};
    SyzygyAnalyzer a(f);
    const auto& gens = a.generators();
    bool ok = true;
    for (const auto& g : gens) ok = ok && g.is_syzygy_of(f);
    std::size_t base = span_rank(gens, d - 1);
    ok = ok && base == a.ar_dimension(d - 1) && span_rank(gens, d - 1, kz) == base;
    c.expect(ok, "Koszul membership for " + f.to_string());
  }
  // rank/nullity
  for (int i = 0; i < 100; ++i) {
    const NumberField& k = i % 2 ? q5 : QQ;
    std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
    Matrix m = random_matrix(k, rows, cols, rng, static_cast<int>(rng() % (std::min(rows, cols) + 1)));
    auto ker = kernel_basis(m);
    bool ok = ker.size() + rank(m) == cols && rank(m) == naive_rank(m);
    for (const auto& v : ker)
      for (const auto& x : m.apply(v)) ok = ok && x.is_zero();
    c.expect(ok, "rank/nullity");
  }
  // resolution certificates and local/global Tjurina for every catalog curve
  for (const auto& e : catalog()) {
    Arrangement a = e.build();
    SyzygyAnalyzer an(a.product());
    c.expect(an.certificate(3), "certificate for " + e.name);
    if (!e.quasi_homogeneous) continue;
    long mu = 0;
    for (const auto& p : singular_points(a).points) mu += p.local.mu * p.count();
    c.eq(mu, an.tau(), "tau = sum of mu for " + e.name);
  }
  // projective invariance
  for (int i = 0; i < 100; ++i) {
    HomogPoly f = random_arrangement(rng, 2 + i % 3, i % 4 == 0);
    SyzygyAnalyzer a(f), b(f.substitute_linear(random_invertible(QQ, rng)));
    c.expect(a.mdr() == b.mdr() && a.tau() == b.tau() && a.resolution().generator_degrees == b.resolution().generator_degrees,
             "projective invariance for " + f.to_string());
  }
  // cyclic model counts
  for (int n = 3; n <= 30; ++n) {
    long brute = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int d = b + 1; d < n; ++d)
          if ((a + b + d) % n == 0) ++brute;
    c.eq(static_cast<long>(cyclic_model(n).triples.size()), brute, "cyclic model n=" + std::to_string(n));
    c.eq(orchard_triple_count(n), brute, "triple formula n=" + std::to_string(n));
  }
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Check&)> run;
  bool extended = false;
};

}  // namespace

int main(int argc, char** argv) {
  bool skip_extended = false;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--skip-extended")) skip_extended = true;
    else if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only = std::atoi(argv[++i]);
    else {
      std::cerr << "usage: " << argv[0] << " [--skip-extended] [--only N]\n";
      return 2;
    }
  }
  const std::vector<Criterion> criteria = {
      {1, "triangle xyz: Free (1,1), Saito determinant 3xyz, tau 3", c1},
      {2, "mdr(xy) = 0, two conics G: mdr 1 and free", c2},
      {3, "naive Terao pair: Free (2,3) / NearlyFree (3,3,3), local data at (0:0:1)", c3},
      {4, "triangular pair: Free (7,7) / NearlyFree (6,9,9), weak Ziegler pair [extended]", c4, true},
      {5, "conic-line pair over Q(i): Free (6,6) / 4-syzygy (7,7,7,7), quintuple points", c5},
      {6, "conic plus six lines pair: resolutions, 2B/2A, tau 33, weak Ziegler pair", c6},
      {7, "orchard n=10: 2A/2B resolutions, Ziegler pair, 12 triples, 9 doubles", c7},
      {8, "orchard n=12: 2A/2B resolutions, Ziegler pair, 19 triples", c8},
      {9, "dual Hesse: Free (4,4), tau 48, 12 triple points, no nodes", c9},
      {10, "property suites", c10},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    if (only && cr.id != only) continue;
    if (cr.extended && skip_extended) {
      std::cout << "SKIP " << cr.id << ": " << cr.title << "\n";
      continue;
    }
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (c.failures.empty() ? "PASS " : "FAIL ") << cr.id << ": " << cr.title << " (" << secs << " s)\n";
    for (const auto& f : c.failures) std::cout << "    " << f << "\n";
    if (!c.failures.empty()) ++failed;
    std::cout.flush();
  }
  return failed ? 1 : 0;
}
