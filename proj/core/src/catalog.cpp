#include "syzcurve/catalog.hpp"

#include <algorithm>
#include <set>

#include "syzcurve/errors.hpp"
#include "syzcurve/parse.hpp"

namespace syzcurve {

namespace {

NumberField field(const std::string& g, const std::string& minpoly) {
  return NumberField::adjoin_root(g, parse_univariate(minpoly, g));
}

NumberField zeta_field(int n) {
  switch (n) {
    case 2: return NumberField::rationals();
    case 3: return field("w", "w^2+w+1");
    case 4: return field("i", "i^2+1");
    case 5: return field("v", "v^4+v^3+v^2+v+1");
    case 6: return field("e", "e^2-e+1");
  }
  throw Error(ErrorCode::DegreeUnsupported, "full monomial arrangement needs 2 <= n <= 6");
}

FieldElement zeta(const NumberField& k, int n) { return n == 2 ? k.from_int(-1) : k.generator(); }

std::vector<HomogPoly> polys(const std::vector<std::string>& src, const NumberField& k) {
  std::vector<HomogPoly> out;
  for (const auto& s : src) out.push_back(parse_poly(s, k));
  return out;
}

Arrangement arr(const std::vector<std::string>& src, const NumberField& k = NumberField::rationals()) {
  return Arrangement(polys(src, k));
}

std::vector<HomogPoly> monomial_lines(int n, const NumberField& k) {
  const FieldElement z = zeta(k, n);
  std::vector<HomogPoly> out = {HomogPoly::variable(k, 0), HomogPoly::variable(k, 1), HomogPoly::variable(k, 2)};
  const FieldElement one = k.one(), zero = k.zero();
  for (int pair = 0; pair < 3; ++pair) {
    for (int j = 0; j < n; ++j) {
      FieldElement c = -z.pow(static_cast<unsigned>(j));
      // x - c y, y - c z, x - c z
      if (pair == 0) out.push_back(HomogPoly::linear(one, c, zero));
      if (pair == 1) out.push_back(HomogPoly::linear(zero, one, c));
      if (pair == 2) out.push_back(HomogPoly::linear(one, zero, c));
    }
  }
  return out;
}

Arrangement remove_lines(const std::vector<HomogPoly>& lines, const std::vector<HomogPoly>& drop) {
  std::vector<HomogPoly> keep;
  for (const auto& l : lines)
    if (std::none_of(drop.begin(), drop.end(), [&](const HomogPoly& d) { return d.proportional_to(l); }))
      keep.push_back(l);
  if (keep.size() + drop.size() != lines.size()) throw Error(ErrorCode::InvalidArgument, "removed line not present");
  return Arrangement(keep);
}

void lift_pair(FieldElement& s, FieldElement& t) {
  if (s.field() == t.field()) return;
  if (s.is_rational()) s = t.field().from_rational(s.to_rational());
  else if (t.is_rational()) t = s.field().from_rational(t.to_rational());
  else throw Error(ErrorCode::MixedFields, "s and t lie in different fields");
}

HomogPoly lin(const FieldElement& a, const FieldElement& b, const FieldElement& c) { return HomogPoly::linear(a, b, c); }

// Shared structural validation of an orchard realization.
Arrangement orchard_checked(const std::vector<HomogPoly>& lines, int n) {
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (lines[i].is_zero()) throw Error(ErrorCode::DegeneratePoint, "factor " + std::to_string(i + 1) + " vanishes");
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (lines[i].proportional_to(lines[j]))
        throw Error(ErrorCode::DuplicateLines,
                    "factors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
  Arrangement a(lines);
  long triples = 0;
  for (const auto& p : singular_points(a).points) {
    if (p.incident.size() > 3) throw Error(ErrorCode::DegeneratePoint, "realization has a point of multiplicity > 3");
    if (p.incident.size() == 3) ++triples;
  }
  if (triples != orchard_triple_count(n))
    throw Error(ErrorCode::DegeneratePoint, "realization has " + std::to_string(triples) + " triple points, expected " +
                                                std::to_string(orchard_triple_count(n)));
  return a;
}

Golden golden(std::optional<CurveClass> cls, std::vector<int> exps, std::optional<std::vector<int>> rels = std::nullopt) {
  Golden g;
  g.cls = cls;
  g.exponents = std::move(exps);
  if (!g.exponents.empty()) {
    g.m = static_cast<int>(g.exponents.size());
    g.mdr = g.exponents.front();
  }
  g.relations = std::move(rels);
  if (!g.relations && cls == CurveClass::Free) g.relations = std::vector<int>{};
  return g;
}

Golden with(Golden g, std::optional<long> tau, std::vector<int> degs, std::map<std::string, int> sing,
            std::optional<Subtype> sub = std::nullopt) {
  g.tau = tau;
  g.degree_counts = std::move(degs);
  g.singularities = std::move(sing);
  g.subtype = sub;
  return g;
}

const char* kStConics1[] = {"(x-3*z)^2+(y-4*z)^2-25*z^2", "(x-4*z)^2+(y-3*z)^2-25*z^2", "(x+3*z)^2+(y-4*z)^2-25*z^2",
                            "(x+4*z)^2+(y-3*z)^2-25*z^2", "(x-5*z)^2+y^2-25*z^2"};
const char* kStConics2[] = {"x^2+8*y^2+21*x*y-x*z-8*y*z", "x^2+5*y^2+13*x*y-x*z-5*y*z", "x^2+9*y^2-4*x*y-x*z-9*y*z",
                            "x^2+11*y^2+x*y-x*z-11*y*z", "x^2+17*y^2-5*x*y-x*z-17*y*z"};
const char* kWzzConic = "-24*x^2-23*y^2+76*y*z+195*z^2";

std::vector<std::string> st(bool first, bool with_lines) {
  std::vector<std::string> out;
  for (const char* c : first ? kStConics1 : kStConics2) out.emplace_back(c);
  if (with_lines) {
    if (first) out.insert(out.end(), {"z", "x-i*y", "x+i*y"});
    else out.insert(out.end(), {"x", "y", "x+y-z"});
  }
  return out;
}

std::vector<CatalogEntry> build_catalog() {
  using C = CurveClass;
  const NumberField QQ = NumberField::rationals();
  std::vector<CatalogEntry> c;
  auto add = [&](std::string name, std::string desc, std::function<Arrangement()> b, Golden g, bool qh,
                 bool ext = false) {
    CatalogEntry e;
    e.name = std::move(name);
    e.description = std::move(desc);
    e.build = std::move(b);
    e.expected = std::move(g);
    e.quasi_homogeneous = qh;
    e.extended = ext;
    c.push_back(std::move(e));
  };
  add("triangle", "three coordinate lines xyz", [] { return arr({"x", "y", "z"}); },
      with(golden(C::Free, {1, 1}), 3, {3}, {{"A_1", 3}}), true);
  add("two-lines", "two lines xy", [] { return arr({"x", "y"}); },
      with(golden(C::Free, {0, 1}), 1, {2}, {{"A_1", 1}}), true);
  add("dual-hesse", "(x^3-y^3)(y^3-z^3)(x^3-z^3) over Q(w), w^2+w+1=0",
      [] { return remove_lines(monomial_lines(3, zeta_field(3)), polys({"x", "y", "z"}, zeta_field(3))); },
      with(golden(C::Free, {4, 4}), 48, {9}, {{"D_4", 12}}), true);
  add("two-conics-one-point", "(x^2-yz)(x^2+z^2-yz)", [] { return arr({"x^2-y*z", "x^2+z^2-y*z"}); },
      with(golden(C::Free, {1, 2}), 7, {0, 2}, {{"A_7", 1}}), true);
  add("two-tangent-conics", "two conics with two nodes and one tacnode", [] { return arr({"x^2-y*z", "x^2-y^2+3*y*z"}); },
      with(golden(std::nullopt, {}), 5, {0, 2}, {{"A_1", 2}, {"A_3", 1}}), true);
  add("tangent-conic-line", "smooth conic and a tangent line", [] { return arr({"x^2-y*z", "y"}); },
      with(golden(C::Free, {1, 1}), 3, {1, 1}, {{"A_3", 1}}), true);
  add("conic-two-tangents", "smooth conic and two tangent lines", [] { return arr({"x^2-y*z", "y", "z"}); },
      with(golden(C::Free, {1, 2}), 7, {2, 1}, {{"A_1", 1}, {"A_3", 2}}), true);
  add("conic-in-triangle", "smooth conic inscribed in a triangle",
      [] { return arr({"x^2-y*z", "y", "z", "2*x-y-z"}); },
      with(golden(C::Free, {2, 2}), 12, {3, 1}, {{"A_1", 3}, {"A_3", 3}}), true);
  add("conic-around-triangle", "smooth conic circumscribed about a triangle",
      [] { return arr({"x", "y", "z", "x*y+y*z+x*z"}); },
      with(golden(C::Free, {2, 2}), 12, {3, 1}, {{"D_4", 3}}), true);
  add("triangle-two-conics", "triangle with an inscribed and a circumscribed conic",
      [] { return arr({"x", "y", "z", "x^2+y^2+z^2-2*x*y-2*y*z-2*x*z", "x*y+y*z+x*z"}); },
      with(golden(C::Free, {3, 3}), 27, {3, 2}, {{"A_3", 5}, {"D_4", 3}}), true);
  add("naive-terao-1", "xy(y^2+xz)(y^2+x^2+2xz)", [] { return arr({"x", "y", "y^2+x*z", "y^2+x^2+2*x*z"}); },
      golden(C::Free, {2, 3}), true);
  add("naive-terao-2", "x(x-13y)(y^2+xz)(y^2+x^2+2xz)",
      [] { return arr({"x", "x-13*y", "y^2+x*z", "y^2+x^2+2*x*z"}); }, golden(C::NearlyFree, {3, 3, 3}), false);
  add("st-conics-1", "five conics through (0:0:1) and the circular points, over Q(i)",
      [] { return arr(st(true, false), field("i", "i^2+1")); },
      with(golden(std::nullopt, {}), std::nullopt, {0, 5}, {}), false);
  add("st-conics-2", "five conics through (0:0:1), (1:0:1), (0:1:1)", [] { return arr(st(false, false)); },
      with(golden(std::nullopt, {}), std::nullopt, {0, 5}, {}), false);
  add("st-1", "five conics and three lines over Q(i)", [] { return arr(st(true, true), field("i", "i^2+1")); },
      golden(C::Free, {6, 6}), false);
  {
    Golden g = golden(C::MSyzygy, {7, 7, 7, 7});
    g.subtype = Subtype::TwoB;
    add("st-2", "five conics and three lines, perturbed", [] { return arr(st(false, true)); }, g, false);
  }
  const std::map<std::string, int> wzz_sing = {{"A_1", 12}, {"D_4", 3}, {"X_9", 1}};
  add("wzz-1", "conic and six lines, type 2B",
      [] { return arr({kWzzConic, "y-3*x-5*z", "y+3*x-5*z", "y+z", "y-3*z", "x", "x+y+z"}); },
      with(golden(C::MSyzygy, {4, 5, 5, 6}, std::vector<int>{6, 7}), 33, {6, 1}, wzz_sing, Subtype::TwoB), true);
  add("wzz-2", "conic and six lines, type 2A",
      [] { return arr({kWzzConic, "y-2*x-3*z", "y+2*x-3*z", "y+z", "y-3*z", "x", "x+y+z"}); },
      with(golden(C::MSyzygy, {4, 5, 5}, std::vector<int>{7}), 33, {6, 1}, wzz_sing, Subtype::TwoA), true);
  const std::map<std::string, int> tri_sing = {{"A_1", 24}, {"D_4", 12}, {"Ordinary(6)", 3}};
  add("triangular-1", "full monomial n=6 minus six lines, over Q(e), e^2-e+1=0",
      [] { return triangular_pair().first; }, with(golden(C::Free, {7, 7}), 147, {15}, tri_sing), true);
  add("triangular-2", "full monomial n=5 minus three lines, over Q(v), v^4+v^3+v^2+v+1=0",
      [] { return triangular_pair().second; },
      with(golden(C::NearlyFree, {6, 9, 9}, std::vector<int>{10}), 147, {15}, tri_sing), true, true);
  const std::map<std::string, int> o10 = {{"A_1", 9}, {"D_4", 12}};
  const std::map<std::string, int> o12 = {{"A_1", 9}, {"D_4", 19}};
  add("orchard10-1", "orchard arrangement n=10 at (s,t)=(5,3)",
      [QQ] { return orchard10(QQ.from_int(5), QQ.from_int(3)); },
      with(golden(C::MSyzygy, {5, 6, 6}, std::vector<int>{8}), 57, {10}, o10, Subtype::TwoA), true);
  add("orchard10-2", "orchard arrangement n=10 at ((5r+15)/4, r+3), r^2=5",
      [] {
        NumberField k = field("r", "r^2-5");
        return orchard10(parse_field_element("(5*r+15)/4", k), parse_field_element("r+3", k));
      },
      with(golden(C::MSyzygy, {5, 6, 6, 7}, std::vector<int>{7, 8}), 57, {10}, o10, Subtype::TwoB), true);
  add("orchard12-1", "orchard arrangement n=12 at (s,t)=(-3,3)",
      [QQ] { return orchard12(QQ.from_int(-3), QQ.from_int(3)); },
      with(golden(C::MSyzygy, {6, 7, 8}, std::vector<int>{10}), 85, {12}, o12, Subtype::TwoA), true);
  add("orchard12-2", "orchard arrangement n=12 at ((1-r)(r-3), r-1), r^2=3",
      [] {
        NumberField k = field("r", "r^2-3");
        return orchard12(parse_field_element("(1-r)*(r-3)", k), parse_field_element("r-1", k));
      },
      with(golden(C::MSyzygy, {6, 7, 8, 9}, std::vector<int>{9, 10}), 85, {12}, o12, Subtype::TwoB),
      true);
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw Error(ErrorCode::UnknownName, "no catalog entry named '" + name + "'");
}

Arrangement full_monomial(int n) { return Arrangement(monomial_lines(n, zeta_field(n))); }

std::pair<Arrangement, Arrangement> triangular_pair() {
  NumberField e6 = zeta_field(6), z5 = zeta_field(5);
  Arrangement l1 = remove_lines(monomial_lines(6, e6), polys({"x-z", "x-e*z", "y-z", "y-e*z", "x-e^2*y", "x-e^4*y"}, e6));
  Arrangement l2 = remove_lines(monomial_lines(5, z5), polys({"x-z", "x-y", "y-z"}, z5));
  return {l1, l2};
}

Arrangement orchard10(const FieldElement& s0, const FieldElement& t0) {
  FieldElement s = s0, t = t0;
  lift_pair(s, t);
  const NumberField k = s.field();
  const FieldElement one = k.one(), zero = k.zero();
  if (!(s * t - k.from_int(2) * s - t * t + t + one).is_zero())
    throw Error(ErrorCode::ConstraintViolated, "st - 2s - t^2 + t + 1 != 0");
  if ((s == k.from_rational(Rational(1, 2)) && t.is_zero()) || (s == one && t == one) ||
      (s.is_zero() && (t * t - t - one).is_zero()))
    throw Error(ErrorCode::DegeneratePoint, "(s,t) is an excluded degenerate point");
  std::vector<HomogPoly> lines = {
      lin(one, zero, zero),
      lin(zero, one, zero),
      lin(zero, zero, one),
      lin(t, s, t),
      lin(zero, one, one),
      lin(one, one, one),
      lin(one, s, t),
      lin(-s + t + one, zero, -s + t),
      lin(one, s - t, zero),
      lin(-s * t * t + s * t + t * t * t - t, -s * t + t * t, -s * t * t + t * t * t)};
  return orchard_checked(lines, 10);
}

Arrangement orchard12(const FieldElement& s0, const FieldElement& t0) {
  FieldElement s = s0, t = t0;
  lift_pair(s, t);
  const NumberField k = s.field();
  const FieldElement one = k.one(), zero = k.zero(), two = k.from_int(2);
  if (s != t * (two - t)) throw Error(ErrorCode::ConstraintViolated, "s != t(2-t)");
  if (t.is_zero() || t == one || t == two) throw Error(ErrorCode::ConstraintViolated, "t must avoid 0, 1, 2");
  if ((t * t - t + one).is_zero() || (t * t - two * t + two).is_zero())
    throw Error(ErrorCode::ConstraintViolated, "t is a root of r^2-r+1 or r^2-2r+2");
  const FieldElement s2 = s * s, s3 = s2 * s, t2 = t * t, t3 = t2 * t;
  std::vector<HomogPoly> lines = {
      lin(one, zero, zero),
      lin(zero, one, zero),
      lin(zero, zero, one),
      lin(one, one, one),
      lin(one, one, t),
      lin(t, s, t),
      lin(zero, one, one),
      lin(one, s - t, zero),
      lin(-s + t + one, zero, -s + t),
      lin(one, s, t),
      lin(-s * t2 + s * t + t3 - t, -s * t + t2, -s * t2 + t3),
      lin(s2 * t - s * t2 - two * s * t + t2 + t,
          s3 * t - s3 - two * s2 * t2 + s2 * t + s2 + s * t3 - s * t,
          s2 * t - two * s * t2 + t3)};
  return orchard_checked(lines, 12);
}

LeviGraph CyclicModel::levi() const {
  LeviGraph g;
  g.components = n;
  for (const auto& t : triples) g.points.push_back({t[0], t[1], t[2]});
  for (const auto& [a, b] : doubles) g.points.push_back({a, b});
  return g;
}

CyclicModel cyclic_model(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "cyclic model needs n >= 3");
  CyclicModel m;
  m.n = n;
  std::set<std::pair<int, int>> covered;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int c = ((-(a + b)) % n + n) % n;
      if (c <= b) continue;
      m.triples.push_back({a, b, c});
      covered.insert({a, b});
      covered.insert({a, c});
      covered.insert({b, c});
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!covered.count({a, b})) m.doubles.emplace_back(a, b);
  return m;
}

long orchard_triple_count(int n) { return static_cast<long>(n) * (n - 3) / 6 + 1; }

}  // namespace syzcurve
