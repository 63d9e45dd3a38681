#include "syzcurve/arrangements.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "syzcurve/errors.hpp"
#include "syzcurve/roots.hpp"

namespace syzcurve {

std::string component_kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::Line: return "line";
    case ComponentKind::Conic: return "conic";
    case ComponentKind::OtherSmooth: return "curve";
  }
  return "?";
}

namespace {

bool smooth_conic(const HomogPoly& q) {
  const NumberField& k = q.field();
  const FieldElement half = k.from_rational(Rational(1, 2));
  auto c = [&](int a, int b, int cc) { return q.coeff({a, b, cc}); };
  Mat3 m;
  m[0] = {c(2, 0, 0), half * c(1, 1, 0), half * c(1, 0, 1)};
  m[1] = {half * c(1, 1, 0), c(0, 2, 0), half * c(0, 1, 1)};
  m[2] = {half * c(1, 0, 1), half * c(0, 1, 1), c(0, 0, 2)};
  return !mat3_det(m).is_zero();
}

}  // namespace

Arrangement::Arrangement(const std::vector<HomogPoly>& polys, const std::vector<ComponentKind>& kinds) {
  if (polys.empty()) throw Error(ErrorCode::InvalidArgument, "arrangement has no components");
  if (!kinds.empty() && kinds.size() != polys.size()) throw Error(ErrorCode::InvalidArgument, "kind list length mismatch");
  field_ = polys.front().field();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const HomogPoly& p = polys[i];
    if (p.field() != field_) throw Error(ErrorCode::MixedFields, "components over different fields");
    if (p.is_zero() || p.degree() < 1) throw Error(ErrorCode::InvalidComponent, "component " + std::to_string(i + 1) + " is constant");
    ComponentKind k = kinds.empty() ? (p.degree() == 1 ? ComponentKind::Line
                                       : p.degree() == 2 ? ComponentKind::Conic
                                                         : ComponentKind::OtherSmooth)
                                    : kinds[i];
    const std::string where = "component " + std::to_string(i + 1);
    switch (k) {
      case ComponentKind::Line:
        if (p.degree() != 1) throw Error(ErrorCode::InvalidComponent, where + " is not a line");
        break;
      case ComponentKind::Conic:
        if (p.degree() != 2) throw Error(ErrorCode::InvalidComponent, where + " is not of degree 2");
        if (!smooth_conic(p)) throw Error(ErrorCode::InvalidComponent, where + " is a singular conic");
        break;
      case ComponentKind::OtherSmooth:
        if (p.degree() < 2 || !is_reduced(p) || SyzygyAnalyzer(p).tau() != 0)
          throw Error(ErrorCode::InvalidComponent, where + " is not a smooth curve");
        break;
    }
    for (std::size_t j = 0; j < comps_.size(); ++j)
      if (comps_[j].poly.proportional_to(p))
        throw Error(ErrorCode::DuplicateComponents,
                    "components " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");
    comps_.push_back({k, p});
  }
}

int Arrangement::degree() const {
  int d = 0;
  for (const auto& c : comps_) d += c.poly.degree();
  return d;
}

HomogPoly Arrangement::product() const {
  HomogPoly f = HomogPoly::constant(field_.one());
  for (const auto& c : comps_) f = f * c.poly;
  return f;
}

bool Arrangement::is_line_arrangement() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Component& c) { return c.kind == ComponentKind::Line; });
}

Arrangement Arrangement::over(const NumberField& ext) const {
  if (ext == field_) return *this;
  Arrangement out;
  out.field_ = ext;
  for (const auto& c : comps_) {
    HomogPoly q(ext, c.poly.degree());
    for (const auto& [m, v] : c.poly.terms()) {
      if (!v.is_rational()) throw Error(ErrorCode::MixedFields, "cannot move a non-rational coefficient");
      q += HomogPoly::monomial(ext.from_rational(v.to_rational()), m);
    }
    out.comps_.push_back({c.kind, q});
  }
  return out;
}

std::string SingularPoint::point_string() const {
  if (conjugate_pair) return pair_description;
  return "(" + point[0].to_string() + " : " + point[1].to_string() + " : " + point[2].to_string() + ")";
}

std::size_t SingularLocus::point_count() const {
  std::size_t n = 0;
  for (const auto& p : points) n += static_cast<std::size_t>(p.count());
  return n;
}

namespace {

ProjPoint normalized(ProjPoint p) {
  std::size_t i = 0;
  while (i < 3 && p[i].is_zero()) ++i;
  if (i == 3) throw Error(ErrorCode::InvalidArgument, "zero vector is not a point");
  FieldElement s = p[i].inverse();
  for (auto& v : p) v = v * s;
  return p;
}

struct PointLess {
  bool operator()(const ProjPoint& a, const ProjPoint& b) const {
    for (std::size_t i = 0; i < 3; ++i) {
      int c = a[i].compare(b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

UPoly interpolate(const NumberField& k, const std::vector<FieldElement>& xs, std::vector<FieldElement> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
  UPoly p = UPoly::constant(ys[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) p = p * UPoly(k, {-xs[i], k.one()}) + UPoly::constant(ys[i]);
  return p;
}

FieldElement uresultant(UPoly a, UPoly b) {
  const NumberField k = a.field();
  if (a.is_zero() || b.is_zero()) return k.zero();
  FieldElement acc = k.one();
  for (;;) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) return acc * b.lc().pow(static_cast<unsigned>(m));
    if (m == 0) return acc * a.lc().pow(static_cast<unsigned>(n));
    UPoly r = a % b;
    if (r.is_zero()) return k.zero();
    if ((m * n) % 2) acc = -acc;
    acc = acc * b.lc().pow(static_cast<unsigned>(m - r.degree()));
    a = std::move(b);
    b = std::move(r);
  }
}

// F(x0, y, 1) as a polynomial in y.
UPoly slice(const HomogPoly& f, const FieldElement& x0) {
  const NumberField& k = f.field();
  std::vector<FieldElement> c(static_cast<std::size_t>(f.degree() + 1), k.zero());
  for (const auto& [m, v] : f.terms()) c[static_cast<std::size_t>(m.b)] += v * x0.pow(static_cast<unsigned>(m.a));
  return UPoly(k, c);
}

// Res_y(F(x,y,1), G(x,y,1)) by evaluation at deg_bound+1 integers.
UPoly resultant_y(const HomogPoly& f, const HomogPoly& g) {
  const NumberField& k = f.field();
  const int n = f.degree() * g.degree();
  std::vector<FieldElement> xs, ys;
  for (int i = 0; i <= n; ++i) {
    FieldElement x0 = k.from_int(i);
    xs.push_back(x0);
    ys.push_back(uresultant(slice(f, x0), slice(g, x0)));
  }
  return interpolate(k, xs, ys);
}

std::array<ProjPoint, 2> line_span(const HomogPoly& l) {
  const NumberField& k = l.field();
  const FieldElement a = l.coeff({1, 0, 0}), b = l.coeff({0, 1, 0}), c = l.coeff({0, 0, 1});
  const FieldElement z = k.zero();
  if (!c.is_zero()) return {ProjPoint{c, z, -a}, ProjPoint{z, c, -b}};
  if (!b.is_zero()) return {ProjPoint{b, -a, z}, ProjPoint{z, z, k.one()}};
  return {ProjPoint{z, k.one(), z}, ProjPoint{z, z, k.one()}};
}

ProjPoint combine(const FieldElement& u, const ProjPoint& p, const ProjPoint& q) {
  return {u * p[0] + q[0], u * p[1] + q[1], u * p[2] + q[2]};
}

// C(uP + Q) as a polynomial in u.
UPoly restrict_to_line(const HomogPoly& c, const std::array<ProjPoint, 2>& span) {
  const NumberField& k = c.field();
  std::vector<FieldElement> xs, ys;
  for (int i = 0; i <= c.degree(); ++i) {
    FieldElement u = k.from_int(i);
    xs.push_back(u);
    ys.push_back(c.eval(combine(u, span[0], span[1])));
  }
  return interpolate(k, xs, ys);
}

struct Hit {
  ProjPoint p;
  int mult;
};

struct PairHit {
  UPoly q;
  int mult;
  std::string desc;
  std::function<bool(const HomogPoly&)> may_contain;
};

struct Meet {
  std::vector<Hit> points;
  std::vector<PairHit> pairs;
};

std::string quad_string(const UPoly& q, const std::string& var) { return q.to_string(var) + " = 0"; }

Meet meet_line_line(const HomogPoly& l1, const HomogPoly& l2) {
  auto c = [](const HomogPoly& l, int i) { return l.coeff({i == 0, i == 1, i == 2}); };
  ProjPoint p{c(l1, 1) * c(l2, 2) - c(l1, 2) * c(l2, 1), c(l1, 2) * c(l2, 0) - c(l1, 0) * c(l2, 2),
              c(l1, 0) * c(l2, 1) - c(l1, 1) * c(l2, 0)};
  return {{Hit{p, 1}}, {}};
}

Meet meet_line_curve(const HomogPoly& l, const HomogPoly& c, int i, int j) {
  Meet out;
  auto span = line_span(l);
  UPoly g = restrict_to_line(c, span);
  const int at_inf = c.degree() - g.degree();
  if (at_inf > 0) out.points.push_back({span[0], at_inf});
  auto fac = factor_low_degree(g);
  for (const auto& [u, m] : fac.roots) out.points.push_back({combine(u, span[0], span[1]), m});
  if (!fac.others.empty())
    throw Error(ErrorCode::FieldTowerUnsupported, "intersection points need an extension of degree > 2");
  for (const auto& [q, m] : fac.quadratics) {
    PairHit h{q, m, "", nullptr};
    h.desc = "pair on components " + std::to_string(i + 1) + "," + std::to_string(j + 1) + ": u*P+Q with " +
             quad_string(q, "u") + ", P=(" + span[0][0].to_string() + ":" + span[0][1].to_string() + ":" +
             span[0][2].to_string() + "), Q=(" + span[1][0].to_string() + ":" + span[1][1].to_string() + ":" +
             span[1][2].to_string() + ")";
    h.may_contain = [span, q](const HomogPoly& hp) { return (restrict_to_line(hp, span) % q).is_zero(); };
    out.pairs.push_back(std::move(h));
  }
  return out;
}

Mat3 random_transform(const NumberField& k, std::mt19937& rng) {
  for (;;) {
    Mat3 m = mat3_identity(k);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        if (a != b) m[a][b] = k.from_int(static_cast<int>(rng() % 7) - 3);
    if (!mat3_det(m).is_zero()) return m;
  }
}

Meet meet_curve_curve(const HomogPoly& f1, const HomogPoly& f2, const std::vector<Component>& all, int i, int j) {
  const NumberField& k = f1.field();
  std::mt19937 rng(12345);
  const int n = f1.degree() * f2.degree();
  for (int attempt = 0; attempt < 60; ++attempt) {
    Mat3 t = random_transform(k, rng);
    std::vector<HomogPoly> ts;
    bool ok = true;
    for (const auto& c : all) {
      HomogPoly ct = c.poly.substitute_linear(t);
      if (ct.coeff({0, ct.degree(), 0}).is_zero()) ok = false;
      ts.push_back(std::move(ct));
    }
    if (!ok) continue;
    const HomogPoly& g1 = ts[static_cast<std::size_t>(i)];
    const HomogPoly& g2 = ts[static_cast<std::size_t>(j)];
    UPoly r = resultant_y(g1, g2);
    if (r.degree() != n) continue;
    auto fac = factor_low_degree(r);
    if (!fac.others.empty())
      throw Error(ErrorCode::FieldTowerUnsupported, "intersection points need an extension of degree > 2");
    Meet out;
    for (const auto& [x0, m] : fac.roots) {
      UPoly g = gcd(slice(g1, x0), slice(g2, x0));
      if (g.degree() != 1) {
        ok = false;
        break;
      }
      FieldElement y0 = -g.coeff(0) / g.coeff(1);
      ProjPoint v{x0, y0, k.one()}, p;
      for (std::size_t a = 0; a < 3; ++a) p[a] = t[a][0] * v[0] + t[a][1] * v[1] + t[a][2] * v[2];
      out.points.push_back({p, m});
    }
    if (!ok) continue;
    for (const auto& [q, m] : fac.quadratics) {
      PairHit h{q, m, "", nullptr};
      h.desc = "pair on components " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               ": x-coordinate root of " + quad_string(q, "x") + " after a linear change of coordinates";
      h.may_contain = [g1, g2, t, q](const HomogPoly& hp) {
        HomogPoly ht = hp.substitute_linear(t);
        if (ht.coeff({0, ht.degree(), 0}).is_zero()) return true;
        return (resultant_y(g1, ht) % q).is_zero() && (resultant_y(g2, ht) % q).is_zero();
      };
      out.pairs.push_back(std::move(h));
    }
    return out;
  }
  throw Error(ErrorCode::BudgetExceeded, "no generic projection found for a pair of components");
}

struct RawLocus {
  std::map<ProjPoint, SingularPoint, PointLess> points;
  std::vector<std::pair<SingularPoint, PairHit>> pairs;
};

RawLocus intersect_all(const Arrangement& a) {
  RawLocus out;
  const auto& comps = a.components();
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      const HomogPoly& p = comps[i].poly;
      const HomogPoly& q = comps[j].poly;
      const int ii = static_cast<int>(i), jj = static_cast<int>(j);
      Meet m;
      if (p.degree() == 1 && q.degree() == 1) m = meet_line_line(p, q);
      else if (p.degree() == 1) m = meet_line_curve(p, q, ii, jj);
      else if (q.degree() == 1) m = meet_line_curve(q, p, jj, ii);
      else m = meet_curve_curve(p, q, comps, ii, jj);
      for (const auto& h : m.points) {
        ProjPoint key = normalized(h.p);
        auto& sp = out.points[key];
        sp.point = key;
        sp.contacts[{ii, jj}] = h.mult;
      }
      for (auto& h : m.pairs) {
        SingularPoint sp;
        sp.conjugate_pair = true;
        sp.pair_description = h.desc;
        sp.incident = {ii, jj};
        sp.contacts[{ii, jj}] = h.mult;
        out.pairs.emplace_back(std::move(sp), std::move(h));
      }
    }
  return out;
}

SingularLocus finish(const Arrangement& a, RawLocus raw, const PointOptions& opts) {
  SingularLocus out;
  out.field = a.field();
  const auto& comps = a.components();
  for (auto& [key, sp] : raw.points) {
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (comps[c].poly.eval(key).is_zero()) sp.incident.push_back(static_cast<int>(c));
    HomogPoly local = HomogPoly::constant(a.field().one());
    for (int c : sp.incident) local = local * comps[static_cast<std::size_t>(c)].poly;
    sp.local = local_invariants_at(local, key, static_cast<int>(sp.incident.size()));
    sp.label = classify_local(sp.local);
    out.points.push_back(std::move(sp));
  }
  if (!raw.pairs.empty() && !opts.aggregate)
    throw Error(ErrorCode::FieldTowerUnsupported,
                "singular points need a second square root over " + a.field().describe() +
                    "; rerun with --aggregate-points");
  for (auto& [sp, hit] : raw.pairs) {
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const int ci = static_cast<int>(c);
      if (ci == sp.incident[0] || ci == sp.incident[1]) continue;
      if (hit.may_contain(comps[c].poly))
        throw Error(ErrorCode::FieldTowerUnsupported, "conjugate pair may lie on more than two components");
    }
    std::sort(sp.incident.begin(), sp.incident.end());
    const int m = sp.contacts.begin()->second;
    // two smooth branches with contact order m: A_{2m-1}
    sp.local = {2L * m - 1, 2L * m - 1, 2, 2, true};
    sp.label = classify_local(sp.local);
    out.points.push_back(std::move(sp));
  }
  return out;
}

}  // namespace

SingularLocus singular_points(const Arrangement& a, const PointOptions& opts) {
  RawLocus raw = intersect_all(a);
  if (!raw.pairs.empty() && a.field().is_rationals() && opts.adjoin_sqrt) {
    const UPoly& q = raw.pairs.front().second.q;
    Rational disc = (q.coeff(1) * q.coeff(1) - a.field().from_int(4) * q.coeff(0)).to_rational();
    Integer d = squarefree_kernel(disc);
    NumberField ext = NumberField::adjoin_root("r", {Rational(-d), Rational(0), Rational(1)});
    PointOptions inner = opts;
    inner.adjoin_sqrt = false;
    SingularLocus out = singular_points(a.over(ext), inner);
    out.notes.insert(out.notes.begin(), "points computed over " + ext.describe());
    return out;
  }
  SingularLocus out = finish(a, std::move(raw), opts);
  if (std::any_of(out.points.begin(), out.points.end(), [](const SingularPoint& p) { return p.conjugate_pair; }))
    out.notes.push_back("conjugate pairs recorded once with shared invariants");
  return out;
}

std::string singularity_key(const SingularPoint& p) {
  if (p.label.kind != SingTypeLabel::Kind::Other) return p.label.name();
  const auto& l = p.local;
  return "Other(mu=" + std::to_string(l.mu) + ",tau=" + std::to_string(l.tau) + ",mult=" +
         std::to_string(l.multiplicity) + ",branches=" + std::to_string(l.branches) + ")";
}

int WeakCombinatorics::count(const std::string& key) const {
  auto it = sing_counts.find(key);
  return it == sing_counts.end() ? 0 : it->second;
}

std::string WeakCombinatorics::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < degree_counts.size(); ++i) os << (i ? ", " : "") << degree_counts[i];
  os << ";";
  bool first = true;
  for (const auto& [k, v] : sing_counts) {
    os << (first ? " " : ", ") << k << ": " << v;
    first = false;
  }
  os << ")";
  return os.str();
}

WeakCombinatorics weak_combinatorics(const SingularLocus& locus, const Arrangement& a) {
  WeakCombinatorics w;
  for (const auto& c : a.components()) {
    const auto d = static_cast<std::size_t>(c.poly.degree());
    if (w.degree_counts.size() < d) w.degree_counts.resize(d, 0);
    ++w.degree_counts[d - 1];
  }
  for (const auto& p : locus.points) w.sing_counts[singularity_key(p)] += p.count();
  return w;
}

WeakCombinatorics weak_combinatorics(const Arrangement& a, const PointOptions& opts) {
  return weak_combinatorics(singular_points(a, opts), a);
}

std::size_t LeviGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& p : points) e += p.size();
  return e;
}

LeviGraph levi_graph(const SingularLocus& locus, const Arrangement& a) {
  LeviGraph g;
  g.components = static_cast<int>(a.size());
  for (const auto& p : locus.points)
    for (int i = 0; i < p.count(); ++i) g.points.push_back(p.incident);
  return g;
}

LeviGraph levi_graph(const Arrangement& a, const PointOptions& opts) { return levi_graph(singular_points(a, opts), a); }

namespace {

struct IsoSearch {
  const LeviGraph& g;
  const LeviGraph& h;
  std::vector<std::vector<int>> g_points_of;  // component -> point indices
  std::vector<int> order;
  std::vector<int> image, used;
  std::vector<int> remaining;  // unassigned incident components per point of g
  std::map<std::vector<int>, int> available;
  std::vector<std::vector<int>> g_sig, h_sig;

  IsoSearch(const LeviGraph& a, const LeviGraph& b) : g(a), h(b) {}

  static std::vector<std::vector<int>> signatures(const LeviGraph& x) {
    std::vector<std::vector<int>> s(static_cast<std::size_t>(x.components));
    for (const auto& p : x.points)
      for (int c : p) s[static_cast<std::size_t>(c)].push_back(static_cast<int>(p.size()));
    for (auto& v : s) std::sort(v.begin(), v.end());
    return s;
  }

  bool run() {
    if (g.components != h.components || g.points.size() != h.points.size()) return false;
    g_sig = signatures(g);
    h_sig = signatures(h);
    auto gs = g_sig, hs = h_sig;
    std::sort(gs.begin(), gs.end());
    std::sort(hs.begin(), hs.end());
    if (gs != hs) return false;
    const auto n = static_cast<std::size_t>(g.components);
    g_points_of.assign(n, {});
    for (std::size_t p = 0; p < g.points.size(); ++p)
      for (int c : g.points[p]) g_points_of[static_cast<std::size_t>(c)].push_back(static_cast<int>(p));
    for (const auto& p : h.points) {
      auto s = p;
      std::sort(s.begin(), s.end());
      ++available[s];
    }
    remaining.clear();
    for (const auto& p : g.points) remaining.push_back(static_cast<int>(p.size()));
    order.resize(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return g_points_of[static_cast<std::size_t>(a)].size() > g_points_of[static_cast<std::size_t>(b)].size();
    });
    image.assign(n, -1);
    used.assign(n, 0);
    return assign(0);
  }

  bool assign(std::size_t step) {
    if (step == order.size()) return true;
    const int c = order[step];
    for (int d = 0; d < h.components; ++d) {
      if (used[static_cast<std::size_t>(d)] || g_sig[static_cast<std::size_t>(c)] != h_sig[static_cast<std::size_t>(d)])
        continue;
      image[static_cast<std::size_t>(c)] = d;
      used[static_cast<std::size_t>(d)] = 1;
      std::vector<std::vector<int>> taken;
      bool ok = true;
      for (int p : g_points_of[static_cast<std::size_t>(c)]) {
        if (--remaining[static_cast<std::size_t>(p)] != 0) continue;
        std::vector<int> s;
        for (int e : g.points[static_cast<std::size_t>(p)]) s.push_back(image[static_cast<std::size_t>(e)]);
        std::sort(s.begin(), s.end());
        auto it = available.find(s);
        if (it == available.end() || it->second == 0) {
          ok = false;
          continue;
        }
        --it->second;
        taken.push_back(s);
      }
      if (ok && assign(step + 1)) return true;
      for (const auto& s : taken) ++available[s];
      for (int p : g_points_of[static_cast<std::size_t>(c)]) ++remaining[static_cast<std::size_t>(p)];
      image[static_cast<std::size_t>(c)] = -1;
      used[static_cast<std::size_t>(d)] = 0;
    }
    return false;
  }
};

}  // namespace

bool levi_isomorphic(const LeviGraph& g, const LeviGraph& h) { return IsoSearch(g, h).run(); }

bool lattice_isomorphic(const Arrangement& a, const Arrangement& b, const PointOptions& opts) {
  return levi_isomorphic(levi_graph(a, opts), levi_graph(b, opts));
}

PairVerdict pair_verdict(bool same_combinatorics, const std::string& combinatorics, const CurveAnalysis& a,
                         const CurveAnalysis& b, PairVariant v) {
  PairVerdict out;
  if (!same_combinatorics) {
    out.reason = "different " + combinatorics;
    return out;
  }
  if (v == PairVariant::Mdr) {
    out.is_pair = a.mdr != b.mdr;
    out.reason = out.is_pair ? "same " + combinatorics + ", mdr " + std::to_string(a.mdr) + " vs " + std::to_string(b.mdr)
                             : "same " + combinatorics + " and same mdr " + std::to_string(a.mdr);
  } else {
    out.is_pair = !(a.resolution == b.resolution);
    out.reason = out.is_pair ? "same " + combinatorics + ", AR resolutions " + a.resolution.display() + " vs " +
                                   b.resolution.display()
                             : "same " + combinatorics + " and same AR data " + a.resolution.display();
  }
  return out;
}

PairVerdict ziegler_pair(const Arrangement& a, const Arrangement& b, PairVariant v, const PointOptions& opts) {
  if (!a.is_line_arrangement() || !b.is_line_arrangement())
    throw Error(ErrorCode::NotLineArrangement, "Ziegler pairs are defined for line arrangements");
  bool iso = lattice_isomorphic(a, b, opts);
  if (!iso) return pair_verdict(false, "intersection lattices", {}, {}, v);
  return pair_verdict(true, "intersection lattice", classify(a.product()), classify(b.product()), v);
}

PairVerdict weak_ziegler_pair(const Arrangement& a, const Arrangement& b, PairVariant v, const PointOptions& opts) {
  bool same = weak_combinatorics(a, opts) == weak_combinatorics(b, opts);
  if (!same) return pair_verdict(false, "weak-combinatorics", {}, {}, v);
  return pair_verdict(true, "weak-combinatorics", classify(a.product()), classify(b.product()), v);
}

}  // namespace syzcurve
