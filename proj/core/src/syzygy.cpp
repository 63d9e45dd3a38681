#include "syzcurve/syzygy.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "syzcurve/errors.hpp"

namespace syzcurve {

namespace {

long c2(long n) { return n < 0 ? 0 : (n + 2) * (n + 1) / 2; }

HomogPoly map_poly(const HomogPoly& p, const NumberField& target, const std::function<FieldElement(const FieldElement&)>& fn) {
  HomogPoly out(target, p.degree());
  for (const auto& [m, c] : p.terms()) out += HomogPoly::monomial(fn(c), m);
  return out;
}

}  // namespace

HomogPoly SyzygyVector::pairing(const HomogPoly& f) const {
  HomogPoly s(f.field(), degree + f.degree() - 1);
  for (int i = 0; i < 3; ++i) s += comps[static_cast<std::size_t>(i)] * f.partial(i);
  return s;
}

long Resolution::hilbert(int r) const {
  long s = 0;
  for (int d : generator_degrees) s += c2(r - d);
  for (int e : relation_degrees) s -= c2(r - e);
  return s;
}

namespace {

std::string shifts(std::vector<int> degs) {
  std::sort(degs.begin(), degs.end(), std::greater<int>());
  std::ostringstream os;
  for (std::size_t i = 0; i < degs.size();) {
    std::size_t j = i;
    while (j < degs.size() && degs[j] == degs[i]) ++j;
    if (i > 0) os << "+";
    os << "S(-" << degs[i] << ")";
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

}  // namespace

std::string Resolution::display() const {
  std::string s = "0 -> ";
  if (!relation_degrees.empty()) s += shifts(relation_degrees) + " -> ";
  return s + shifts(generator_degrees) + " -> AR(f)";
}

std::string subtype_name(Subtype s) {
  switch (s) {
    case Subtype::TwoA: return "2A";
    case Subtype::TwoB: return "2B";
    case Subtype::None: break;
  }
  return "none";
}

std::string CurveAnalysis::class_name() const {
  switch (cls) {
    case CurveClass::Smooth: return "Smooth";
    case CurveClass::Free: return "Free";
    case CurveClass::NearlyFree: return "NearlyFree";
    case CurveClass::MSyzygy: return "MSyzygy(" + std::to_string(m) + ")";
  }
  return "?";
}

Matrix jacobian_matrix(const HomogPoly& f, int r) {
  const NumberField& k = f.field();
  const int d = f.degree();
  const std::size_t src = graded::dim(r);
  Matrix m(k, graded::dim(r + d - 1), 3 * src);
  auto basis = graded::basis(r);
  for (int i = 0; i < 3; ++i) {
    HomogPoly g = f.partial(i);
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (const auto& [mono, c] : g.terms())
        m.set(graded::index(mono * basis[j]), static_cast<std::size_t>(i) * src + j, c);
  }
  return m;
}

SyzygyAnalyzer::SyzygyAnalyzer(const HomogPoly& f) : model_(integral_model(f.field())), d_(f.degree()) {
  if (f.is_zero() || d_ < 1) throw Error(ErrorCode::InvalidArgument, "curve must have degree >= 1");
  if (!is_reduced(f)) throw Error(ErrorCode::NotReduced, "polynomial is not reduced");
  f_ = map_poly(f, model_.model, [&](const FieldElement& c) { return model_.to_model(c); });
  // One common scale for all three partials.
  std::vector<FieldElement> all;
  for (int i = 0; i < 3; ++i) {
    auto d = f_.partial(i).dense();
    all.insert(all.end(), d.begin(), d.end());
  }
  IntRow joint = to_integral_row(model_.model, all);
  const std::size_t block = joint.size() / 3;
  for (std::size_t i = 0; i < 3; ++i)
    grad_[i].assign(joint.begin() + static_cast<std::ptrdiff_t>(i * block),
                    joint.begin() + static_cast<std::ptrdiff_t>((i + 1) * block));
}

std::size_t SyzygyAnalyzer::jacobian_rank(int r) {
  if (r < 0) return 0;
  auto it = rank_cache_.find(r);
  if (it != rank_cache_.end()) return it->second;
  const NumberField& k = model_.model;
  const auto kk = static_cast<std::size_t>(k.degree());
  const auto gbasis = graded::basis(d_ - 1);
  const auto basis = graded::basis(r);
  const std::size_t cols = graded::dim(r + d_ - 1);
  std::vector<IntRow> rows;
  rows.reserve(3 * basis.size());
  for (int i = 0; i < 3; ++i) {
    const IntRow& g = grad_[static_cast<std::size_t>(i)];
    bool zero = std::all_of(g.begin(), g.end(), [](const Integer& v) { return sgn(v) == 0; });
    if (zero) continue;
    for (const auto& n : basis) {
      IntRow row(cols * kk);
      for (std::size_t j = 0; j < gbasis.size(); ++j) {
        std::size_t t = graded::index(gbasis[j] * n);
        for (std::size_t c = 0; c < kk; ++c) row[t * kk + c] = g[j * kk + c];
      }
      rows.push_back(std::move(row));
    }
  }
  IntegralEchelon e(k, cols);
  e.add_rows(std::move(rows));
  rank_cache_[r] = e.rank();
  return e.rank();
}

std::size_t SyzygyAnalyzer::ar_dimension(int r) {
  if (r < 0) return 0;
  return 3 * graded::dim(r) - jacobian_rank(r);
}

IntRow SyzygyAnalyzer::shift(const IntRow& g, int e, const Monomial& n) const {
  const auto kk = static_cast<std::size_t>(model_.model.degree());
  const int r = e + n.degree();
  const std::size_t se = graded::dim(e), sr = graded::dim(r);
  const auto basis = graded::basis(e);
  IntRow out(3 * sr * kk);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < se; ++j) {
      const std::size_t src = (i * se + j) * kk;
      bool any = false;
      for (std::size_t c = 0; c < kk; ++c)
        if (sgn(g[src + c]) != 0) any = true;
      if (!any) continue;
      const std::size_t dst = (i * sr + graded::index(basis[j] * n)) * kk;
      for (std::size_t c = 0; c < kk; ++c) out[dst + c] = g[src + c];
    }
  return out;
}

SyzygyVector SyzygyAnalyzer::to_vector(int r, const IntRow& row) const {
  auto coords = from_integral_row(model_.model, row);
  const std::size_t s = graded::dim(r);
  SyzygyVector v;
  v.degree = r;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<FieldElement> block(coords.begin() + static_cast<std::ptrdiff_t>(i * s),
                                    coords.begin() + static_cast<std::ptrdiff_t>((i + 1) * s));
    for (auto& c : block) c = model_.from_model(c);
    v.comps[i] = HomogPoly::from_dense(model_.source, r, block);
  }
  return v;
}

void SyzygyAnalyzer::search() {
  if (searched_) return;
  const NumberField& k = model_.model;
  const auto kk = static_cast<std::size_t>(k.degree());
  const HomogPoly source_f = map_poly(f_, model_.source, [&](const FieldElement& c) { return model_.from_model(c); });
  std::vector<int> degs, rels;
  int quiet = 0;
  const int cap = 3 * d_;
  for (int r = 0;; ++r) {
    if (r > cap) throw Error(ErrorCode::BudgetExceeded, "generator search passed degree 3d");
    const auto dim_r = static_cast<long>(ar_dimension(r));
    const std::size_t cols = 3 * graded::dim(r);
    IntegralEchelon span(k, cols);
    std::vector<IntRow> rows;
    for (const auto& [e, g] : gen_rows_)
      for (const auto& n : graded::basis(r - e)) rows.push_back(shift(g, e, n));
    span.add_rows(std::move(rows));
    const auto rk = static_cast<long>(span.rank());
    long predicted = 0;
    for (int e : degs) predicted += c2(r - e);
    for (int e : rels) predicted -= c2(r - e);
    const long new_rels = predicted - rk;
    const long new_gens = dim_r - rk;
    if (new_rels < 0 || new_gens < 0)
      throw Error(ErrorCode::RankMismatch, "inconsistent graded dimensions in degree " + std::to_string(r));
    for (long i = 0; i < new_rels; ++i) rels.push_back(r);
    if (new_gens > 0) {
      // Kernel of the Jacobian map in degree r, one row per target monomial.
      const auto gbasis = graded::basis(d_ - 1);
      const auto basis = graded::basis(r);
      const std::size_t s = basis.size();
      std::vector<IntRow> jrows(graded::dim(r + d_ - 1), IntRow(cols * kk));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < gbasis.size(); ++j) {
          const std::size_t src = j * kk;
          bool any = false;
          for (std::size_t c = 0; c < kk; ++c)
            if (sgn(grad_[i][src + c]) != 0) any = true;
          if (!any) continue;
          for (std::size_t n = 0; n < s; ++n) {
            IntRow& row = jrows[graded::index(gbasis[j] * basis[n])];
            for (std::size_t c = 0; c < kk; ++c) row[(i * s + n) * kk + c] = grad_[i][src + c];
          }
        }
      IntegralEchelon jac(k, cols);
      jac.add_rows(std::move(jrows));
      auto ker = jac.kernel();
      if (static_cast<long>(ker.size()) != dim_r)
        throw Error(ErrorCode::RankMismatch, "kernel dimension disagrees with rank in degree " + std::to_string(r));
      long added = 0;
      for (auto& v : ker) {
        if (added == new_gens) break;
        if (!span.insert(v)) continue;
        gens_.push_back(to_vector(r, v));
        gen_rows_.emplace_back(r, std::move(v));
        degs.push_back(r);
        ++added;
      }
      if (added != new_gens) throw Error(ErrorCode::RankMismatch, "could not complete generator basis in degree " + std::to_string(r));
      if (degs.size() == 2 && rels.empty() && degs[0] + degs[1] == d_ - 1 &&
          saito_check(source_f, gens_[0], gens_[1]).passes) {
        free_by_saito_ = true;
        break;
      }
    }
    quiet = (new_gens == 0 && new_rels == 0) ? quiet + 1 : 0;
    if (quiet >= 3 && degs.size() >= 2) {
      if (static_cast<long>(degs.size()) - static_cast<long>(rels.size()) == 2) break;
    }
  }
  if (static_cast<long>(degs.size()) - static_cast<long>(rels.size()) != 2)
    throw Error(ErrorCode::RankMismatch, "generator count minus relation count is not 2");
  res_.generator_degrees = degs;
  res_.relation_degrees = rels;
  searched_ = true;
}

int SyzygyAnalyzer::mdr() {
  if (searched_) return res_.generator_degrees.front();
  for (int r = 0;; ++r)
    if (ar_dimension(r) > 0) return r;
}

const std::vector<SyzygyVector>& SyzygyAnalyzer::generators() {
  search();
  return gens_;
}

const Resolution& SyzygyAnalyzer::resolution() {
  search();
  return res_;
}

bool SyzygyAnalyzer::certified_free() {
  search();
  return free_by_saito_;
}

long SyzygyAnalyzer::tau() {
  search();
  int top = d_;
  for (int e : res_.generator_degrees) top = std::max(top, e);
  for (int e : res_.relation_degrees) top = std::max(top, e);
  auto at = [&](long r) { return c2(r + d_ - 1) - 3 * c2(r) + res_.hilbert(static_cast<int>(r)); };
  long t0 = at(top + 2), t1 = at(top + 3);
  if (t0 != t1) throw Error(ErrorCode::RankMismatch, "resolution Hilbert polynomial is not eventually constant");
  return t0;
}

long SyzygyAnalyzer::tau_stabilized() {
  if (d_ == 1) return 0;
  auto value = [&](int k) {
    int r = k - d_ + 1;
    return c2(k) - 3 * c2(r) + static_cast<long>(ar_dimension(r));
  };
  int k = std::max(3 * d_ - 5, d_ - 1);
  long prev = value(k);
  for (++k; k <= 6 * d_; ++k) {
    long cur = value(k);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw Error(ErrorCode::StabilizationFailure, "dim (S/J)_k did not stabilize by k = 6d");
}

bool SyzygyAnalyzer::certificate(int probes) {
  search();
  int top = 0;
  for (int e : res_.generator_degrees) top = std::max(top, e);
  for (int e : res_.relation_degrees) top = std::max(top, e);
  for (int r = top + 1; r <= top + probes; ++r)
    if (static_cast<long>(ar_dimension(r)) != res_.hilbert(r)) return false;
  return true;
}

CurveAnalysis SyzygyAnalyzer::classify() {
  CurveAnalysis a;
  a.d = d_;
  if (d_ == 1) {
    a.mdr = 0;
    a.tau = 0;
    a.resolution.generator_degrees = {0, 0};
    a.cls = CurveClass::Smooth;
    a.m = 2;
    a.type_k = 0;
    return a;
  }
  a.resolution = resolution();
  a.mdr = a.resolution.generator_degrees.front();
  a.tau = tau();
  a.m = a.resolution.m();
  const auto& dg = a.resolution.generator_degrees;
  a.type_k = dg[0] + dg[1] - (d_ - 1);
  if (a.tau == 0 && d_ != 2) {
    a.cls = CurveClass::Smooth;
  } else if (a.m == 2) {
    if (dg[0] + dg[1] != d_ - 1) throw Error(ErrorCode::ShapeContradiction, "two generators with d1 + d2 != d - 1");
    a.cls = CurveClass::Free;
  } else if (a.m == 3 && dg[0] + dg[1] == d_ && dg[1] == dg[2]) {
    a.cls = CurveClass::NearlyFree;
  } else {
    a.cls = CurveClass::MSyzygy;
  }
  if (a.type_k == 2) {
    if (a.m == 3) a.subtype = Subtype::TwoA;
    else if (a.m == 4) a.subtype = Subtype::TwoB;
    if (a.subtype == Subtype::None)
      a.warnings.push_back("type 2 with m = " + std::to_string(a.m) + ": no 2A/2B subtype assigned");
    else
      a.warnings.push_back("2A/2B rule inferred: m = 3 gives 2A, m = 4 gives 2B");
  }
  return a;
}

FreenessVerdict is_free(SyzygyAnalyzer& a) {
  const long d = a.degree();
  const long r = a.mdr();
  const long tau = a.tau();
  FreenessVerdict v;
  v.holds = 2 * r <= d - 1 && (d - 1) * (d - 1) - r * (d - r - 1) == tau;
  const auto& g = a.resolution().generator_degrees;
  const bool shape = g.size() == 2 && g[0] + g[1] == d - 1;
  if (v.holds != shape) throw Error(ErrorCode::ShapeContradiction, "du Plessis-Wall criterion disagrees with the resolution");
  if (v.holds) v.exponents = {static_cast<int>(r), static_cast<int>(d - 1 - r)};
  return v;
}

FreenessVerdict is_nearly_free(SyzygyAnalyzer& a) {
  const long d = a.degree();
  const long r = a.mdr();
  const long tau = a.tau();
  FreenessVerdict v;
  v.holds = (d - 1) * (d - 1) - r * (d - r - 1) == tau + 1;
  const auto& g = a.resolution().generator_degrees;
  const bool shape = g.size() == 3 && g[0] + g[1] == d && g[1] == g[2];
  if (v.holds != shape) throw Error(ErrorCode::ShapeContradiction, "nearly-free criterion disagrees with the resolution");
  if (v.holds) v.exponents = g;
  return v;
}

std::size_t ar_dimension(const HomogPoly& f, int r) { return SyzygyAnalyzer(f).ar_dimension(r); }
int mdr(const HomogPoly& f) { return SyzygyAnalyzer(f).mdr(); }
std::vector<int> minimal_generator_degrees(const HomogPoly& f) { return SyzygyAnalyzer(f).resolution().generator_degrees; }
std::vector<int> syzygy_degrees(const HomogPoly& f) { return SyzygyAnalyzer(f).resolution().relation_degrees; }
long total_tjurina(const HomogPoly& f) { return SyzygyAnalyzer(f).tau_stabilized(); }

FreenessVerdict is_free(const HomogPoly& f) {
  SyzygyAnalyzer a(f);
  return is_free(a);
}

FreenessVerdict is_nearly_free(const HomogPoly& f) {
  SyzygyAnalyzer a(f);
  return is_nearly_free(a);
}

CurveAnalysis classify(const HomogPoly& f) { return SyzygyAnalyzer(f).classify(); }

SaitoResult saito_check(const HomogPoly& f, const SyzygyVector& r1, const SyzygyVector& r2) {
  if (!r1.is_syzygy_of(f) || !r2.is_syzygy_of(f)) throw Error(ErrorCode::NotASyzygy, "vector is not in AR(f)");
  const NumberField& k = f.field();
  const HomogPoly x = HomogPoly::variable(k, 0), y = HomogPoly::variable(k, 1), z = HomogPoly::variable(k, 2);
  const auto& [a1, b1, c1] = r1.comps;
  const auto& [a2, b2, c2v] = r2.comps;
  SaitoResult res;
  res.constant = k.zero();
  res.determinant = x * (b1 * c2v - b2 * c1) - a1 * (y * c2v - z * b2) + a2 * (y * c1 - z * b1);
  if (res.determinant.is_zero() || res.determinant.degree() != f.degree()) return res;
  const auto& [lead, lc] = *f.terms().begin();
  FieldElement c = res.determinant.coeff(lead) / lc;
  if (!c.is_zero() && res.determinant == c * f) {
    res.passes = true;
    res.constant = c;
  }
  return res;
}

}  // namespace syzcurve
