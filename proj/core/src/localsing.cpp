#include "syzcurve/localsing.hpp"

#include <algorithm>

#include "syzcurve/errors.hpp"
#include "syzcurve/exactla.hpp"

namespace syzcurve {

namespace {

std::size_t mono_index(int i, int j) {
  const auto s = static_cast<std::size_t>(i + j);
  return s * (s + 1) / 2 + static_cast<std::size_t>(j);
}

void check_singular(const BivariatePoly& g) {
  const NumberField& k = g.field();
  const FieldElement zero = k.zero();
  if (!g.eval(zero, zero).is_zero() || !g.partial(0).eval(zero, zero).is_zero() ||
      !g.partial(1).eval(zero, zero).is_zero())
    throw Error(ErrorCode::NotSingularAtOrigin, "origin is not a singular point");
}

long stable_colength(const std::vector<BivariatePoly>& gens, int total_degree) {
  const int cap = 4 * total_degree + 8;
  long prev = truncated_colength(gens, 1);
  for (int n = 2; n <= cap; ++n) {
    long cur = truncated_colength(gens, n);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw Error(ErrorCode::NonIsolated, "local algebra did not stabilize; singularity is not isolated");
}

}  // namespace

long truncated_colength(const std::vector<BivariatePoly>& gens, int n) {
  if (gens.empty()) return static_cast<long>(mono_index(n, 0));
  const NumberField& k = gens.front().field();
  const std::size_t cols = mono_index(n, 0);
  std::vector<IntRow> rows;
  for (const auto& g0 : gens) {
    BivariatePoly g = g0.truncate(n);
    if (g.is_zero()) continue;
    const int ord = g.order();
    for (int s = 0; s + ord < n; ++s)
      for (int j = 0; j <= s; ++j) {
        const int i = s - j;
        std::vector<FieldElement> row(cols, k.zero());
        for (const auto& [e, c] : g.terms())
          if (e.first + e.second + s < n) row[mono_index(e.first + i, e.second + j)] = c;
        rows.push_back(to_integral_row(k, row));
      }
  }
  IntegralEchelon ech(k, cols);
  ech.add_rows(std::move(rows));
  return static_cast<long>(cols - ech.rank());
}

long local_milnor(const BivariatePoly& g) {
  check_singular(g);
  return stable_colength({g.partial(0), g.partial(1)}, g.total_degree());
}

long local_tjurina(const BivariatePoly& g) {
  check_singular(g);
  return stable_colength({g, g.partial(0), g.partial(1)}, g.total_degree());
}

LocalInvariants local_invariants_at(const HomogPoly& f, const ProjPoint& p0, int branches) {
  const NumberField& k = f.field();
  ProjPoint p;
  for (std::size_t i = 0; i < 3; ++i) {
    if (p0[i].field() == k) {
      p[i] = p0[i];
    } else if (p0[i].is_rational()) {
      p[i] = k.from_rational(p0[i].to_rational());
    } else {
      throw Error(ErrorCode::FieldTooSmall, "point coordinates are not in the field of the curve");
    }
  }
  if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) throw Error(ErrorCode::InvalidArgument, "zero vector is not a point");
  if (!f.eval(p).is_zero()) throw Error(ErrorCode::PointNotOnCurve, "point is not on the curve");
  for (int i = 0; i < 3; ++i)
    if (!f.partial(i).eval(p).is_zero()) {
      throw Error(ErrorCode::PointNotSingular, "point is a smooth point of the curve");
    }
  // Columns e_a, e_b, p with p last, so (0:0:1) maps to p.
  std::size_t piv = 0;
  while (p[piv].is_zero()) ++piv;
  Mat3 m = mat3_identity(k);
  std::size_t col = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    if (j == piv) continue;
    for (std::size_t i = 0; i < 3; ++i) m[i][col] = i == j ? k.one() : k.zero();
    ++col;
  }
  for (std::size_t i = 0; i < 3; ++i) m[i][2] = p[i];
  BivariatePoly g = f.substitute_linear(m).dehomogenize(2);
  LocalInvariants inv;
  inv.mu = local_milnor(g);
  inv.tau = local_tjurina(g);
  inv.multiplicity = g.order();
  inv.branches = branches;
  inv.quasi_homogeneous = inv.mu == inv.tau;
  return inv;
}

std::string SingTypeLabel::name() const {
  switch (kind) {
    case Kind::A: return "A_" + std::to_string(parameter);
    case Kind::D4: return "D_4";
    case Kind::X9: return "X_9";
    case Kind::Ordinary: return "Ordinary(" + std::to_string(parameter) + ")";
    case Kind::Other: break;
  }
  return "Other";
}

SingTypeLabel classify_local(const LocalInvariants& inv) {
  SingTypeLabel l;
  const bool qh = inv.mu == inv.tau;
  const int b = inv.branches;
  auto raw = [&] {
    return "mu=" + std::to_string(inv.mu) + " tau=" + std::to_string(inv.tau) + " mult=" +
           std::to_string(inv.multiplicity) + (b > 0 ? " branches=" + std::to_string(b) : "");
  };
  if (qh && inv.multiplicity == 2 && inv.mu >= 1) {
    // A_k has two branches for odd k and one for even k.
    const int k = static_cast<int>(inv.mu);
    if (b == 0 || b == (k % 2 == 1 ? 2 : 1)) {
      l.kind = SingTypeLabel::Kind::A;
      l.parameter = k;
      return l;
    }
  }
  if (qh && inv.mu == 4 && inv.multiplicity == 3 && (b == 0 || b == 3)) {
    l.kind = SingTypeLabel::Kind::D4;
    return l;
  }
  if (qh && inv.mu == 9 && inv.multiplicity == 4 && (b == 0 || b == 4)) {
    l.kind = SingTypeLabel::Kind::X9;
    return l;
  }
  if (qh && b >= 2 && inv.multiplicity == b && inv.mu == static_cast<long>(b - 1) * (b - 1)) {
    l.kind = SingTypeLabel::Kind::Ordinary;
    l.parameter = b;
    return l;
  }
  l.note = raw();
  if (qh && inv.mu == 15 && inv.multiplicity == 4) l.note += "; invariants of Z_{1,0}";
  else if (!qh && b >= 2 && inv.multiplicity == b && inv.mu == static_cast<long>(b - 1) * (b - 1))
    l.note += "; ordinary, not quasi-homogeneous";
  return l;
}

}  // namespace syzcurve
