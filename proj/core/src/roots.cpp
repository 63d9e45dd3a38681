#include "syzcurve/roots.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>

namespace syzcurve {

namespace {

namespace mp = boost::multiprecision;
using Real = mp::cpp_bin_float_100;
using Complex = mp::cpp_complex_100;

Real to_real(const Integer& z) { return Real(z.get_str()); }
Real to_real(const Rational& q) { return to_real(Integer(q.get_num())) / to_real(Integer(q.get_den())); }

Integer floor_int(const Real& x) { return Integer(static_cast<mp::cpp_int>(mp::floor(x)).str()); }

const Real& tolerance() {
  static const Real t("1e-55");
  return t;
}

// Aberth-Ehrlich iteration on a polynomial given low to high.
std::vector<Complex> numeric_roots(std::vector<Complex> c) {
  const std::size_t n = c.size() - 1;
  if (n == 0) return {};
  const Complex lead = c.back();
  for (auto& v : c) v /= lead;
  Real radius = 0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, Real(abs(c[i])));
  radius += 1;
  std::vector<Complex> z(n);
  const Real pi = mp::acos(Real(-1));
  for (std::size_t k = 0; k < n; ++k) {
    Real th = 2 * pi * k / n + Real("0.7");
    z[k] = Complex(radius * mp::cos(th) / 2, radius * mp::sin(th) / 2);
  }
  const Real eps("1e-90");
  for (int it = 0; it < 2000; ++it) {
    bool done = true;
    for (std::size_t k = 0; k < n; ++k) {
      Complex p = c[n], dp = 0;
      for (std::size_t i = n; i-- > 0;) {
        dp = dp * z[k] + p;
        p = p * z[k] + c[i];
      }
      if (abs(p) == 0) continue;
      Complex w = p / dp;
      Complex s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) s += Complex(1) / (z[k] - z[j]);
      Complex step = w / (Complex(1) - w * s);
      z[k] -= step;
      if (abs(step) > eps * std::max(Real(1), Real(abs(z[k])))) done = false;
    }
    if (done) break;
  }
  return z;
}

std::vector<Complex> embeddings(const NumberField& k) {
  static std::map<const void*, std::vector<Complex>> cache;
  auto it = cache.find(k.data());
  if (it != cache.end()) return it->second;
  std::vector<Complex> out;
  if (k.degree() == 1) {
    out.push_back(Complex(1));
  } else {
    std::vector<Complex> c;
    for (const auto& q : k.minpoly()) c.push_back(Complex(to_real(q)));
    out = numeric_roots(c);
  }
  cache[k.data()] = out;
  return out;
}

Complex embed(const FieldElement& a, const Complex& alpha) {
  Complex s = 0;
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) s = s * alpha + Complex(to_real(c[i]));
  return s;
}

std::optional<Rational> rationalize(const Real& x) {
  const Integer maxden("1000000000000000000000000000000");
  Integer h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  Real r = x;
  for (int i = 0; i < 400; ++i) {
    Integer a = floor_int(r);
    Integer h = a * h1 + h2, k = a * k1 + k2;
    if (k > maxden) return std::nullopt;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    Real approx = to_real(h) / to_real(k);
    if (mp::abs(approx - x) < tolerance() * std::max(Real(1), mp::abs(x))) {
      Rational q(h, k);
      q.canonicalize();
      return q;
    }
    Real frac = r - to_real(a);
    if (frac == 0) return std::nullopt;
    r = 1 / frac;
  }
  return std::nullopt;
}

// Solves sum_i c_i alpha_j^i = values_j for rational c_i.
std::optional<FieldElement> recognize(const NumberField& k, const std::vector<Complex>& alphas,
                                      const std::vector<Complex>& values) {
  const std::size_t n = alphas.size();
  std::vector<std::vector<Complex>> m(n, std::vector<Complex>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    Complex p = 1;
    for (std::size_t i = 0; i < n; ++i) {
      m[j][i] = p;
      p *= alphas[j];
    }
    m[j][n] = values[j];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (abs(m[r][c]) > abs(m[best][c])) best = r;
    std::swap(m[c], m[best]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      Complex f = m[r][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < n; ++i) {
    Complex v = m[i][n] / m[i][i];
    Real re = v.real(), im = v.imag();
    if (mp::abs(im) > tolerance() * std::max(Real(1), mp::abs(re))) return std::nullopt;
    auto q = rationalize(re);
    if (!q) return std::nullopt;
    coeffs.push_back(*q);
  }
  return FieldElement(k, coeffs);
}

std::vector<Complex> embed_poly(const UPoly& p, const Complex& alpha) {
  std::vector<Complex> c;
  for (const auto& a : p.coeffs()) c.push_back(embed(a, alpha));
  return c;
}

// Tries every choice of one candidate per embedding.
template <typename Cand, typename Values, typename Accept>
bool enumerate(const std::vector<std::vector<Cand>>& cands, std::size_t j, std::vector<const Cand*>& pick,
               const Values& values, const Accept& accept) {
  if (j == cands.size()) return accept(pick);
  for (const auto& c : cands[j]) {
    pick[j] = &c;
    if (enumerate(cands, j + 1, pick, values, accept)) return true;
  }
  return false;
}

std::vector<FieldElement> roots_squarefree(const UPoly& p) {
  const NumberField& k = p.field();
  std::vector<FieldElement> found;
  if (p.degree() < 1) return found;
  if (p.degree() == 1) return {-p.coeff(0) / p.coeff(1)};
  const auto alphas = embeddings(k);
  std::vector<std::vector<Complex>> cands;
  for (const auto& a : alphas) cands.push_back(numeric_roots(embed_poly(p, a)));
  // The first embedding fixes the root; the rest are conjugates.
  for (const auto& r0 : cands[0]) {
    std::vector<std::vector<Complex>> sub(cands);
    sub[0] = {r0};
    std::vector<const Complex*> pick(alphas.size());
    enumerate(sub, 0, pick, 0, [&](const std::vector<const Complex*>& pk) {
      std::vector<Complex> vals;
      for (auto* c : pk) vals.push_back(*c);
      auto r = recognize(k, alphas, vals);
      if (!r || !p.eval(*r).is_zero()) return false;
      if (std::find(found.begin(), found.end(), *r) == found.end()) found.push_back(*r);
      return true;
    });
  }
  return found;
}

// A monic quadratic factor of p over the field, if any; p has no roots.
std::optional<UPoly> quadratic_factor(const UPoly& p) {
  const NumberField& k = p.field();
  const auto alphas = embeddings(k);
  using Pair = std::pair<Complex, Complex>;
  std::vector<std::vector<Pair>> cands;
  for (const auto& a : alphas) {
    auto r = numeric_roots(embed_poly(p, a));
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = i + 1; j < r.size(); ++j) pairs.emplace_back(r[i] + r[j], r[i] * r[j]);
    cands.push_back(pairs);
  }
  std::optional<UPoly> out;
  std::vector<const Pair*> pick(alphas.size());
  enumerate(cands, 0, pick, 0, [&](const std::vector<const Pair*>& pk) {
    std::vector<Complex> sums, prods;
    for (auto* c : pk) {
      sums.push_back(c->first);
      prods.push_back(c->second);
    }
    auto s = recognize(k, alphas, sums);
    if (!s) return false;
    auto q = recognize(k, alphas, prods);
    if (!q) return false;
    UPoly cand(k, {*q, -*s, k.one()});
    if (!(p % cand).is_zero()) return false;
    out = cand;
    return true;
  });
  return out;
}

}  // namespace

LowDegreeFactorization factor_low_degree(const UPoly& p) {
  LowDegreeFactorization out;
  const NumberField& k = p.field();
  for (const auto& [g, mult] : p.squarefree_decomposition()) {
    UPoly rest = g;
    for (const auto& r : roots_squarefree(g)) {
      out.roots.emplace_back(r, mult);
      rest = rest / UPoly(k, {-r, k.one()});
    }
    while (rest.degree() >= 4) {
      auto q = quadratic_factor(rest);
      if (!q) break;
      out.quadratics.emplace_back(*q, mult);
      rest = rest / *q;
    }
    if (rest.degree() == 2) out.quadratics.emplace_back(rest.monic(), mult);
    else if (rest.degree() >= 3) out.others.emplace_back(rest.monic(), mult);
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<FieldElement> roots_in_field(const UPoly& p) {
  std::vector<FieldElement> out;
  for (const auto& [r, m] : factor_low_degree(p).roots) out.push_back(r);
  return out;
}

std::optional<FieldElement> sqrt_in_field(const FieldElement& a) {
  const NumberField k = a.field();
  if (a.is_zero()) return a;
  auto r = roots_squarefree(UPoly(k, {-a, k.zero(), k.one()}));
  if (r.empty()) return std::nullopt;
  std::sort(r.begin(), r.end());
  return r.back();
}

Integer squarefree_kernel(const Rational& q) {
  Integer n = q.get_num() * q.get_den();
  Integer sign = n < 0 ? -1 : 1;
  n = abs(n);
  Integer out = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return sign * out * n;
}

}  // namespace syzcurve
