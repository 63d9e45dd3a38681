#pragma once

#include <random>

#include "syzcurve/exactla.hpp"
#include "syzcurve/parse.hpp"
#include "syzcurve/polyring.hpp"
#include "syzcurve/syzygy.hpp"

namespace syzcurve::testing {

inline FieldElement random_element(const NumberField& k, std::mt19937& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  std::vector<Rational> c;
  for (int i = 0; i < k.degree(); ++i) {
    Rational q(num(rng), i == 0 ? den(rng) : 1);
    q.canonicalize();
    c.push_back(i == 0 || rng() % 2 ? q : Rational(0));
  }
  return FieldElement(k, c);
}

inline HomogPoly random_poly(const NumberField& k, int d, std::mt19937& rng) {
  HomogPoly f(k, d);
  for (const auto& m : graded::basis(d))
    if (rng() % 3 != 0) f += HomogPoly::monomial(random_element(k, rng), m);
  return f;
}

inline Mat3 random_invertible(const NumberField& k, std::mt19937& rng) {
  for (;;) {
    Mat3 m;
    for (auto& row : m)
      for (auto& v : row) v = k.from_int(static_cast<int>(rng() % 7) - 3);
    if (!mat3_det(m).is_zero()) return m;
  }
}

inline Matrix random_matrix(const NumberField& k, std::size_t rows, std::size_t cols, std::mt19937& rng,
                            int target_rank = -1) {
  if (target_rank < 0) {
    Matrix m(k, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (rng() % 4 != 0) m.set(i, j, random_element(k, rng));
    return m;
  }
  // Product of rows x r and r x cols random factors.
  Matrix a(k, rows, static_cast<std::size_t>(target_rank)), b(k, static_cast<std::size_t>(target_rank), cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (int j = 0; j < target_rank; ++j) a.set(i, static_cast<std::size_t>(j), random_element(k, rng));
  for (int i = 0; i < target_rank; ++i)
    for (std::size_t j = 0; j < cols; ++j) b.set(static_cast<std::size_t>(i), j, random_element(k, rng));
  Matrix m(k, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      FieldElement s = k.zero();
      for (int t = 0; t < target_rank; ++t) s += a.at(i, static_cast<std::size_t>(t)) * b.at(static_cast<std::size_t>(t), j);
      m.set(i, j, s);
    }
  return m;
}

// Textbook elimination: first nonzero pivot, no scaling tricks.
inline std::size_t naive_rank(const Matrix& m) {
  std::vector<std::vector<FieldElement>> a;
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(m.row(i));
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c].is_zero()) continue;
      FieldElement f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline SyzygyVector vec(const HomogPoly& a, const HomogPoly& b, const HomogPoly& c) {
  SyzygyVector v;
  v.degree = a.degree();
  v.comps = {a, b, c};
  return v;
}

// Product of random lines and, sometimes, a conic; rejected if not reduced.
inline HomogPoly random_arrangement(std::mt19937& rng, int lines, bool conic) {
  const NumberField QQ = NumberField::rationals();
  for (;;) {
    HomogPoly f = HomogPoly::constant(QQ.one());
    for (int i = 0; i < lines; ++i) {
      auto c = [&] { return QQ.from_int(static_cast<int>(rng() % 7) - 3); };
      f = f * HomogPoly::linear(c(), c(), c());
    }
    if (conic) f = f * parse_poly("x^2 + y^2 - " + std::to_string(1 + rng() % 4) + "*z^2 + x*y", QQ);
    if (f.is_zero() || f.degree() < 2) continue;
    if (is_reduced(f)) return f;
  }
}

// dim of the degree-r span of monomial multiples of `gens`.
inline std::size_t span_rank(const std::vector<SyzygyVector>& gens, int r, const std::vector<SyzygyVector>& extra = {}) {
  const NumberField k = gens.front().comps[0].field();
  std::vector<std::vector<FieldElement>> rows;
  auto push = [&](const std::array<HomogPoly, 3>& c) {
    std::vector<FieldElement> row;
    for (const auto& p : c) {
      auto d = p.dense();
      row.insert(row.end(), d.begin(), d.end());
    }
    rows.push_back(row);
  };
  for (const auto& g : gens) {
    if (g.degree > r) continue;
    for (const auto& n : graded::basis(r - g.degree))
      push({g.comps[0].mul_monomial(n), g.comps[1].mul_monomial(n), g.comps[2].mul_monomial(n)});
  }
  for (const auto& e : extra) push(e.comps);
  if (rows.empty()) return 0;
  Matrix m(k, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
  return naive_rank(m);
}

}  // namespace syzcurve::testing
