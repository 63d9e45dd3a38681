#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "syzcurve/numfield.hpp"

namespace syzcurve {

struct Monomial {
  int a = 0, b = 0, c = 0;  // x^a y^b z^c
  int degree() const { return a + b + c; }
  int operator[](int i) const { return i == 0 ? a : (i == 1 ? b : c); }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(const Monomial& m, const Monomial& n) { return {m.a + n.a, m.b + n.b, m.c + n.c}; }
};

// Lex x > y > z, largest first.
struct MonomialDesc {
  bool operator()(const Monomial& m, const Monomial& n) const { return n < m; }
};

// Coordinates on S_r: all degree-r monomials in descending lex order.
namespace graded {
inline std::size_t dim(int r) { return r < 0 ? 0 : static_cast<std::size_t>((r + 1) * (r + 2) / 2); }
inline std::size_t index(const Monomial& m) {
  const auto s = static_cast<std::size_t>(m.b + m.c);
  return s * (s + 1) / 2 + static_cast<std::size_t>(m.c);
}
std::vector<Monomial> basis(int r);
}  // namespace graded

using Mat3 = std::array<std::array<FieldElement, 3>, 3>;

Mat3 mat3_identity(const NumberField& field);
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
FieldElement mat3_det(const Mat3& m);
Mat3 mat3_inverse(const Mat3& m);

class BivariatePoly;

class HomogPoly {
 public:
  using TermMap = std::map<Monomial, FieldElement, MonomialDesc>;

  HomogPoly() : HomogPoly(NumberField(), 0) {}
  HomogPoly(const NumberField& field, int degree);

  static HomogPoly constant(const FieldElement& c);
  static HomogPoly monomial(const FieldElement& c, const Monomial& m);
  static HomogPoly variable(const NumberField& field, int i);
  static HomogPoly linear(const FieldElement& a, const FieldElement& b, const FieldElement& c);
  // Inverse of dense(): coordinates in graded::basis(r).
  static HomogPoly from_dense(const NumberField& field, int r, const std::vector<FieldElement>& v);

  const NumberField& field() const { return field_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  FieldElement coeff(const Monomial& m) const;
  std::vector<FieldElement> dense() const;

  HomogPoly operator-() const;
  HomogPoly& operator+=(const HomogPoly& o);
  HomogPoly& operator-=(const HomogPoly& o);
  friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
  friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
  friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);
  friend HomogPoly operator*(const FieldElement& s, const HomogPoly& p);
  friend bool operator==(const HomogPoly& a, const HomogPoly& b);
  friend bool operator!=(const HomogPoly& a, const HomogPoly& b) { return !(a == b); }

  HomogPoly scale(const FieldElement& s) const { return s * *this; }
  HomogPoly mul_monomial(const Monomial& m) const;
  HomogPoly pow(unsigned e) const;

  HomogPoly partial(int var) const;
  FieldElement eval(const std::array<FieldElement, 3>& p) const;
  // p(M v): variable i is replaced by the i-th row of M applied to (x,y,z).
  HomogPoly substitute_linear(const Mat3& m) const;
  // chart: index of the variable set to 1; the remaining two keep their order.
  BivariatePoly dehomogenize(int chart) const;

  // Is c * this == other for some nonzero constant c?
  bool proportional_to(const HomogPoly& other) const;
  // Scaled so that the leading (largest monomial) coefficient is 1.
  HomogPoly monic() const;

  std::string to_string() const;

 private:
  NumberField field_;
  int degree_;
  TermMap terms_;
  void add_term(const Monomial& m, const FieldElement& c);
  friend class BivariatePoly;
};

class BivariatePoly {
 public:
  using Exp = std::pair<int, int>;
  using TermMap = std::map<Exp, FieldElement>;

  BivariatePoly() = default;
  explicit BivariatePoly(const NumberField& field) : field_(field) {}

  static BivariatePoly constant(const FieldElement& c);
  static BivariatePoly term(const FieldElement& c, int i, int j);

  const NumberField& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  FieldElement coeff(int i, int j) const;
  // Lowest total degree of a nonzero term; -1 for the zero polynomial.
  int order() const;
  int total_degree() const;

  void add_term(int i, int j, const FieldElement& c);
  BivariatePoly operator-() const;
  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }

  BivariatePoly partial(int var) const;
  // Drops all terms of total degree >= n.
  BivariatePoly truncate(int n) const;
  FieldElement eval(const FieldElement& u, const FieldElement& v) const;

  std::string to_string(const std::string& u = "u", const std::string& v = "v") const;

 private:
  NumberField field_;
  TermMap terms_;
};

bool is_reduced(const HomogPoly& p);

}  // namespace syzcurve
