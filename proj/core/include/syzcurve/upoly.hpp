#pragma once

#include <string>
#include <utility>
#include <vector>

#include "syzcurve/numfield.hpp"

namespace syzcurve {

// Dense univariate polynomial over a number field, coefficients low to high.
class UPoly {
 public:
  explicit UPoly(const NumberField& field);
  UPoly(const NumberField& field, std::vector<FieldElement> coeffs);

  static UPoly constant(const FieldElement& c);
  static UPoly monomial(const FieldElement& c, int e);

  const NumberField& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FieldElement coeff(int i) const;
  const FieldElement& lc() const { return c_.back(); }
  const std::vector<FieldElement>& coeffs() const { return c_; }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const FieldElement& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b);

  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  friend UPoly operator/(const UPoly& a, const UPoly& b);
  friend UPoly operator%(const UPoly& a, const UPoly& b);

  UPoly monic() const;
  UPoly derivative() const;
  FieldElement eval(const FieldElement& v) const;
  UPoly pow(unsigned e) const;

  // Yun's algorithm: returns (factor, multiplicity) with squarefree, pairwise
  // coprime monic factors of positive degree.
  std::vector<std::pair<UPoly, int>> squarefree_decomposition() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  NumberField field_;
  std::vector<FieldElement> c_;
  void trim();
};

UPoly gcd(const UPoly& a, const UPoly& b);

}  // namespace syzcurve
