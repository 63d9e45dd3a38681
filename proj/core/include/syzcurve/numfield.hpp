#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace syzcurve {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {
struct FieldData;
}

class FieldElement;
struct IntegralModel;

// Q or Q(alpha) = Q[t]/(m(t)), deg m <= 4. Fields are interned: two handles
// built from the same generator name and minimal polynomial compare equal and
// share storage for the life of the process.
class NumberField {
 public:
  NumberField();

  static NumberField rationals();
  // minpoly is given low-to-high and must be monic.
  static NumberField adjoin_root(const std::string& name, const std::vector<Rational>& minpoly);

  int degree() const;
  bool is_rationals() const { return degree() == 1; }
  const std::string& generator_name() const;
  const std::vector<Rational>& minpoly() const;
  // True when every minpoly coefficient is an integer (alpha is an algebraic integer).
  bool has_integral_minpoly() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement from_int(long v) const;

  std::string minpoly_string() const;
  std::string describe() const;

  const detail::FieldData* data() const { return data_; }

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.data_ == b.data_; }
  friend bool operator!=(const NumberField& a, const NumberField& b) { return a.data_ != b.data_; }

 private:
  explicit NumberField(const detail::FieldData* d) : data_(d) {}
  const detail::FieldData* data_;
  friend class FieldElement;
  friend IntegralModel integral_model(const NumberField& field);
};

class FieldElement {
 public:
  FieldElement();
  explicit FieldElement(const NumberField& field);
  FieldElement(const NumberField& field, const Rational& q);
  // Coefficients in the power basis; longer vectors are reduced mod the minpoly.
  FieldElement(const NumberField& field, std::vector<Rational> coeffs);

  NumberField field() const { return NumberField(data_); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational to_rational() const;

  FieldElement inverse() const;
  FieldElement pow(unsigned e) const;
  Rational norm() const;
  // Sum of bit lengths of numerators and denominators; used for pivot choice.
  std::size_t bit_size() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  // Total order on coefficient vectors, for deterministic sorting only.
  int compare(const FieldElement& o) const;
  friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.compare(b) < 0; }

  std::string to_string() const;
  // Like to_string, but parenthesized unless the value is rational.
  std::string to_coefficient_string() const;

 private:
  const detail::FieldData* data_;
  std::vector<Rational> c_;
  void check_same(const FieldElement& o) const;
  void reduce_long(std::vector<Rational>& v) const;
};

std::string rational_to_string(const Rational& q);

// Q(alpha) with a non-integral minpoly is isomorphic to Q(beta), beta = D*alpha,
// whose minpoly is integral. For integral fields scale is 1 and the model is
// the field itself.
struct IntegralModel {
  NumberField source;
  NumberField model;
  Integer scale;
  FieldElement to_model(const FieldElement& a) const;
  FieldElement from_model(const FieldElement& b) const;
};

IntegralModel integral_model(const NumberField& field);

}  // namespace syzcurve
