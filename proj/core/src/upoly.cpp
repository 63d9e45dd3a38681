#include "syzcurve/upoly.hpp"

#include <sstream>

#include "syzcurve/errors.hpp"

namespace syzcurve {

UPoly::UPoly(const NumberField& field) : field_(field) {}

UPoly::UPoly(const NumberField& field, std::vector<FieldElement> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.field() != field_) throw Error(ErrorCode::MixedFields, "coefficient outside polynomial field");
  trim();
}

UPoly UPoly::constant(const FieldElement& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::monomial(const FieldElement& c, int e) {
  std::vector<FieldElement> v(static_cast<std::size_t>(e) + 1, c.field().zero());
  v.back() = c;
  return UPoly(c.field(), std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return field_.zero();
  return c_[static_cast<std::size_t>(i)];
}

UPoly UPoly::operator-() const {
  UPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::MixedFields, "polynomials over different fields");
  UPoly r(a.field_);
  std::size_t n = std::max(a.c_.size(), b.c_.size());
  r.c_.assign(n, a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::MixedFields, "polynomials over different fields");
  UPoly r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

UPoly operator*(const FieldElement& s, const UPoly& a) {
  UPoly r(a);
  for (auto& c : r.c_) c = s * c;
  r.trim();
  return r;
}

bool operator==(const UPoly& a, const UPoly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  r = a;
  q = UPoly(a.field_);
  if (a.degree() < b.degree()) return;
  q.c_.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), a.field_.zero());
  const FieldElement inv = b.lc().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    FieldElement c = r.lc() * inv;
    q.c_[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= b.degree(); ++i)
      r.c_[static_cast<std::size_t>(shift + i)] -= c * b.c_[static_cast<std::size_t>(i)];
    r.trim();
  }
  q.trim();
}

UPoly operator/(const UPoly& a, const UPoly& b) {
  UPoly q(a.field_), r(a.field_);
  UPoly::divmod(a, b, q, r);
  return q;
}

UPoly operator%(const UPoly& a, const UPoly& b) {
  UPoly q(a.field_), r(a.field_);
  UPoly::divmod(a, b, q, r);
  return r;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return lc().inverse() * *this;
}

UPoly UPoly::derivative() const {
  UPoly r(field_);
  if (degree() <= 0) return r;
  r.c_.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(field_.from_int(static_cast<long>(i)) * c_[i]);
  r.trim();
  return r;
}

FieldElement UPoly::eval(const FieldElement& v) const {
  FieldElement acc = field_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result = constant(field_.one());
  UPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<std::pair<UPoly, int>> UPoly::squarefree_decomposition() const {
  std::vector<std::pair<UPoly, int>> out;
  if (degree() <= 0) return out;
  UPoly f = monic();
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = f / a;
  UPoly c = fp / a;
  UPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const FieldElement& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c.to_coefficient_string();
    if (i > 0) os << "*" << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace syzcurve
