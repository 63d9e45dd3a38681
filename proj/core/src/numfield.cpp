#include "syzcurve/numfield.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

#include "syzcurve/errors.hpp"

namespace syzcurve {

namespace detail {

struct FieldData {
  std::string name;
  std::vector<Rational> minpoly;  // low to high, monic
  int k = 1;
  bool integral = true;
  // red[j - k] = alpha^j in the power basis, j = k .. 2k-2
  std::vector<std::vector<Rational>> red;
};

}  // namespace detail

namespace {

using RPoly = std::vector<Rational>;

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const RPoly& p) { return static_cast<int>(p.size()) - 1; }

RPoly poly_sub(const RPoly& a, const RPoly& b) {
  RPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

RPoly poly_mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

void poly_divmod(const RPoly& a, const RPoly& b, RPoly& q, RPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lc = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational c = r.back() / lc;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    trim(r);
  }
  trim(q);
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<std::string, std::vector<std::string>>, std::unique_ptr<detail::FieldData>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

const detail::FieldData* intern(const std::string& name, const std::vector<Rational>& minpoly) {
  std::vector<std::string> key_coeffs;
  for (const auto& c : minpoly) key_coeffs.push_back(c.get_str());
  auto key = std::make_pair(name, key_coeffs);
  Registry& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto it = reg.fields.find(key);
  if (it != reg.fields.end()) return it->second.get();
  auto d = std::make_unique<detail::FieldData>();
  d->name = name;
  d->minpoly = minpoly;
  d->k = static_cast<int>(minpoly.size()) - 1;
  for (const auto& c : minpoly) {
    if (c.get_den() != 1) d->integral = false;
  }
  const int k = d->k;
  // alpha^k = -(m_0 + m_1 alpha + ... + m_{k-1} alpha^{k-1})
  std::vector<Rational> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = -minpoly[static_cast<std::size_t>(i)];
  for (int j = k; j <= 2 * k - 2; ++j) {
    d->red.push_back(cur);
    std::vector<Rational> next(static_cast<std::size_t>(k));
    for (int i = 1; i < k; ++i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    const Rational top = cur[static_cast<std::size_t>(k - 1)];
    for (int i = 0; i < k; ++i) next[static_cast<std::size_t>(i)] -= top * minpoly[static_cast<std::size_t>(i)];
    cur = std::move(next);
  }
  const detail::FieldData* out = d.get();
  reg.fields.emplace(std::move(key), std::move(d));
  return out;
}

bool is_rational_square(const Rational& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

std::string power_term(const std::string& name, int e) {
  if (e == 0) return "";
  if (e == 1) return name;
  return name + "^" + std::to_string(e);
}

}  // namespace

std::string rational_to_string(const Rational& q) { return q.get_str(); }

NumberField::NumberField() : data_(intern("", {Rational(0), Rational(1)})) {}

NumberField NumberField::rationals() { return NumberField(); }

NumberField NumberField::adjoin_root(const std::string& name, const std::vector<Rational>& minpoly) {
  RPoly m = minpoly;
  trim(m);
  if (m.size() < 2) throw Error(ErrorCode::DegreeUnsupported, "minimal polynomial must have degree >= 1");
  if (m.size() > 5) throw Error(ErrorCode::DegreeUnsupported, "minimal polynomial degree " + std::to_string(m.size() - 1) + " exceeds 4");
  if (m.back() != 1) throw Error(ErrorCode::InvalidArgument, "minimal polynomial must be monic");
  if (name == "x" || name == "y" || name == "z") throw Error(ErrorCode::InvalidArgument, "generator name clashes with a coordinate");
  if (m.size() == 3) {
    Rational disc = m[1] * m[1] - 4 * m[0];
    if (is_rational_square(disc)) throw Error(ErrorCode::ProvablyReducible, "minimal polynomial has a rational root");
  }
  return NumberField(intern(name, m));
}

int NumberField::degree() const { return data_->k; }
const std::string& NumberField::generator_name() const { return data_->name; }
const std::vector<Rational>& NumberField::minpoly() const { return data_->minpoly; }
bool NumberField::has_integral_minpoly() const { return data_->integral; }

FieldElement NumberField::zero() const { return FieldElement(*this); }
FieldElement NumberField::one() const { return FieldElement(*this, Rational(1)); }

FieldElement NumberField::generator() const {
  if (degree() == 1) return FieldElement(*this, -data_->minpoly[0]);
  std::vector<Rational> c(static_cast<std::size_t>(degree()));
  c[1] = 1;
  return FieldElement(*this, std::move(c));
}

FieldElement NumberField::from_rational(const Rational& q) const { return FieldElement(*this, q); }
FieldElement NumberField::from_int(long v) const { return FieldElement(*this, Rational(v)); }

std::string NumberField::minpoly_string() const {
  std::string name = data_->name.empty() ? "t" : data_->name;
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = data_->minpoly[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << power_term(name, i);
    }
  }
  return os.str();
}

std::string NumberField::describe() const {
  if (data_->name.empty()) return "QQ";
  return "QQ[" + data_->name + "]/(" + minpoly_string() + ")";
}

FieldElement::FieldElement() : FieldElement(NumberField()) {}

FieldElement::FieldElement(const NumberField& field)
    : data_(field.data_), c_(static_cast<std::size_t>(field.degree())) {}

FieldElement::FieldElement(const NumberField& field, const Rational& q) : FieldElement(field) { c_[0] = q; }

FieldElement::FieldElement(const NumberField& field, std::vector<Rational> coeffs) : data_(field.data_) {
  const auto k = static_cast<std::size_t>(data_->k);
  if (coeffs.size() > k) {
    reduce_long(coeffs);
  } else {
    coeffs.resize(k);
  }
  c_ = std::move(coeffs);
}

void FieldElement::reduce_long(std::vector<Rational>& v) const {
  const auto k = static_cast<std::size_t>(data_->k);
  // Horner-style elimination of the top coefficient against the monic minpoly.
  while (v.size() > k) {
    Rational top = v.back();
    v.pop_back();
    if (top == 0) continue;
    std::size_t shift = v.size() - k;
    for (std::size_t i = 0; i < k; ++i) v[shift + i] -= top * data_->minpoly[i];
  }
  v.resize(k);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (data_ != o.data_) throw Error(ErrorCode::MixedFields, "operands belong to different number fields");
}

bool FieldElement::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational FieldElement::to_rational() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "element is not rational");
  return c_[0];
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  const auto k = static_cast<std::size_t>(a.data_->k);
  FieldElement r(a.field());
  if (k == 1) {
    r.c_[0] = a.c_[0] * b.c_[0];
    return r;
  }
  std::vector<Rational> t(2 * k - 1);
  for (std::size_t i = 0; i < k; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (b.c_[j] == 0) continue;
      t[i + j] += a.c_[i] * b.c_[j];
    }
  }
  for (std::size_t i = 0; i < k; ++i) r.c_[i] = t[i];
  for (std::size_t j = k; j < 2 * k - 1; ++j) {
    if (t[j] == 0) continue;
    const auto& red = a.data_->red[j - k];
    for (std::size_t i = 0; i < k; ++i) r.c_[i] += t[j] * red[i];
  }
  return r;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  *this = *this * o;
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (data_->k == 1) return FieldElement(field(), 1 / c_[0]);
  RPoly a = c_;
  trim(a);
  RPoly r0 = data_->minpoly, r1 = a;
  RPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    RPoly q, r;
    poly_divmod(r0, r1, q, r);
    RPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (deg(r0) > 0) throw Error(ErrorCode::ReducibleMinpoly, "zero divisor found; minimal polynomial is reducible");
  Rational g = r0[0];
  for (auto& c : s0) c /= g;
  return FieldElement(field(), std::move(s0));
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same(o);
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (data_->k == 1) {
    c_[0] /= o.c_[0];
    return *this;
  }
  *this = *this * o.inverse();
  return *this;
}

FieldElement FieldElement::pow(unsigned e) const {
  FieldElement result = field().one();
  FieldElement base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Rational FieldElement::norm() const {
  // Determinant of the multiplication-by-this matrix in the power basis.
  const int k = data_->k;
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k)));
  FieldElement basis = field().one();
  const FieldElement g = field().generator();
  for (int j = 0; j < k; ++j) {
    FieldElement col = *this * basis;
    for (int i = 0; i < k; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.c_[static_cast<std::size_t>(i)];
    basis *= g;
  }
  Rational det = 1;
  for (int c = 0; c < k; ++c) {
    int p = -1;
    for (int r = c; r < k; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        p = r;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(c)]);
      det = -det;
    }
    const Rational piv = m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    det *= piv;
    for (int r = c + 1; r < k; ++r) {
      Rational f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] / piv;
      if (f == 0) continue;
      for (int j = c; j < k; ++j)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -= f * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
    }
  }
  return det;
}

std::size_t FieldElement::bit_size() const {
  std::size_t s = 0;
  for (const auto& c : c_) {
    if (c == 0) continue;
    s += mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2);
  }
  return s;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

int FieldElement::compare(const FieldElement& o) const {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    int s = cmp(c_[i], o.c_[i]);
    if (s != 0) return s < 0 ? -1 : 1;
  }
  return 0;
}

std::string FieldElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << power_term(data_->name, static_cast<int>(i));
    }
  }
  return os.str();
}

std::string FieldElement::to_coefficient_string() const {
  if (is_rational()) return c_[0].get_str();
  return "(" + to_string() + ")";
}

IntegralModel integral_model(const NumberField& field) {
  IntegralModel m{field, field, Integer(1)};
  if (field.has_integral_minpoly()) return m;
  Integer d = 1;
  for (const auto& c : field.minpoly()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  const int k = field.degree();
  std::vector<Rational> mp(static_cast<std::size_t>(k) + 1);
  Integer p = 1;
  for (int i = k; i >= 0; --i) {
    mp[static_cast<std::size_t>(i)] = field.minpoly()[static_cast<std::size_t>(i)] * Rational(p);
    p *= d;
  }
  m.model = NumberField(intern(field.generator_name() + "_int", mp));
  m.scale = d;
  return m;
}

FieldElement IntegralModel::to_model(const FieldElement& a) const {
  if (scale == 1) return a;
  std::vector<Rational> c = a.coeffs();
  Integer p = 1;
  for (auto& v : c) {
    v /= Rational(p);
    p *= scale;
  }
  return FieldElement(model, std::move(c));
}

FieldElement IntegralModel::from_model(const FieldElement& b) const {
  if (scale == 1) return b;
  std::vector<Rational> c = b.coeffs();
  Integer p = 1;
  for (auto& v : c) {
    v *= Rational(p);
    p *= scale;
  }
  return FieldElement(source, std::move(c));
}

}  // namespace syzcurve
