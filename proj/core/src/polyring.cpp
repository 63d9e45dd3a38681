#include "syzcurve/polyring.hpp"

#include <sstream>

#include "syzcurve/errors.hpp"
#include "syzcurve/upoly.hpp"

namespace syzcurve {

namespace graded {

std::vector<Monomial> basis(int r) {
  std::vector<Monomial> out;
  if (r < 0) return out;
  out.reserve(dim(r));
  for (int a = r; a >= 0; --a)
    for (int b = r - a; b >= 0; --b) out.push_back({a, b, r - a - b});
  return out;
}

}  // namespace graded

Mat3 mat3_identity(const NumberField& field) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = i == j ? field.one() : field.zero();
  return m;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  const NumberField field = a[0][0].field();
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FieldElement s = field.zero();
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

FieldElement mat3_det(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 mat3_inverse(const Mat3& m) {
  FieldElement det = mat3_det(m);
  if (det.is_zero()) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
  FieldElement inv = det.inverse();
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) * inv;
    }
  return r;
}

HomogPoly::HomogPoly(const NumberField& field, int degree) : field_(field), degree_(degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
}

HomogPoly HomogPoly::constant(const FieldElement& c) { return monomial(c, {0, 0, 0}); }

HomogPoly HomogPoly::monomial(const FieldElement& c, const Monomial& m) {
  HomogPoly p(c.field(), m.degree());
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

HomogPoly HomogPoly::variable(const NumberField& field, int i) {
  Monomial m{i == 0 ? 1 : 0, i == 1 ? 1 : 0, i == 2 ? 1 : 0};
  return monomial(field.one(), m);
}

HomogPoly HomogPoly::linear(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  HomogPoly p(a.field(), 1);
  p.add_term({1, 0, 0}, a);
  p.add_term({0, 1, 0}, b);
  p.add_term({0, 0, 1}, c);
  return p;
}

HomogPoly HomogPoly::from_dense(const NumberField& field, int r, const std::vector<FieldElement>& v) {
  if (v.size() != graded::dim(r)) throw Error(ErrorCode::DegreeMismatch, "dense vector has wrong length");
  HomogPoly p(field, r);
  auto basis = graded::basis(r);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) p.terms_.emplace_hint(p.terms_.end(), basis[i], v[i]);
  return p;
}

void HomogPoly::add_term(const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FieldElement HomogPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

std::vector<FieldElement> HomogPoly::dense() const {
  std::vector<FieldElement> v(graded::dim(degree_), field_.zero());
  for (const auto& [m, c] : terms_) v[graded::index(m)] = c;
  return v;
}

HomogPoly HomogPoly::operator-() const {
  HomogPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& o) {
  if (field_ != o.field_) throw Error(ErrorCode::MixedFields, "polynomials over different fields");
  if (degree_ != o.degree_) throw Error(ErrorCode::DegreeMismatch, "adding polynomials of degrees " + std::to_string(degree_) + " and " + std::to_string(o.degree_));
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& o) { return *this += -o; }

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::MixedFields, "polynomials over different fields");
  HomogPoly r(a.field_, a.degree_ + b.degree_);
  for (const auto& [m, c] : a.terms_)
    for (const auto& [n, e] : b.terms_) r.add_term(m * n, c * e);
  return r;
}

HomogPoly operator*(const FieldElement& s, const HomogPoly& p) {
  if (s.field() != p.field_) throw Error(ErrorCode::MixedFields, "scalar outside polynomial field");
  HomogPoly r(p.field_, p.degree_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), m, s * c);
  return r;
}

bool operator==(const HomogPoly& a, const HomogPoly& b) {
  return a.field_ == b.field_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

HomogPoly HomogPoly::mul_monomial(const Monomial& n) const {
  HomogPoly r(field_, degree_ + n.degree());
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * n, c);
  return r;
}

HomogPoly HomogPoly::pow(unsigned e) const {
  HomogPoly result = constant(field_.one());
  HomogPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

HomogPoly HomogPoly::partial(int var) const {
  if (degree_ < 1) throw Error(ErrorCode::InvalidArgument, "derivative of a constant");
  HomogPoly r(field_, degree_ - 1);
  for (const auto& [m, c] : terms_) {
    int e = m[var];
    if (e == 0) continue;
    Monomial n = m;
    if (var == 0) n.a -= 1;
    else if (var == 1) n.b -= 1;
    else n.c -= 1;
    r.add_term(n, field_.from_int(e) * c);
  }
  return r;
}

FieldElement HomogPoly::eval(const std::array<FieldElement, 3>& p) const {
  std::array<std::vector<FieldElement>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    pw[i].push_back(field_.one());
    for (int e = 1; e <= degree_; ++e) pw[i].push_back(pw[i].back() * p[i]);
  }
  FieldElement s = field_.zero();
  for (const auto& [m, c] : terms_) s += c * pw[0][m.a] * pw[1][m.b] * pw[2][m.c];
  return s;
}

HomogPoly HomogPoly::substitute_linear(const Mat3& mat) const {
  if (mat3_det(mat).is_zero()) throw Error(ErrorCode::SingularMatrix, "substitution matrix is singular");
  std::array<std::vector<HomogPoly>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    HomogPoly l = linear(mat[i][0], mat[i][1], mat[i][2]);
    pw[i].push_back(constant(field_.one()));
    for (int e = 1; e <= degree_; ++e) pw[i].push_back(pw[i].back() * l);
  }
  HomogPoly r(field_, degree_);
  for (const auto& [m, c] : terms_) r += c * (pw[0][m.a] * pw[1][m.b] * pw[2][m.c]);
  return r;
}

BivariatePoly HomogPoly::dehomogenize(int chart) const {
  BivariatePoly r(field_);
  for (const auto& [m, c] : terms_) {
    int i, j;
    if (chart == 0) { i = m.b; j = m.c; }
    else if (chart == 1) { i = m.a; j = m.c; }
    else { i = m.a; j = m.b; }
    r.add_term(i, j, c);
  }
  return r;
}

bool HomogPoly::proportional_to(const HomogPoly& o) const {
  if (field_ != o.field_ || degree_ != o.degree_ || terms_.size() != o.terms_.size() || is_zero() || o.is_zero())
    return false;
  FieldElement ratio = o.terms_.begin()->second / terms_.begin()->second;
  auto it = o.terms_.begin();
  for (const auto& [m, c] : terms_) {
    if (it->first != m || it->second != ratio * c) return false;
    ++it;
  }
  return true;
}

HomogPoly HomogPoly::monic() const {
  if (is_zero()) return *this;
  return terms_.begin()->second.inverse() * *this;
}

std::string HomogPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    const char* names[3] = {"x", "y", "z"};
    for (int i = 0; i < 3; ++i) {
      int e = m[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (c.is_rational()) {
      Rational q = c.to_rational();
      Rational a = abs(q);
      if (first) {
        if (q < 0) os << "-";
      } else {
        os << (q < 0 ? " - " : " + ");
      }
      if (mono.empty()) os << a.get_str();
      else if (a == 1) os << mono;
      else os << a.get_str() << "*" << mono;
    } else {
      if (!first) os << " + ";
      os << c.to_coefficient_string();
      if (!mono.empty()) os << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

BivariatePoly BivariatePoly::constant(const FieldElement& c) { return term(c, 0, 0); }

BivariatePoly BivariatePoly::term(const FieldElement& c, int i, int j) {
  BivariatePoly p(c.field());
  p.add_term(i, j, c);
  return p;
}

FieldElement BivariatePoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? field_.zero() : it->second;
}

int BivariatePoly::order() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = e.first + e.second;
    if (best < 0 || d < best) best = d;
  }
  return best;
}

int BivariatePoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, e.first + e.second);
  return best;
}

void BivariatePoly::add_term(int i, int j, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find({i, j});
  if (it == terms_.end()) {
    terms_.emplace(Exp{i, j}, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r(a);
  for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, c);
  return r;
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) { return a + (-b); }

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r(a.field_);
  for (const auto& [e, c] : a.terms_)
    for (const auto& [f, d] : b.terms_) r.add_term(e.first + f.first, e.second + f.second, c * d);
  return r;
}

BivariatePoly BivariatePoly::partial(int var) const {
  BivariatePoly r(field_);
  for (const auto& [e, c] : terms_) {
    int k = var == 0 ? e.first : e.second;
    if (k == 0) continue;
    if (var == 0) r.add_term(e.first - 1, e.second, field_.from_int(k) * c);
    else r.add_term(e.first, e.second - 1, field_.from_int(k) * c);
  }
  return r;
}

BivariatePoly BivariatePoly::truncate(int n) const {
  BivariatePoly r(field_);
  for (const auto& [e, c] : terms_)
    if (e.first + e.second < n) r.terms_.emplace(e, c);
  return r;
}

FieldElement BivariatePoly::eval(const FieldElement& u, const FieldElement& v) const {
  FieldElement s = field_.zero();
  for (const auto& [e, c] : terms_) s += c * u.pow(static_cast<unsigned>(e.first)) * v.pow(static_cast<unsigned>(e.second));
  return s;
}

std::string BivariatePoly::to_string(const std::string& u, const std::string& v) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_coefficient_string();
    if (e.first) os << "*" << u << (e.first > 1 ? "^" + std::to_string(e.first) : "");
    if (e.second) os << "*" << v << (e.second > 1 ? "^" + std::to_string(e.second) : "");
  }
  return os.str();
}

namespace {

// f(x, a, 1) as a polynomial in x.
UPoly specialize(const HomogPoly& f, const FieldElement& a) {
  const NumberField& field = f.field();
  std::vector<FieldElement> c(static_cast<std::size_t>(f.degree()) + 1, field.zero());
  std::vector<FieldElement> apow{field.one()};
  for (int e = 1; e <= f.degree(); ++e) apow.push_back(apow.back() * a);
  for (const auto& [m, v] : f.terms()) c[static_cast<std::size_t>(m.a)] += v * apow[static_cast<std::size_t>(m.b)];
  return UPoly(field, std::move(c));
}

}  // namespace

bool is_reduced(const HomogPoly& p) {
  if (p.is_zero()) return false;
  const int d = p.degree();
  if (d <= 1) return true;
  const NumberField& field = p.field();
  // Make the x^d coefficient nonzero: f(x, y + a x, z + b x).
  HomogPoly f = p;
  bool found = false;
  for (int s = 0; s <= 2 * d + 2 && !found; ++s)
    for (int a = 0; a <= s && !found; ++a) {
      FieldElement fa = field.from_int(a), fb = field.from_int(s - a);
      if (p.eval({field.one(), fa, fb}).is_zero()) continue;
      Mat3 m = mat3_identity(field);
      m[1][0] = fa;
      m[2][0] = fb;
      f = p.substitute_linear(m);
      found = true;
    }
  if (!found) throw Error(ErrorCode::InvalidArgument, "no admissible coordinate change found");
  // f is monic-up-to-scalar in x. f is squarefree iff its x-discriminant, a
  // nonzero form of degree d(d-1) in (y,z), survives at some (a,1) among
  // d(d-1)+1 sample points; any square factor survives every specialization.
  for (int a = 0; a <= d * (d - 1); ++a) {
    UPoly g = specialize(f, field.from_int(a));
    if (gcd(g, g.derivative()).degree() == 0) return true;
  }
  return false;
}

}  // namespace syzcurve
