#include "syzcurve/exactla.hpp"

#include <algorithm>
#include <numeric>

#include "syzcurve/errors.hpp"

namespace syzcurve {

Matrix::Matrix(const NumberField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, field.zero()) {}

Matrix::Matrix(const NumberField& field, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : field_(field), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows * cols) throw Error(ErrorCode::InvalidArgument, "entry count does not match shape");
  for (const auto& v : e_)
    if (v.field() != field_) throw Error(ErrorCode::MixedFields, "matrix entry outside matrix field");
}

Matrix Matrix::identity(const NumberField& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = field.one();
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, FieldElement v) {
  if (v.field() != field_) throw Error(ErrorCode::MixedFields, "matrix entry outside matrix field");
  e_[i * cols_ + j] = std::move(v);
}

std::vector<FieldElement> Matrix::row(std::size_t i) const {
  return {e_.begin() + static_cast<std::ptrdiff_t>(i * cols_), e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.e_[j * rows_ + i] = at(i, j);
  return t;
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "vector length does not match column count");
  std::vector<FieldElement> out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

IntRow to_integral_row(const NumberField& field, const std::vector<FieldElement>& row) {
  const auto k = static_cast<std::size_t>(field.degree());
  Integer l = 1;
  for (const auto& v : row)
    for (const auto& c : v.coeffs())
      if (c != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntRow out(row.size() * k);
  Integer g = 0;
  for (std::size_t j = 0; j < row.size(); ++j)
    for (std::size_t i = 0; i < k; ++i) {
      const Rational& c = row[j].coeffs()[i];
      if (c == 0) continue;
      Integer& o = out[j * k + i];
      mpz_divexact(o.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
      o *= c.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), o.get_mpz_t());
    }
  if (g > 1)
    for (auto& o : out)
      if (o != 0) mpz_divexact(o.get_mpz_t(), o.get_mpz_t(), g.get_mpz_t());
  return out;
}

std::vector<FieldElement> from_integral_row(const NumberField& field, const IntRow& row) {
  const auto k = static_cast<std::size_t>(field.degree());
  std::vector<FieldElement> out;
  out.reserve(row.size() / k);
  for (std::size_t j = 0; j < row.size(); j += k) {
    std::vector<Rational> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = row[j + i];
    out.emplace_back(field, std::move(c));
  }
  return out;
}

IntegralEchelon::IntegralEchelon(const NumberField& field, std::size_t cols)
    : field_(field), k_(static_cast<std::size_t>(field.degree())), cols_(cols), pivot_of_col_(cols, -1) {
  if (!field.has_integral_minpoly())
    throw Error(ErrorCode::InvalidArgument, "fraction-free elimination needs an integral minimal polynomial");
  for (const auto& c : field.minpoly()) minpoly_.push_back(c.get_num());
}

bool IntegralEchelon::entry_zero(const IntRow& r, std::size_t j) const {
  for (std::size_t i = 0; i < k_; ++i)
    if (sgn(r[j * k_ + i]) != 0) return false;
  return true;
}

std::size_t IntegralEchelon::lead(const IntRow& r, std::size_t from) const {
  for (std::size_t j = from; j < cols_; ++j)
    if (!entry_zero(r, j)) return j;
  return cols_;
}

std::size_t IntegralEchelon::bit_length(const IntRow& r, std::size_t from) const {
  std::size_t s = 0;
  for (std::size_t i = from * k_; i < r.size(); ++i)
    if (sgn(r[i]) != 0) s += mpz_sizeinbase(r[i].get_mpz_t(), 2);
  return s;
}

void IntegralEchelon::make_primitive(IntRow& r, std::size_t from) const {
  Integer g = 0;
  for (std::size_t i = from * k_; i < r.size(); ++i) {
    if (sgn(r[i]) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[i].get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (std::size_t i = from * k_; i < r.size(); ++i)
    if (sgn(r[i]) != 0) mpz_divexact(r[i].get_mpz_t(), r[i].get_mpz_t(), g.get_mpz_t());
}

void IntegralEchelon::mul_entry(const Integer* a, const Integer* b, Integer* out) const {
  thread_local std::vector<Integer> t;
  const std::size_t k = k_;
  t.assign(2 * k - 1, Integer(0));
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < k; ++j)
      if (sgn(b[j]) != 0) mpz_addmul(t[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  for (std::size_t j = 2 * k - 2; j >= k; --j) {
    if (sgn(t[j]) == 0) continue;
    for (std::size_t i = 0; i < k; ++i)
      if (sgn(minpoly_[i]) != 0) mpz_submul(t[i + j - k].get_mpz_t(), t[j].get_mpz_t(), minpoly_[i].get_mpz_t());
  }
  for (std::size_t i = 0; i < k; ++i) mpz_swap(out[i].get_mpz_t(), t[i].get_mpz_t());
}

void IntegralEchelon::make_pivot(IntRow& r, std::size_t col) const {
  const std::size_t base = col * k_;
  bool rational = true;
  for (std::size_t i = 1; i < k_; ++i)
    if (sgn(r[base + i]) != 0) rational = false;
  if (!rational) {
    std::vector<Rational> p(k_);
    for (std::size_t i = 0; i < k_; ++i) p[i] = r[base + i];
    FieldElement inv = FieldElement(field_, std::move(p)).inverse();
    Integer l = 1;
    for (const auto& c : inv.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> u(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      const Rational& c = inv.coeffs()[i];
      mpz_divexact(u[i].get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
      u[i] *= c.get_num();
    }
    for (std::size_t j = col; j < cols_; ++j) {
      if (entry_zero(r, j)) continue;
      mul_entry(&r[j * k_], u.data(), &r[j * k_]);
    }
  }
  make_primitive(r, col);
  if (sgn(r[base]) < 0)
    for (std::size_t i = base; i < r.size(); ++i) r[i] = -r[i];
}

void IntegralEchelon::eliminate(IntRow& target, const IntRow& pivot, std::size_t col, std::size_t from) const {
  const std::size_t base = col * k_;
  const Integer& d = pivot[base];
  Integer g = d;
  for (std::size_t i = 0; i < k_; ++i)
    if (sgn(target[base + i]) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), target[base + i].get_mpz_t());
  Integer a;
  mpz_divexact(a.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
  std::vector<Integer> b(k_);
  bool b_rational = true;
  for (std::size_t i = 0; i < k_; ++i) {
    if (sgn(target[base + i]) != 0) mpz_divexact(b[i].get_mpz_t(), target[base + i].get_mpz_t(), g.get_mpz_t());
    if (i > 0 && sgn(b[i]) != 0) b_rational = false;
  }
  for (std::size_t i = 0; i < k_; ++i) target[base + i] = 0;
  const bool a_one = a == 1;
  if (!a_one)
    for (std::size_t i = from * k_; i < base; ++i)
      if (sgn(target[i]) != 0) mpz_mul(target[i].get_mpz_t(), target[i].get_mpz_t(), a.get_mpz_t());
  if (k_ == 1 || b_rational) {
    for (std::size_t i = base + k_; i < target.size(); ++i) {
      if (!a_one && sgn(target[i]) != 0) mpz_mul(target[i].get_mpz_t(), target[i].get_mpz_t(), a.get_mpz_t());
      if (sgn(pivot[i]) != 0) mpz_submul(target[i].get_mpz_t(), b[0].get_mpz_t(), pivot[i].get_mpz_t());
    }
  } else {
    std::vector<Integer> prod(k_);
    for (std::size_t j = col + 1; j < cols_; ++j) {
      Integer* t = &target[j * k_];
      if (!a_one)
        for (std::size_t i = 0; i < k_; ++i)
          if (sgn(t[i]) != 0) mpz_mul(t[i].get_mpz_t(), t[i].get_mpz_t(), a.get_mpz_t());
      if (entry_zero(pivot, j)) continue;
      mul_entry(&pivot[j * k_], b.data(), prod.data());
      for (std::size_t i = 0; i < k_; ++i) t[i] -= prod[i];
    }
  }
  make_primitive(target, from);
}

void IntegralEchelon::store_pivot(IntRow r, std::size_t col) {
  make_pivot(r, col);
  pivot_of_col_[col] = static_cast<long>(pivots_.size());
  pivots_.push_back(std::move(r));
  pivot_cols_.push_back(col);
  reduced_ = false;
}

void IntegralEchelon::reduce_against(IntRow& r) const {
  std::size_t c = lead(r, 0);
  while (c < cols_ && pivot_of_col_[c] >= 0) {
    eliminate(r, pivots_[static_cast<std::size_t>(pivot_of_col_[c])], c, c);
    c = lead(r, c + 1);
  }
}

bool IntegralEchelon::insert(IntRow row) {
  if (row.size() != cols_ * k_) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
  make_primitive(row, 0);
  reduce_against(row);
  std::size_t c = lead(row, 0);
  if (c == cols_) return false;
  store_pivot(std::move(row), c);
  return true;
}

bool IntegralEchelon::in_span(IntRow row) const {
  make_primitive(row, 0);
  reduce_against(row);
  return lead(row, 0) == cols_;
}

void IntegralEchelon::add_rows(std::vector<IntRow> rows) {
  std::vector<std::vector<IntRow>> bucket(cols_);
  for (auto& r : rows) {
    if (r.size() != cols_ * k_) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
    std::size_t c = lead(r, 0);
    if (c == cols_) continue;
    make_primitive(r, c);
    bucket[c].push_back(std::move(r));
  }
  rows.clear();
  for (std::size_t c = 0; c < cols_; ++c) {
    auto& b = bucket[c];
    if (b.empty()) continue;
    if (pivot_of_col_[c] < 0) {
      std::size_t best = 0, best_bits = bit_length(b[0], c);
      for (std::size_t i = 1; i < b.size(); ++i) {
        std::size_t bits = bit_length(b[i], c);
        if (bits < best_bits) {
          best = i;
          best_bits = bits;
        }
      }
      std::swap(b[0], b[best]);
      store_pivot(std::move(b[0]), c);
      b.erase(b.begin());
    }
    const IntRow& p = pivots_[static_cast<std::size_t>(pivot_of_col_[c])];
    for (auto& r : b) {
      eliminate(r, p, c, c);
      std::size_t nc = lead(r, c + 1);
      if (nc < cols_) bucket[nc].push_back(std::move(r));
    }
    std::vector<IntRow>().swap(b);
  }
}

void IntegralEchelon::reduce() {
  if (reduced_) return;
  std::vector<std::size_t> order(pivots_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_cols_[a] < pivot_cols_[b]; });
  std::vector<IntRow> rows;
  std::vector<std::size_t> cols;
  for (std::size_t i : order) {
    rows.push_back(std::move(pivots_[i]));
    cols.push_back(pivot_cols_[i]);
  }
  pivots_ = std::move(rows);
  pivot_cols_ = std::move(cols);
  for (std::size_t i = 0; i < pivots_.size(); ++i) pivot_of_col_[pivot_cols_[i]] = static_cast<long>(i);
  for (std::size_t p = pivots_.size(); p-- > 0;) {
    const std::size_t c = pivot_cols_[p];
    for (std::size_t q = 0; q < p; ++q) {
      if (entry_zero(pivots_[q], c)) continue;
      eliminate(pivots_[q], pivots_[p], c, pivot_cols_[q]);
    }
  }
  reduced_ = true;
}

std::vector<IntRow> IntegralEchelon::kernel() {
  reduce();
  std::vector<IntRow> out;
  std::vector<char> is_pivot(cols_, 0);
  for (std::size_t c : pivot_cols_) is_pivot[c] = 1;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Integer l = 1;
    for (std::size_t i = 0; i < pivots_.size(); ++i)
      if (pivot_cols_[i] < f && !entry_zero(pivots_[i], f))
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), pivots_[i][pivot_cols_[i] * k_].get_mpz_t());
    IntRow v(cols_ * k_);
    v[f * k_] = l;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const std::size_t pc = pivot_cols_[i];
      if (pc > f || entry_zero(pivots_[i], f)) continue;
      Integer s;
      mpz_divexact(s.get_mpz_t(), l.get_mpz_t(), pivots_[i][pc * k_].get_mpz_t());
      for (std::size_t t = 0; t < k_; ++t) v[pc * k_ + t] = -s * pivots_[i][f * k_ + t];
    }
    make_primitive(v, 0);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

// Plain Gauss-Jordan over the field.
struct FieldEchelon {
  std::vector<std::vector<FieldElement>> rows;
  std::vector<std::size_t> pivot_cols;

  FieldEchelon(const Matrix& m) {
    std::vector<std::vector<FieldElement>> work;
    for (std::size_t i = 0; i < m.rows(); ++i) work.push_back(m.row(i));
    const std::size_t ncols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < work.size(); ++c) {
      long best = -1;
      std::size_t best_bits = 0;
      for (std::size_t i = r; i < work.size(); ++i) {
        if (work[i][c].is_zero()) continue;
        std::size_t bits = work[i][c].bit_size();
        if (best < 0 || bits < best_bits) {
          best = static_cast<long>(i);
          best_bits = bits;
        }
      }
      if (best < 0) continue;
      std::swap(work[r], work[static_cast<std::size_t>(best)]);
      FieldElement inv = work[r][c].inverse();
      for (std::size_t j = c; j < ncols; ++j)
        if (!work[r][j].is_zero()) work[r][j] *= inv;
      for (std::size_t i = 0; i < work.size(); ++i) {
        if (i == r || work[i][c].is_zero()) continue;
        FieldElement f = work[i][c];
        for (std::size_t j = c; j < ncols; ++j)
          if (!work[r][j].is_zero()) work[i][j] -= f * work[r][j];
      }
      pivot_cols.push_back(c);
      ++r;
    }
    work.resize(r);
    rows = std::move(work);
  }
};

bool use_integral(const Matrix& m, Elimination s) {
  return s == Elimination::FractionFree && m.field().has_integral_minpoly();
}

IntegralEchelon integral_echelon(const Matrix& m) {
  IntegralEchelon e(m.field(), m.cols());
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_integral_row(m.field(), m.row(i)));
  e.add_rows(std::move(rows));
  return e;
}

}  // namespace

std::size_t rank(const Matrix& m, Elimination strategy) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (use_integral(m, strategy)) return integral_echelon(m).rank();
  return FieldEchelon(m).rows.size();
}

std::vector<std::vector<FieldElement>> kernel_basis(const Matrix& m, Elimination strategy) {
  std::vector<std::vector<FieldElement>> out;
  if (m.cols() == 0) return out;
  if (use_integral(m, strategy)) {
    IntegralEchelon e = integral_echelon(m);
    for (const auto& v : e.kernel()) out.push_back(from_integral_row(m.field(), v));
  } else {
    FieldEchelon e(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto c : e.pivot_cols) is_pivot[c] = 1;
    for (std::size_t f = 0; f < m.cols(); ++f) {
      if (is_pivot[f]) continue;
      std::vector<FieldElement> v(m.cols(), m.field().zero());
      v[f] = m.field().one();
      for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivot_cols[i]] = -e.rows[i][f];
      out.push_back(std::move(v));
    }
  }
  for (const auto& v : out)
    for (const auto& x : m.apply(v))
      if (!x.is_zero()) throw Error(ErrorCode::RankMismatch, "kernel vector failed verification");
  return out;
}

Matrix rref(const Matrix& m, Elimination strategy) {
  Matrix out(m.field(), m.rows(), m.cols());
  if (m.rows() == 0 || m.cols() == 0) return out;
  if (use_integral(m, strategy)) {
    IntegralEchelon e = integral_echelon(m);
    e.reduce();
    const auto k = static_cast<std::size_t>(m.field().degree());
    for (std::size_t i = 0; i < e.pivot_rows().size(); ++i) {
      auto row = from_integral_row(m.field(), e.pivot_rows()[i]);
      FieldElement inv = m.field().from_rational(Rational(1) / Rational(e.pivot_rows()[i][e.pivot_columns()[i] * k]));
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!row[j].is_zero()) out.set(i, j, row[j] * inv);
    }
  } else {
    FieldEchelon e(m);
    for (std::size_t i = 0; i < e.rows.size(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, e.rows[i][j]);
  }
  return out;
}

}  // namespace syzcurve
