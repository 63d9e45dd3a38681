#pragma once

#include <cstddef>
#include <vector>

#include "syzcurve/numfield.hpp"

namespace syzcurve {

class Matrix {
 public:
  Matrix(const NumberField& field, std::size_t rows, std::size_t cols);
  Matrix(const NumberField& field, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);
  static Matrix identity(const NumberField& field, std::size_t n);

  const NumberField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldElement& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, FieldElement v);
  std::vector<FieldElement> row(std::size_t i) const;
  const std::vector<FieldElement>& entries() const { return e_; }

  Matrix transpose() const;
  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  NumberField field_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> e_;
};

enum class Elimination {
  FractionFree,  // integral rows over Z[alpha]; needs an integral minpoly, else falls back
  Field,         // plain division over the field
};

std::size_t rank(const Matrix& m, Elimination strategy = Elimination::FractionFree);
// Right null space basis; each vector is checked against m before returning.
std::vector<std::vector<FieldElement>> kernel_basis(const Matrix& m, Elimination strategy = Elimination::FractionFree);
Matrix rref(const Matrix& m, Elimination strategy = Elimination::FractionFree);

// Rows with coordinates in Z[alpha]: entry j occupies [j*k, (j+1)*k) where k is
// the field degree. Requires an integral minpoly.
using IntRow = std::vector<Integer>;

// Scales by the lcm of all denominators and divides out the integer content.
IntRow to_integral_row(const NumberField& field, const std::vector<FieldElement>& row);
std::vector<FieldElement> from_integral_row(const NumberField& field, const IntRow& row);

// Fraction-free echelon engine. Rows are kept primitive; every pivot entry is
// a rational integer (non-rational pivots are multiplied by their algebraic
// adjugate first).
class IntegralEchelon {
 public:
  IntegralEchelon(const NumberField& field, std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }

  // Batch elimination: sweeps columns left to right, choosing among rows that
  // lead in the current column the one of least total bit length.
  void add_rows(std::vector<IntRow> rows);
  // Reduces a single row against the current pivots; keeps it if independent.
  bool insert(IntRow row);
  // True if the row lies in the current span (the row is not stored).
  bool in_span(IntRow row) const;

  // Back-substitution to reduced echelon form.
  void reduce();
  const std::vector<IntRow>& pivot_rows() const { return pivots_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivot_cols_; }
  // Basis of the right kernel of the stored rows, as integral rows; calls reduce().
  std::vector<IntRow> kernel();

 private:
  NumberField field_;
  std::size_t k_;
  std::size_t cols_;
  std::vector<Integer> minpoly_;
  std::vector<IntRow> pivots_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<long> pivot_of_col_;
  bool reduced_ = true;

  std::size_t lead(const IntRow& r, std::size_t from) const;
  bool entry_zero(const IntRow& r, std::size_t j) const;
  std::size_t bit_length(const IntRow& r, std::size_t from) const;
  void make_primitive(IntRow& r, std::size_t from) const;
  void make_pivot(IntRow& r, std::size_t col) const;
  // Clears target's entry at col; target is assumed zero before `from`.
  void eliminate(IntRow& target, const IntRow& pivot, std::size_t col, std::size_t from) const;
  void mul_entry(const Integer* a, const Integer* b, Integer* out) const;
  void store_pivot(IntRow r, std::size_t col);
  void reduce_against(IntRow& r) const;
};

}  // namespace syzcurve
