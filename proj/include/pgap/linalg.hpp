#pragma once

// Dense matrices over GF(q) and exact Gaussian elimination.

#include <cstddef>
#include <vector>

#include "pgap/finite_field.hpp"

namespace pgap {

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem* row(std::size_t r) { return data_.data() + r * cols_; }
  const Elem* row(std::size_t r) const { return data_.data() + r * cols_; }

  void append_row(const std::vector<Elem>& values);
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  bool is_zero() const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
  std::size_t rank() const noexcept { return pivots.size(); }
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Rows form a basis of {v : m v = 0}.
Matrix nullspace(const Matrix& m);

/// Nonzero rows of the reduced echelon form (a basis of the row space).
Matrix row_basis(const Matrix& m);

}  // namespace pgap
