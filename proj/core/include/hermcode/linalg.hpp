#pragma once

// Dense matrices over GF(q²) and the elimination routines shared by the
// Hermitian and code modules.

#include <cstddef>
#include <vector>

#include "hermcode/field.hpp"

namespace hermcode {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<FieldElement> data);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<FieldElement>& data() const noexcept { return data_; }
  const FieldElement* row(std::size_t r) const noexcept { return data_.data() + r * cols_; }

  bool is_zero() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElement> data_;
};

Matrix transpose(const Matrix& a);
/// Entrywise a ↦ a^q.
Matrix conjugate(const FieldCtx& ctx, const Matrix& a);
Matrix multiply(const FieldCtx& ctx, const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon row_echelon(const FieldCtx& ctx, Matrix a);
std::size_t rank(const FieldCtx& ctx, const Matrix& a);
/// Basis of {v : a·v = 0}, one vector per free column.
std::vector<std::vector<FieldElement>> nullspace(const FieldCtx& ctx, const Matrix& a);

}  // namespace hermcode
