#include "hermcode/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hermcode {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<FieldElement> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix data size does not match its shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldCtx::one();
  return m;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](FieldElement x) { return x.code == 0; });
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  return t;
}

Matrix conjugate(const FieldCtx& ctx, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = ctx.frob(a(r, c));
  return out;
}

Matrix multiply(const FieldCtx& ctx, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElement aik = a(i, k);
      if (aik.code == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = ctx.add(out(i, j), ctx.mul(aik, b(k, j)));
    }
  return out;
}

Echelon row_echelon(const FieldCtx& ctx, Matrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c).code == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
    const FieldElement inv = ctx.inv(a(r, c));
    for (std::size_t j = c; j < cols; ++j) a(r, j) = ctx.mul(a(r, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).code == 0) continue;
      const FieldElement f = ctx.neg(a(i, c));
      for (std::size_t j = c; j < cols; ++j) a(i, j) = ctx.add(a(i, j), ctx.mul(f, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<FieldElement> kept(a.data().begin(), a.data().begin() + static_cast<std::ptrdiff_t>(r * cols));
  return Echelon{Matrix(r, cols, std::move(kept)), std::move(pivots)};
}

std::size_t rank(const FieldCtx& ctx, const Matrix& a) { return row_echelon(ctx, a).pivots.size(); }

std::vector<std::vector<FieldElement>> nullspace(const FieldCtx& ctx, const Matrix& a) {
  const Echelon ech = row_echelon(ctx, a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(cols);
    v[free] = FieldCtx::one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = ctx.neg(ech.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hermcode
