#pragma once

// Homogeneous forms of degree d in n+1 variables over GF(q²).

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "hermcode/errors.hpp"
#include "hermcode/field.hpp"
#include "hermcode/linalg.hpp"
#include "hermcode/proj_space.hpp"

namespace hermcode {

/// Exponent tuples of all degree-d monomials in x_0..x_n, in graded-lex order
/// (x_0^d first, x_n^d last).
class MonomialBasis {
 public:
  MonomialBasis(std::size_t n, std::size_t d);

  std::size_t n() const noexcept { return n_; }
  std::size_t d() const noexcept { return d_; }
  std::size_t size() const noexcept { return exponents_.size(); }
  const std::vector<std::uint8_t>& exponent(std::size_t i) const { return exponents_[i]; }
  /// Position of an exponent tuple; throws std::out_of_range if absent.
  std::size_t index_of(std::span<const std::uint8_t> exponent) const;

  friend bool operator==(const MonomialBasis& a, const MonomialBasis& b) noexcept {
    return a.n_ == b.n_ && a.d_ == b.d_;
  }

 private:
  std::size_t n_, d_;
  std::vector<std::vector<std::uint8_t>> exponents_;
};

std::shared_ptr<const MonomialBasis> monomial_basis(std::size_t n, std::size_t d);

/// C(n + d, d).
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

class HomogeneousForm {
 public:
  HomogeneousForm(std::shared_ptr<const MonomialBasis> basis, std::vector<FieldElement> coeffs);
  /// The zero form.
  explicit HomogeneousForm(std::shared_ptr<const MonomialBasis> basis);

  const MonomialBasis& basis() const noexcept { return *basis_; }
  const std::shared_ptr<const MonomialBasis>& basis_ptr() const noexcept { return basis_; }
  std::size_t n() const noexcept { return basis_->n(); }
  std::size_t d() const noexcept { return basis_->d(); }
  const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
  std::vector<FieldElement>& coeffs() noexcept { return coeffs_; }
  bool is_zero() const noexcept;

  /// Scales so the first nonzero coefficient is 1.
  HomogeneousForm projectivized(const FieldCtx& ctx) const;

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return *a.basis_ == *b.basis_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<FieldElement> coeffs_;
};

FieldElement evaluate_form(const FieldCtx& ctx, const HomogeneousForm& f, const ProjPoint& x);
std::size_t intersection_count(const FieldCtx& ctx, const HomogeneousForm& f, std::span<const ProjPoint> points);

/// Values of every basis monomial at every point: rows follow the basis,
/// columns follow the point list.
Matrix evaluation_matrix(const FieldCtx& ctx, const MonomialBasis& basis, std::span<const ProjPoint> points);

/// Product of the linear forms of the given hyperplanes. Throws on an empty list.
HomogeneousForm product_of_hyperplanes(const FieldCtx& ctx, std::span<const Hyperplane> duals);

/// A contiguous slice [begin, end) of an enumeration index space.
struct Shard {
  std::uint64_t index = 0;
  std::uint64_t total = 1;
};

struct IndexRange {
  std::uint64_t begin = 0, end = 0;
  std::uint64_t size() const noexcept { return end - begin; }
};

IndexRange shard_range(std::uint64_t count, Shard shard);

/// ((q²)^k − 1)/(q² − 1), the number of coefficient vectors of length k up to scalars.
/// Saturates at UINT64_MAX.
std::uint64_t projective_count(std::uint32_t q2, std::size_t k);

/// Coefficient vector with the given projective index: vectors whose first nonzero
/// entry (equal to 1) sits at position t come before those with leading position t+1,
/// and within a block the trailing entries count up in base q², last entry fastest.
std::vector<FieldElement> projective_vector_at(std::uint32_t q2, std::size_t k, std::uint64_t index);
std::uint64_t projective_index_of(std::uint32_t q2, std::span<const FieldElement> v);

/// Visits every nonzero form of degree d up to scalars (first nonzero coefficient 1)
/// inside the shard, in index order. Returns the number of forms visited.
/// Throws BudgetExceeded if the shard holds more than `budget` forms.
std::uint64_t enumerate_forms_projective(
    const FieldCtx& ctx, std::size_t n, std::size_t d, Shard shard,
    const std::function<void(std::uint64_t index, const HomogeneousForm&)>& visit,
    std::uint64_t budget = kDefaultEvaluationBudget);

}  // namespace hermcode
