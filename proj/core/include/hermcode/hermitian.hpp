#pragma once

// Hermitian matrices, the varieties they cut out, and their line and
// hyperplane sections.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hermcode/field.hpp"
#include "hermcode/linalg.hpp"
#include "hermcode/proj_space.hpp"

namespace hermcode {

/// An (n+1)×(n+1) matrix H ≠ 0 over GF(q²) with h_ij = h_ji^q.
class HermitianMatrix {
 public:
  /// Throws std::invalid_argument if m is zero, not square or not Hermitian.
  HermitianMatrix(const FieldCtx& ctx, Matrix m);

  static HermitianMatrix diagonal_ones(const FieldCtx& ctx, std::size_t n, std::size_t ones);

  /// Ambient projective dimension.
  std::size_t n() const noexcept { return m_.rows() - 1; }
  const Matrix& entries() const noexcept { return m_; }
  FieldElement operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  Matrix m_;
};

/// xᵀ H x^(q); always lies in GF(q).
FieldElement evaluate_hermitian_form(const FieldCtx& ctx, const HermitianMatrix& h, const ProjPoint& x);
FieldElement evaluate_hermitian_form(const FieldCtx& ctx, const Matrix& h, std::span<const FieldElement> x);

std::size_t hermitian_rank(const FieldCtx& ctx, const HermitianMatrix& h);

struct Congruence {
  Matrix transform;  // S, invertible
  std::size_t rank = 0;
};

/// Invertible S with Sᵀ H S^(q) = diag(1,…,1,0,…,0) carrying `rank` ones.
Congruence canonical_congruence(const FieldCtx& ctx, const HermitianMatrix& h);

/// Sᵀ H S^(q) for an arbitrary square S of matching size.
Matrix congruent_form(const FieldCtx& ctx, const Matrix& h, const Matrix& s);

class HermitianVariety {
 public:
  HermitianVariety(const FieldCtx& ctx, HermitianMatrix h);

  const FieldCtx& field() const noexcept { return ctx_; }
  const HermitianMatrix& matrix() const noexcept { return h_; }
  std::size_t n() const noexcept { return h_.n(); }
  std::size_t rank() const noexcept { return rank_; }
  bool nondegenerate() const noexcept { return rank_ == n() + 1; }
  bool is_rank_n_cone() const noexcept { return rank_ == n(); }
  /// Singular point of a rank-n cone; empty for every other rank.
  const std::optional<ProjPoint>& vertex() const noexcept { return vertex_; }

  bool contains(const ProjPoint& x) const;

  /// Rational points in canonical order. Computed on first use, then shared.
  const std::vector<ProjPoint>& points(std::uint64_t budget = kDefaultPointBudget) const;

 private:
  struct Cache;

  FieldCtx ctx_;
  HermitianMatrix h_;
  std::size_t rank_ = 0;
  std::optional<ProjPoint> vertex_;
  std::shared_ptr<Cache> cache_;
};

/// The rank-n cone x_0^{q+1} + … + x_{n-1}^{q+1} = 0 with vertex [0:…:0:1].
HermitianVariety make_standard_cone(const FieldCtx& ctx, std::size_t n);
/// The non-degenerate x_0^{q+1} + … + x_n^{q+1} = 0.
HermitianVariety make_standard_nondegenerate(const FieldCtx& ctx, std::size_t n);

enum class RankCase { Nondegenerate, RankNCone };

/// Closed-form point count of a non-degenerate variety in Pⁿ, or of a rank-n cone
/// (1 + q² times the non-degenerate count in P^{n-1}).
std::int64_t count_points_formula(int n, RankCase rank_case, std::int64_t q);

enum class LineType { Tangent, Secant, Contained, Unknown };

struct LineClassification {
  LineType type = LineType::Unknown;
  std::size_t count = 0;
};

LineClassification classify_line(const FieldCtx& ctx, const HermitianVariety& v, const ProjPoint& a,
                                 const ProjPoint& b);

/// Polar hyperplane H·a^(q) at a smooth rational point a of the variety.
Hyperplane tangent_hyperplane(const FieldCtx& ctx, const HermitianVariety& v, const ProjPoint& a);

enum class SectionType { Tangent, NonTangent, VertexAvoiding, VertexIncident, Other };

struct SectionInfo {
  std::size_t rank = 0;   // rank of the form restricted to the hyperplane
  std::size_t count = 0;  // rational points of the variety on the hyperplane
  SectionType type = SectionType::Other;
};

SectionInfo hyperplane_section(const FieldCtx& ctx, const HermitianVariety& v, const Hyperplane& plane);

/// n×(n+1) matrix whose rows span the hyperplane.
Matrix hyperplane_basis(const FieldCtx& ctx, const Hyperplane& plane);

const char* to_string(LineType t) noexcept;
const char* to_string(SectionType t) noexcept;

}  // namespace hermcode
