#pragma once

// Rational points, lines and hyperplanes of Pⁿ(GF(q²)).
//
// Points are normalized so that the last nonzero coordinate is 1, and the
// canonical order of any point list is lexicographic on coordinate codes.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hermcode/errors.hpp"
#include "hermcode/field.hpp"

namespace hermcode {

struct ProjPoint {
  std::vector<FieldElement> coords;

  std::size_t dim() const noexcept { return coords.size() - 1; }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// A hyperplane Σ uᵢxᵢ = 0, stored by its normalized dual vector u.
struct Hyperplane {
  ProjPoint dual;

  std::size_t dim() const noexcept { return dual.dim(); }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

/// Scales v so its last nonzero entry is 1. Throws std::invalid_argument on the zero vector.
ProjPoint normalize(const FieldCtx& ctx, std::vector<FieldElement> v);
bool is_normalized(const ProjPoint& x) noexcept;

/// 1 + s + ... + s^k, and 0 for k = -1.
std::int64_t pi_count(int k, std::int64_t s);

std::vector<ProjPoint> enumerate_points(const FieldCtx& ctx, std::size_t n,
                                        std::uint64_t budget = kDefaultPointBudget);
std::vector<Hyperplane> enumerate_hyperplanes(const FieldCtx& ctx, std::size_t n,
                                              std::uint64_t budget = kDefaultPointBudget);

/// The q² + 1 points of the line AB in canonical order. Throws if A == B.
std::vector<ProjPoint> line_through(const FieldCtx& ctx, const ProjPoint& a, const ProjPoint& b);

bool incidence(const FieldCtx& ctx, const ProjPoint& x, const Hyperplane& h);

/// The hyperplane with the given (not necessarily normalized) dual vector.
Hyperplane hyperplane_from(const FieldCtx& ctx, std::vector<FieldElement> dual);

/// CSV export: a `# n=..,p=..,e=..,modulus=..` comment line, a column header,
/// then one row of coordinate codes per point.
void write_points_csv(std::ostream& out, const FieldCtx& ctx, std::size_t n, std::span<const ProjPoint> points);

}  // namespace hermcode
