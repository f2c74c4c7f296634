#include "hermcode/proj_space.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace hermcode {

ProjPoint normalize(const FieldCtx& ctx, std::vector<FieldElement> v) {
  auto last = std::find_if(v.rbegin(), v.rend(), [](FieldElement x) { return x.code != 0; });
  if (last == v.rend()) throw std::invalid_argument("the zero vector is not a projective point");
  if (last->code != 1) {
    const FieldElement s = ctx.inv(*last);
    for (auto& x : v) x = ctx.mul(x, s);
  }
  return ProjPoint{std::move(v)};
}

bool is_normalized(const ProjPoint& x) noexcept {
  for (auto it = x.coords.rbegin(); it != x.coords.rend(); ++it)
    if (it->code != 0) return it->code == 1;
  return false;
}

std::int64_t pi_count(int k, std::int64_t s) {
  if (k < -1) throw std::invalid_argument("pi_count needs k >= -1");
  std::int64_t total = 0, term = 1;
  for (int i = 0; i <= k; ++i, term *= s) total += term;
  return total;
}

std::vector<ProjPoint> enumerate_points(const FieldCtx& ctx, std::size_t n, std::uint64_t budget) {
  const std::uint64_t count = static_cast<std::uint64_t>(pi_count(static_cast<int>(n), ctx.q2()));
  if (count > budget) throw BudgetExceeded("projective point enumeration", count, budget);

  std::vector<ProjPoint> points;
  points.reserve(count);
  const std::uint32_t q2 = ctx.q2();
  for (std::size_t lead = 0; lead <= n; ++lead) {
    std::uint64_t block = 1;
    for (std::size_t i = 0; i < lead; ++i) block *= q2;
    for (std::uint64_t idx = 0; idx < block; ++idx) {
      std::vector<FieldElement> v(n + 1);
      v[lead] = FieldCtx::one();
      std::uint64_t rest = idx;
      for (std::size_t i = lead; i-- > 0; rest /= q2) v[i].code = static_cast<std::uint32_t>(rest % q2);
      points.push_back(ProjPoint{std::move(v)});
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

std::vector<Hyperplane> enumerate_hyperplanes(const FieldCtx& ctx, std::size_t n, std::uint64_t budget) {
  auto duals = enumerate_points(ctx, n, budget);
  std::vector<Hyperplane> out;
  out.reserve(duals.size());
  for (auto& d : duals) out.push_back(Hyperplane{std::move(d)});
  return out;
}

std::vector<ProjPoint> line_through(const FieldCtx& ctx, const ProjPoint& a, const ProjPoint& b) {
  if (a.coords.size() != b.coords.size()) throw std::invalid_argument("points live in different spaces");
  if (a == b) throw std::invalid_argument("a line needs two distinct points");
  std::vector<ProjPoint> pts;
  pts.reserve(ctx.q2() + 1);
  pts.push_back(a);
  for (std::uint32_t t = 0; t < ctx.q2(); ++t) {
    std::vector<FieldElement> v(a.coords.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = ctx.add(b.coords[i], ctx.mul(FieldElement{t}, a.coords[i]));
    pts.push_back(normalize(ctx, std::move(v)));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

bool incidence(const FieldCtx& ctx, const ProjPoint& x, const Hyperplane& h) {
  if (x.coords.size() != h.dual.coords.size()) throw std::invalid_argument("point and hyperplane dimensions differ");
  FieldElement s{};
  for (std::size_t i = 0; i < x.coords.size(); ++i) s = ctx.add(s, ctx.mul(x.coords[i], h.dual.coords[i]));
  return s.code == 0;
}

Hyperplane hyperplane_from(const FieldCtx& ctx, std::vector<FieldElement> dual) {
  return Hyperplane{normalize(ctx, std::move(dual))};
}

void write_points_csv(std::ostream& out, const FieldCtx& ctx, std::size_t n, std::span<const ProjPoint> points) {
  out << "# n=" << n << ",p=" << ctx.p() << ",e=" << ctx.e() << ",modulus=";
  for (std::size_t i = 0; i < ctx.modulus().size(); ++i) out << (i ? ";" : "") << ctx.modulus()[i];
  out << '\n';
  for (std::size_t i = 0; i <= n; ++i) out << (i ? "," : "") << 'x' << i;
  out << '\n';
  for (const auto& pt : points) {
    for (std::size_t i = 0; i < pt.coords.size(); ++i) out << (i ? "," : "") << pt.coords[i].code;
    out << '\n';
  }
}

}  // namespace hermcode
