#include "hermcode/hermitian.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace hermcode {

HermitianMatrix::HermitianMatrix(const FieldCtx& ctx, Matrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) throw std::invalid_argument("Hermitian matrix must be square");
  if (m_.is_zero()) throw std::invalid_argument("Hermitian matrix must be nonzero");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j)
      if (m_(i, j) != ctx.frob(m_(j, i))) throw std::invalid_argument("matrix is not Hermitian");
}

HermitianMatrix HermitianMatrix::diagonal_ones(const FieldCtx& ctx, std::size_t n, std::size_t ones) {
  Matrix m(n + 1, n + 1);
  for (std::size_t i = 0; i < ones && i <= n; ++i) m(i, i) = FieldCtx::one();
  return HermitianMatrix(ctx, std::move(m));
}

FieldElement evaluate_hermitian_form(const FieldCtx& ctx, const Matrix& h, std::span<const FieldElement> x) {
  if (x.size() != h.rows()) throw std::invalid_argument("point dimension does not match the Hermitian matrix");
  FieldElement total{};
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].code == 0) continue;
    FieldElement col{};
    for (std::size_t i = 0; i < x.size(); ++i) col = ctx.add(col, ctx.mul(x[i], h(i, j)));
    total = ctx.add(total, ctx.mul(col, ctx.frob(x[j])));
  }
  return total;
}

FieldElement evaluate_hermitian_form(const FieldCtx& ctx, const HermitianMatrix& h, const ProjPoint& x) {
  return evaluate_hermitian_form(ctx, h.entries(), x.coords);
}

std::size_t hermitian_rank(const FieldCtx& ctx, const HermitianMatrix& h) { return rank(ctx, h.entries()); }

Matrix congruent_form(const FieldCtx& ctx, const Matrix& h, const Matrix& s) {
  return multiply(ctx, multiply(ctx, transpose(s), h), conjugate(ctx, s));
}

namespace {

void add_column_multiple(const FieldCtx& ctx, Matrix& s, std::size_t dst, std::size_t src, FieldElement f) {
  for (std::size_t r = 0; r < s.rows(); ++r) s(r, dst) = ctx.add(s(r, dst), ctx.mul(f, s(r, src)));
}

}  // namespace

Congruence canonical_congruence(const FieldCtx& ctx, const HermitianMatrix& h) {
  const std::size_t size = h.entries().rows();
  Matrix s = Matrix::identity(size);
  std::size_t k = 0;
  while (k < size) {
    Matrix a = congruent_form(ctx, h.entries(), s);
    std::size_t piv = size;
    for (std::size_t i = k; i < size && piv == size; ++i)
      if (a(i, i).code != 0) piv = i;

    if (piv == size) {
      // No usable diagonal entry: e_i ← e_i + λ e_j with h λ^q + h^q λ = 1.
      std::size_t pi = size, pj = size;
      for (std::size_t i = k; i < size && pi == size; ++i)
        for (std::size_t j = i + 1; j < size; ++j)
          if (a(i, j).code != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == size) break;  // remaining block is zero
      const FieldElement mu = ctx.trace_preimage(FieldCtx::one());
      const FieldElement lambda = ctx.frob(ctx.div(mu, a(pi, pj)));
      add_column_multiple(ctx, s, pi, pj, lambda);
      piv = pi;
    }

    if (piv != k)
      for (std::size_t r = 0; r < size; ++r) std::swap(s(r, piv), s(r, k));
    a = congruent_form(ctx, h.entries(), s);
    const FieldElement pivot = a(k, k);
    for (std::size_t j = k + 1; j < size; ++j) {
      if (a(j, k).code == 0) continue;
      add_column_multiple(ctx, s, j, k, ctx.neg(ctx.div(a(j, k), pivot)));
    }
    const FieldElement scale = ctx.inv(ctx.norm_preimage(pivot));
    for (std::size_t r = 0; r < size; ++r) s(r, k) = ctx.mul(s(r, k), scale);
    ++k;
  }
  return Congruence{std::move(s), k};
}

struct HermitianVariety::Cache {
  std::once_flag once;
  std::vector<ProjPoint> points;
};

HermitianVariety::HermitianVariety(const FieldCtx& ctx, HermitianMatrix h)
    : ctx_(ctx), h_(std::move(h)), cache_(std::make_shared<Cache>()) {
  rank_ = hermitian_rank(ctx_, h_);
  if (rank_ == n()) {
    const auto kernel = nullspace(ctx_, h_.entries());
    std::vector<FieldElement> v = kernel.front();
    for (auto& x : v) x = ctx_.frob(x);
    vertex_ = normalize(ctx_, std::move(v));
  }
}

bool HermitianVariety::contains(const ProjPoint& x) const {
  return evaluate_hermitian_form(ctx_, h_, x).code == 0;
}

const std::vector<ProjPoint>& HermitianVariety::points(std::uint64_t budget) const {
  std::call_once(cache_->once, [&] {
    for (auto& x : enumerate_points(ctx_, n(), budget))
      if (contains(x)) cache_->points.push_back(std::move(x));
  });
  return cache_->points;
}

HermitianVariety make_standard_cone(const FieldCtx& ctx, std::size_t n) {
  if (n < 1) throw std::invalid_argument("a rank-n cone needs n >= 1");
  return HermitianVariety(ctx, HermitianMatrix::diagonal_ones(ctx, n, n));
}

HermitianVariety make_standard_nondegenerate(const FieldCtx& ctx, std::size_t n) {
  return HermitianVariety(ctx, HermitianMatrix::diagonal_ones(ctx, n, n + 1));
}

std::int64_t count_points_formula(int n, RankCase rank_case, std::int64_t q) {
  if (rank_case == RankCase::RankNCone) {
    if (n < 1) throw std::invalid_argument("a rank-n cone needs n >= 1");
    return 1 + q * q * count_points_formula(n - 1, RankCase::Nondegenerate, q);
  }
  if (n < 0) throw std::invalid_argument("dimension must be non-negative");
  std::int64_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  const std::int64_t sign_n = n % 2 == 0 ? 1 : -1;
  return (qn - sign_n) * (qn * q + sign_n) / (q * q - 1);
}

LineClassification classify_line(const FieldCtx& ctx, const HermitianVariety& v, const ProjPoint& a,
                                 const ProjPoint& b) {
  LineClassification out;
  for (const auto& x : line_through(ctx, a, b))
    if (v.contains(x)) ++out.count;
  const std::size_t q = ctx.q();
  if (out.count == 1)
    out.type = LineType::Tangent;
  else if (out.count == q + 1)
    out.type = LineType::Secant;
  else if (out.count == q * q + 1)
    out.type = LineType::Contained;
  return out;
}

Hyperplane tangent_hyperplane(const FieldCtx& ctx, const HermitianVariety& v, const ProjPoint& a) {
  if (!v.contains(a)) throw std::invalid_argument("tangent hyperplane requested at a point off the variety");
  const Matrix& h = v.matrix().entries();
  std::vector<FieldElement> u(a.coords.size());
  bool any = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) u[i] = ctx.add(u[i], ctx.mul(h(i, j), ctx.frob(a.coords[j])));
    any = any || u[i].code != 0;
  }
  if (!any) throw std::invalid_argument("tangent hyperplane requested at a singular point");
  return Hyperplane{normalize(ctx, std::move(u))};
}

Matrix hyperplane_basis(const FieldCtx& ctx, const Hyperplane& plane) {
  const std::size_t size = plane.dual.coords.size();
  const auto basis = nullspace(ctx, Matrix(1, size, plane.dual.coords));
  Matrix out(basis.size(), size);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < size; ++c) out(r, c) = basis[r][c];
  return out;
}

SectionInfo hyperplane_section(const FieldCtx& ctx, const HermitianVariety& v, const Hyperplane& plane) {
  if (plane.dim() != v.n()) throw std::invalid_argument("hyperplane dimension does not match the variety");
  SectionInfo info;
  const Matrix restricted = congruent_form(ctx, v.matrix().entries(), transpose(hyperplane_basis(ctx, plane)));
  info.rank = rank(ctx, restricted);
  for (const auto& x : v.points())
    if (incidence(ctx, x, plane)) ++info.count;
  const std::size_t n = v.n();
  if (v.nondegenerate()) {
    if (info.rank == n) info.type = SectionType::NonTangent;
    if (info.rank + 1 == n) info.type = SectionType::Tangent;
  } else if (v.is_rank_n_cone()) {
    info.type = incidence(ctx, *v.vertex(), plane) ? SectionType::VertexIncident : SectionType::VertexAvoiding;
  }
  return info;
}

const char* to_string(LineType t) noexcept {
  switch (t) {
    case LineType::Tangent: return "tangent";
    case LineType::Secant: return "secant";
    case LineType::Contained: return "contained";
    case LineType::Unknown: break;
  }
  return "unknown";
}

const char* to_string(SectionType t) noexcept {
  switch (t) {
    case SectionType::Tangent: return "tangent";
    case SectionType::NonTangent: return "non-tangent";
    case SectionType::VertexAvoiding: return "vertex-avoiding";
    case SectionType::VertexIncident: return "vertex-incident";
    case SectionType::Other: break;
  }
  return "other";
}

}  // namespace hermcode
