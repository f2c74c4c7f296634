#include "hermcode/forms.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace hermcode {
namespace {

void fill_exponents(std::size_t pos, std::size_t remaining, std::vector<std::uint8_t>& cur,
                    std::vector<std::vector<std::uint8_t>>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = static_cast<std::uint8_t>(remaining);
    out.push_back(cur);
    return;
  }
  for (std::size_t e = remaining + 1; e-- > 0;) {
    cur[pos] = static_cast<std::uint8_t>(e);
    fill_exponents(pos + 1, remaining - e, cur, out);
  }
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t n, std::size_t d) : n_(n), d_(d) {
  if (d > 255) throw std::invalid_argument("degree too large");
  std::vector<std::uint8_t> cur(n + 1, 0);
  fill_exponents(0, d, cur, exponents_);
}

std::size_t MonomialBasis::index_of(std::span<const std::uint8_t> exponent) const {
  // Exponents are sorted in descending lexicographic order.
  auto it = std::lower_bound(exponents_.begin(), exponents_.end(), exponent,
                             [](const std::vector<std::uint8_t>& a, std::span<const std::uint8_t> b) {
                               return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
                             });
  if (it == exponents_.end() || !std::equal(it->begin(), it->end(), exponent.begin(), exponent.end()))
    throw std::out_of_range("monomial is not in the basis");
  return static_cast<std::size_t>(it - exponents_.begin());
}

std::shared_ptr<const MonomialBasis> monomial_basis(std::size_t n, std::size_t d) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, d}];
  if (!slot) slot = std::make_shared<const MonomialBasis>(n, d);
  return slot;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

HomogeneousForm::HomogeneousForm(std::shared_ptr<const MonomialBasis> basis, std::vector<FieldElement> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_->size()) throw std::invalid_argument("coefficient count does not match the basis");
}

HomogeneousForm::HomogeneousForm(std::shared_ptr<const MonomialBasis> basis)
    : basis_(std::move(basis)), coeffs_(basis_->size()) {}

bool HomogeneousForm::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](FieldElement c) { return c.code == 0; });
}

HomogeneousForm HomogeneousForm::projectivized(const FieldCtx& ctx) const {
  auto lead = std::find_if(coeffs_.begin(), coeffs_.end(), [](FieldElement c) { return c.code != 0; });
  if (lead == coeffs_.end()) throw std::invalid_argument("the zero form has no projective class");
  const FieldElement s = ctx.inv(*lead);
  HomogeneousForm out = *this;
  for (auto& c : out.coeffs_) c = ctx.mul(c, s);
  return out;
}

FieldElement evaluate_form(const FieldCtx& ctx, const HomogeneousForm& f, const ProjPoint& x) {
  if (x.coords.size() != f.n() + 1) throw std::invalid_argument("point dimension does not match the form");
  FieldElement total{};
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const FieldElement c = f.coeffs()[i];
    if (c.code == 0) continue;
    FieldElement term = c;
    const auto& ex = f.basis().exponent(i);
    for (std::size_t v = 0; v < ex.size() && term.code != 0; ++v)
      if (ex[v]) term = ctx.mul(term, ctx.pow(x.coords[v], ex[v]));
    total = ctx.add(total, term);
  }
  return total;
}

std::size_t intersection_count(const FieldCtx& ctx, const HomogeneousForm& f, std::span<const ProjPoint> points) {
  std::size_t count = 0;
  for (const auto& x : points)
    if (evaluate_form(ctx, f, x).code == 0) ++count;
  return count;
}

Matrix evaluation_matrix(const FieldCtx& ctx, const MonomialBasis& basis, std::span<const ProjPoint> points) {
  Matrix out(basis.size(), points.size());
  std::vector<FieldElement> powers;
  for (std::size_t j = 0; j < points.size(); ++j) {
    const auto& x = points[j].coords;
    if (x.size() != basis.n() + 1) throw std::invalid_argument("point dimension does not match the basis");
    // powers[v * (d + 1) + e] = x_v^e
    powers.assign(x.size() * (basis.d() + 1), FieldCtx::one());
    for (std::size_t v = 0; v < x.size(); ++v)
      for (std::size_t e = 1; e <= basis.d(); ++e)
        powers[v * (basis.d() + 1) + e] = ctx.mul(powers[v * (basis.d() + 1) + e - 1], x[v]);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      FieldElement term = FieldCtx::one();
      const auto& ex = basis.exponent(i);
      for (std::size_t v = 0; v < ex.size(); ++v) term = ctx.mul(term, powers[v * (basis.d() + 1) + ex[v]]);
      out(i, j) = term;
    }
  }
  return out;
}

HomogeneousForm product_of_hyperplanes(const FieldCtx& ctx, std::span<const Hyperplane> duals) {
  if (duals.empty()) throw std::invalid_argument("product of an empty list of hyperplanes");
  const std::size_t vars = duals.front().dual.coords.size();
  std::map<std::vector<std::uint8_t>, FieldElement> poly{{std::vector<std::uint8_t>(vars, 0), FieldCtx::one()}};
  for (const auto& h : duals) {
    if (h.dual.coords.size() != vars) throw std::invalid_argument("hyperplanes live in different spaces");
    std::map<std::vector<std::uint8_t>, FieldElement> next;
    for (const auto& [ex, c] : poly)
      for (std::size_t v = 0; v < vars; ++v) {
        const FieldElement u = h.dual.coords[v];
        if (u.code == 0) continue;
        auto e2 = ex;
        ++e2[v];
        auto& slot = next[e2];
        slot = ctx.add(slot, ctx.mul(c, u));
      }
    poly = std::move(next);
  }
  HomogeneousForm f(monomial_basis(vars - 1, duals.size()));
  for (const auto& [ex, c] : poly) f.coeffs()[f.basis().index_of(ex)] = c;
  return f;
}

IndexRange shard_range(std::uint64_t count, Shard shard) {
  if (shard.total == 0 || shard.index >= shard.total) throw std::invalid_argument("shard index must be below shard total");
  const auto wide = static_cast<unsigned __int128>(count);
  return IndexRange{static_cast<std::uint64_t>(wide * shard.index / shard.total),
                    static_cast<std::uint64_t>(wide * (shard.index + 1) / shard.total)};
}

std::uint64_t projective_count(std::uint32_t q2, std::size_t k) {
  const std::uint64_t full = saturating_pow(q2, k);
  if (full == std::numeric_limits<std::uint64_t>::max()) return full;
  return (full - 1) / (q2 - 1);
}

std::vector<FieldElement> projective_vector_at(std::uint32_t q2, std::size_t k, std::uint64_t index) {
  std::vector<FieldElement> v(k);
  for (std::size_t t = 0; t < k; ++t) {
    const std::uint64_t block = saturating_pow(q2, k - 1 - t);
    if (index >= block) {
      index -= block;
      continue;
    }
    v[t] = FieldCtx::one();
    for (std::size_t pos = k; pos-- > t + 1; index /= q2) v[pos].code = static_cast<std::uint32_t>(index % q2);
    return v;
  }
  throw std::out_of_range("projective index out of range");
}

std::uint64_t projective_index_of(std::uint32_t q2, std::span<const FieldElement> v) {
  std::uint64_t offset = 0;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t].code == 0) {
      offset += saturating_pow(q2, v.size() - 1 - t);
      continue;
    }
    if (v[t].code != 1) throw std::invalid_argument("vector is not projectively normalized");
    std::uint64_t rem = 0;
    for (std::size_t pos = t + 1; pos < v.size(); ++pos) rem = rem * q2 + v[pos].code;
    return offset + rem;
  }
  throw std::invalid_argument("the zero vector has no projective index");
}

std::uint64_t enumerate_forms_projective(const FieldCtx& ctx, std::size_t n, std::size_t d, Shard shard,
                                         const std::function<void(std::uint64_t, const HomogeneousForm&)>& visit,
                                         std::uint64_t budget) {
  auto basis = monomial_basis(n, d);
  const std::size_t k = basis->size();
  const std::uint32_t q2 = ctx.q2();
  const IndexRange range = shard_range(projective_count(q2, k), shard);
  if (range.size() > budget) throw BudgetExceeded("form enumeration", range.size(), budget);
  if (range.size() == 0) return 0;

  HomogeneousForm f(basis, projective_vector_at(q2, k, range.begin));
  auto& c = f.coeffs();
  for (std::uint64_t idx = range.begin; idx < range.end; ++idx) {
    visit(idx, f);
    // Advance: count up the entries after the leading 1, or move the lead right.
    std::size_t lead = 0;
    while (c[lead].code == 0) ++lead;
    std::size_t pos = k;
    while (pos-- > lead + 1) {
      if (++c[pos].code < q2) break;
      c[pos].code = 0;
    }
    if (pos == lead && lead + 1 < k) {
      c[lead].code = 0;
      c[lead + 1].code = 1;
    }
  }
  return range.size();
}

}  // namespace hermcode
