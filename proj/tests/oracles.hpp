#pragma once

// Slow reference implementations used to cross-check the library. They work
// directly on polynomial-basis digits and share no tables with the library.

#include <cstdint>
#include <vector>

#include "hermcode/field.hpp"
#include "hermcode/forms.hpp"
#include "hermcode/proj_space.hpp"

namespace oracle {

struct PolyField {
  std::uint32_t p, deg, size;
  std::vector<std::uint32_t> modulus;  // monic, lowest first

  explicit PolyField(const hermcode::FieldCtx& ctx)
      : p(ctx.p()), deg(2 * ctx.e()), size(ctx.q2()), modulus(ctx.modulus()) {}

  std::vector<std::uint32_t> digits(std::uint32_t code) const {
    std::vector<std::uint32_t> d(deg);
    for (auto& x : d) x = code % p, code /= p;
    return d;
  }
  std::uint32_t code(const std::vector<std::uint32_t>& d) const {
    std::uint32_t c = 0;
    for (std::size_t i = deg; i-- > 0;) c = c * p + d[i];
    return c;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a), y = digits(b);
    for (std::size_t i = 0; i < deg; ++i) x[i] = (x[i] + y[i]) % p;
    return code(x);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = digits(a), y = digits(b);
    std::vector<std::uint32_t> prod(2 * deg, 0);
    for (std::size_t i = 0; i < deg; ++i)
      for (std::size_t j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (std::size_t k = 2 * deg; k-- > deg;) {
      const std::uint32_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (std::size_t i = 0; i < deg; ++i) prod[k - deg + i] = (prod[k - deg + i] + (p - c) * modulus[i] % p) % p;
    }
    prod.resize(deg);
    return code(prod);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
};

/// Projective points of Σ_{i<rank} x_i^{q+1} = 0 in Pⁿ, counted over all nonzero vectors.
inline std::uint64_t hermitian_count(const hermcode::FieldCtx& ctx, std::size_t n, std::size_t rank) {
  const PolyField f(ctx);
  const std::uint32_t q = ctx.q();
  std::vector<std::uint32_t> norm(f.size);
  for (std::uint32_t a = 0; a < f.size; ++a) norm[a] = f.pow(a, q + 1);
  std::vector<std::uint32_t> v(n + 1, 0);
  std::uint64_t affine = 0;
  while (true) {
    std::size_t pos = 0;
    while (pos <= n && ++v[pos] == f.size) v[pos++] = 0;
    if (pos > n) break;
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < rank; ++i) s = f.add(s, norm[v[i]]);
    affine += s == 0;
  }
  return affine / (f.size - 1);
}

inline std::uint32_t evaluate(const PolyField& f, const hermcode::HomogeneousForm& form,
                              const hermcode::ProjPoint& x) {
  std::uint32_t total = 0;
  for (std::size_t i = 0; i < form.coeffs().size(); ++i) {
    std::uint32_t term = form.coeffs()[i].code;
    const auto& ex = form.basis().exponent(i);
    for (std::size_t v = 0; v < ex.size(); ++v) term = f.mul(term, f.pow(x.coords[v].code, ex[v]));
    total = f.add(total, term);
  }
  return total;
}

/// Maximum zero count over all forms up to scalars, by direct evaluation.
struct NaiveMax {
  std::uint64_t max = 0, maximizers = 0;
};

inline NaiveMax naive_max(const hermcode::FieldCtx& ctx, std::span<const hermcode::ProjPoint> pts, std::size_t n,
                          std::size_t d) {
  const PolyField f(ctx);
  NaiveMax out;
  hermcode::enumerate_forms_projective(ctx, n, d, {}, [&](std::uint64_t, const hermcode::HomogeneousForm& form) {
    std::uint64_t z = 0;
    for (const auto& x : pts) z += evaluate(f, form, x) == 0;
    if (z > out.max) out = {z, 0};
    if (z == out.max) ++out.maximizers;
  });
  return out;
}

}  // namespace oracle
