#include "hermcode/field.hpp"

#include <stdexcept>
#include <string>

namespace hermcode {
namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over GF(p), lowest degree first.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint32_t r = 1;
  for (std::uint32_t k = p - 2, b = a; k; k >>= 1, b = b * b % p)
    if (k & 1) r = r * b % p;
  return r;
}

// Remainder of a modulo b (b nonzero).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint32_t f = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + (p - f) * b[i]) % p;
    trim(a);
  }
  return a;
}

Poly poly_from_code(std::uint64_t code, std::uint32_t p, std::size_t len) {
  Poly a(len, 0);
  for (std::size_t i = 0; i < len; ++i, code /= p) a[i] = static_cast<std::uint32_t>(code % p);
  return a;
}

std::uint32_t code_from_poly(const Poly& a, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t dg = 1; dg <= deg / 2; ++dg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dg; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = poly_from_code(c, p, dg);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Multiplication in GF(p)[x]/(modulus) on element codes.
struct SlowArith {
  std::uint32_t p;
  std::size_t deg;
  Poly modulus;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const Poly pa = poly_from_code(a, p, deg), pb = poly_from_code(b, p, deg);
    Poly prod(2 * deg, 0);
    for (std::size_t i = 0; i < deg; ++i)
      for (std::size_t j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
    Poly r = poly_mod(std::move(prod), modulus, p);
    r.resize(deg, 0);
    return code_from_poly(r, p);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t r = 1;
    for (; k; k >>= 1, a = mul(a, a))
      if (k & 1) r = mul(r, a);
    return r;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0, scale = 1;
    for (std::size_t i = 0; i < deg; ++i, a /= p, b /= p, scale *= p) r += ((a % p + b % p) % p) * scale;
    return r;
  }
  std::uint32_t neg(std::uint32_t a) const {
    std::uint32_t r = 0, scale = 1;
    for (std::size_t i = 0; i < deg; ++i, a /= p, scale *= p) r += ((p - a % p) % p) * scale;
    return r;
  }
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw std::invalid_argument("field exponent must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q * q > kMaxOrder)
      throw std::invalid_argument("GF(q^2) exceeds the table limit of 2^20 elements");
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->q = static_cast<std::uint32_t>(q);
  t->q2 = static_cast<std::uint32_t>(q * q);
  t->order = t->q2 - 1;
  const std::size_t deg = 2 * e;

  // Lexicographically smallest monic irreducible: x^deg + r(x), r by increasing code.
  for (std::uint32_t r = 0; r < t->q2; ++r) {
    Poly f = poly_from_code(r, p, deg);
    f.push_back(1);
    if (is_irreducible(f, p)) {
      t->modulus = std::move(f);
      break;
    }
  }
  const SlowArith slow{p, deg, t->modulus};

  // Smallest code of multiplicative order q² - 1.
  const auto factors = prime_factors(t->order);
  std::uint32_t gen = 0;
  for (std::uint32_t c = 2; c < t->q2 && gen == 0; ++c) {
    bool full = true;
    for (auto f : factors)
      if (slow.pow(c, t->order / f) == 1) {
        full = false;
        break;
      }
    if (full) gen = c;
  }
  if (t->q2 == 2) gen = 1;  // unreachable: q² >= 4

  const std::uint32_t n = t->order;
  t->exp.assign(2 * static_cast<std::size_t>(n), 0);
  t->log.assign(t->q2, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    t->exp[i] = t->exp[i + n] = cur;
    t->log[cur] = i;
    cur = slow.mul(cur, gen);
  }

  t->neg.resize(t->q2);
  for (std::uint32_t a = 0; a < t->q2; ++a) t->neg[a] = p == 2 ? a : slow.neg(a);
  if (p != 2) {
    t->zech.resize(n);
    for (std::uint32_t k = 0; k < n; ++k) {
      const std::uint32_t s = slow.add(1, t->exp[k]);
      t->zech[k] = s == 0 ? kNoLog : t->log[s];
    }
  }

  t->frob.resize(t->q2);
  t->norm.resize(t->q2);
  t->trace.resize(t->q2);
  for (std::uint32_t a = 0; a < t->q2; ++a) {
    if (a == 0) {
      t->frob[a] = t->norm[a] = t->trace[a] = 0;
      continue;
    }
    const std::uint64_t la = t->log[a];
    t->frob[a] = t->exp[(la * t->q) % n];
    t->norm[a] = t->exp[(la * (t->q + 1)) % n];
    t->trace[a] = slow.add(a, t->frob[a]);
  }
  for (std::uint32_t a = 0; a < t->q2; ++a)
    if (t->frob[a] == a) t->base.push_back(FieldElement{a});

  t_ = std::move(t);
}

FieldElement FieldCtx::element(std::uint32_t code) const {
  if (code >= t_->q2) throw std::out_of_range("element code " + std::to_string(code) + " outside GF(q^2)");
  return FieldElement{code};
}

FieldElement FieldCtx::inv(FieldElement a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t la = t_->log[a.code];
  return FieldElement{t_->exp[la == 0 ? 0 : t_->order - la]};
}

FieldElement FieldCtx::div(FieldElement a, FieldElement b) const {
  if (b.code == 0) throw std::domain_error("division by zero");
  return mul(a, inv(b));
}

FieldElement FieldCtx::pow(FieldElement a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  FieldElement r = one();
  for (auto u = static_cast<std::uint64_t>(k); u; u >>= 1, a = mul(a, a))
    if (u & 1) r = mul(r, a);
  return r;
}

FieldElement FieldCtx::base_embed(std::uint32_t i) const {
  if (i >= t_->base.size()) throw std::out_of_range("base field index out of range");
  return t_->base[i];
}

FieldElement FieldCtx::norm_preimage(FieldElement b) const {
  if (b.code == 0 || b.code >= t_->q2 || !in_base(b))
    throw std::invalid_argument("norm preimage requires a nonzero element of GF(q)");
  for (std::uint32_t c = 1; c < t_->q2; ++c)
    if (t_->norm[c] == b.code) return FieldElement{c};
  throw std::logic_error("norm is not surjective onto GF(q)^*");
}

FieldElement FieldCtx::trace_preimage(FieldElement b) const {
  if (b.code >= t_->q2 || !in_base(b)) throw std::invalid_argument("trace preimage requires an element of GF(q)");
  for (std::uint32_t c = 0; c < t_->q2; ++c)
    if (t_->trace[c] == b.code) return FieldElement{c};
  throw std::logic_error("trace is not surjective onto GF(q)");
}

}  // namespace hermcode
