#pragma once

// Table-driven arithmetic for the tower GF(p) ⊆ GF(q) ⊆ GF(q²), q = p^e.
//
// Elements of GF(q²) are integer codes in [0, q²): the code of
// c_0 + c_1 x + ... + c_{2e-1} x^{2e-1} (mod the field modulus) is
// c_0 + c_1 p + ... + c_{2e-1} p^{2e-1}. Code 0 is zero and code 1 is one.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace hermcode {

struct FieldElement {
  std::uint32_t code = 0;

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Arithmetic context for GF(q²) together with its subfield GF(q).
///
/// Immutable after construction; copies share the same tables, so passing
/// a context by value is cheap and safe across threads.
class FieldCtx {
 public:
  /// Largest supported extension size q².
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  /// Builds the context for GF(p^e) ⊂ GF(p^{2e}).
  /// Throws std::invalid_argument if p is not prime, e == 0 or p^{2e} > kMaxOrder.
  FieldCtx(std::uint32_t p, std::uint32_t e);

  std::uint32_t p() const noexcept { return t_->p; }
  std::uint32_t e() const noexcept { return t_->e; }
  std::uint32_t q() const noexcept { return t_->q; }
  std::uint32_t q2() const noexcept { return t_->q2; }

  /// Coefficients of the monic modulus, lowest degree first (length 2e + 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return t_->modulus; }

  static constexpr FieldElement zero() noexcept { return FieldElement{0}; }
  static constexpr FieldElement one() noexcept { return FieldElement{1}; }
  /// Generator of GF(q²)^* used for the log/exp tables (smallest code of full order).
  FieldElement primitive() const noexcept { return FieldElement{t_->exp[1]}; }

  /// Element with the given code; throws std::out_of_range if code >= q².
  FieldElement element(std::uint32_t code) const;

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    if (t_->p == 2) return FieldElement{a.code ^ b.code};
    if (a.code == 0) return b;
    if (b.code == 0) return a;
    const std::uint32_t la = t_->log[a.code];
    const std::uint32_t lb = t_->log[b.code];
    const std::uint32_t diff = lb >= la ? lb - la : lb + t_->order - la;
    const std::uint32_t z = t_->zech[diff];
    if (z == kNoLog) return FieldElement{0};
    return FieldElement{t_->exp[la + z]};
  }
  FieldElement neg(FieldElement a) const noexcept { return FieldElement{t_->neg[a.code]}; }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    if (a.code == 0 || b.code == 0) return FieldElement{0};
    return FieldElement{t_->exp[t_->log[a.code] + t_->log[b.code]]};
  }
  /// Throws std::domain_error if a == 0.
  FieldElement inv(FieldElement a) const;
  /// Throws std::domain_error if b == 0.
  FieldElement div(FieldElement a, FieldElement b) const;
  /// Square-and-multiply; negative exponents require a != 0. pow(x, 0) == 1.
  FieldElement pow(FieldElement a, std::int64_t k) const;

  /// Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(FieldElement a) const noexcept { return t_->log[a.code]; }
  /// primitive()^k for any k >= 0.
  FieldElement exp(std::uint64_t k) const noexcept {
    return FieldElement{t_->exp[static_cast<std::uint32_t>(k % t_->order)]};
  }

  /// a^q, the nontrivial automorphism of GF(q²) over GF(q).
  FieldElement frob(FieldElement a) const noexcept { return FieldElement{t_->frob[a.code]}; }
  /// a^{q+1} ∈ GF(q).
  FieldElement norm(FieldElement a) const noexcept { return FieldElement{t_->norm[a.code]}; }
  /// a + a^q ∈ GF(q).
  FieldElement trace(FieldElement a) const noexcept { return FieldElement{t_->trace[a.code]}; }
  bool in_base(FieldElement a) const noexcept { return t_->frob[a.code] == a.code; }

  /// The q elements of GF(q) in increasing code order; index i is the
  /// base-field element with code i under this embedding.
  std::span<const FieldElement> base_elements() const noexcept { return t_->base; }
  FieldElement base_embed(std::uint32_t i) const;

  /// Smallest-code λ with λ^{q+1} = b. Requires b ∈ GF(q)^*.
  FieldElement norm_preimage(FieldElement b) const;
  /// Smallest-code λ with λ + λ^q = b. Requires b ∈ GF(q).
  FieldElement trace_preimage(FieldElement b) const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept {
    return a.t_ == b.t_ || (a.p() == b.p() && a.e() == b.e());
  }

 private:
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  struct Tables {
    std::uint32_t p = 0, e = 0, q = 0, q2 = 0, order = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> exp;  // length 2·order, exp[i] = g^i
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<std::uint32_t> zech;  // log(1 + g^k), kNoLog when zero; odd p only
    std::vector<std::uint32_t> neg, frob, norm, trace;
    std::vector<FieldElement> base;
  };

  std::shared_ptr<const Tables> t_;
};

inline FieldCtx make_field(std::uint32_t p, std::uint32_t e) { return FieldCtx(p, e); }

}  // namespace hermcode
