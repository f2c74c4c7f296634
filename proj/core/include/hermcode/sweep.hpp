#pragma once

// Zero counting over all projective combinations of a set of evaluation rows.
//
// Given rows R_0..R_{k-1} (each a vector of m field elements) this visits every
// coefficient vector c up to scalars, in the order of projective_vector_at, and
// reports how many coordinates of Σ c_i R_i vanish. The last coefficient is
// handled in one pass per prefix: for each coordinate j the unique c_{k-1} that
// cancels it is tallied, so q² vectors cost a single sweep over the m columns.

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

#include "hermcode/field.hpp"
#include "hermcode/forms.hpp"
#include "hermcode/linalg.hpp"

namespace hermcode {

template <class Visit>
void sweep_zero_counts(const FieldCtx& ctx, const Matrix& rows, IndexRange range, Visit&& visit) {
  const std::size_t k = rows.rows(), m = rows.cols();
  const std::uint32_t q2 = ctx.q2();
  if (k == 0 || range.size() == 0) return;

  const FieldElement* last = rows.row(k - 1);
  std::vector<FieldElement> last_inv(m);
  for (std::size_t j = 0; j < m; ++j)
    if (last[j].code != 0) last_inv[j] = ctx.inv(last[j]);

  std::vector<FieldElement> base(m);
  std::vector<std::uint64_t> hist(q2);
  std::vector<std::uint32_t> digits(k);

  std::uint64_t offset = 0;
  for (std::size_t t = 0; t < k && offset < range.end; ++t) {
    std::uint64_t block = 1;
    for (std::size_t i = t + 1; i < k; ++i) block *= q2;
    const std::uint64_t lo = range.begin > offset ? range.begin - offset : 0;
    const std::uint64_t hi = std::min<std::uint64_t>(block, range.end - offset);
    if (lo >= hi) {
      offset += block;
      continue;
    }

    if (t + 1 == k) {
      std::uint64_t zeros = 0;
      for (std::size_t j = 0; j < m; ++j) zeros += last[j].code == 0;
      visit(offset, zeros);
      offset += block;
      continue;
    }

    // Prefix digits occupy positions t+1..k-2.
    const std::uint64_t first_prefix = lo / q2, last_prefix = (hi - 1) / q2;
    std::uint64_t rest = first_prefix;
    for (std::size_t pos = k - 1; pos-- > t + 1; rest /= q2) digits[pos] = static_cast<std::uint32_t>(rest % q2);
    const FieldElement* lead = rows.row(t);
    for (std::size_t j = 0; j < m; ++j) base[j] = lead[j];
    for (std::size_t pos = t + 1; pos + 1 < k; ++pos) {
      if (digits[pos] == 0) continue;
      const FieldElement c{digits[pos]};
      const FieldElement* r = rows.row(pos);
      for (std::size_t j = 0; j < m; ++j) base[j] = ctx.add(base[j], ctx.mul(c, r[j]));
    }

    for (std::uint64_t prefix = first_prefix;; ++prefix) {
      std::fill(hist.begin(), hist.end(), 0);
      std::uint64_t always = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (last[j].code == 0) {
          always += base[j].code == 0;
        } else {
          ++hist[ctx.mul(ctx.neg(base[j]), last_inv[j]).code];
        }
      }
      const std::uint64_t c_lo = prefix == first_prefix ? lo % q2 : 0;
      const std::uint64_t c_hi = prefix == last_prefix ? (hi - 1) % q2 : q2 - 1;
      for (std::uint64_t c = c_lo; c <= c_hi; ++c) visit(offset + prefix * q2 + c, always + hist[c]);
      if (prefix == last_prefix) break;

      // Odometer step on the prefix digits with matching row updates.
      for (std::size_t pos = k - 1; pos-- > t + 1;) {
        const FieldElement old{digits[pos]};
        digits[pos] = digits[pos] + 1 == q2 ? 0 : digits[pos] + 1;
        const FieldElement delta = ctx.sub(FieldElement{digits[pos]}, old);
        const FieldElement* r = rows.row(pos);
        for (std::size_t j = 0; j < m; ++j) base[j] = ctx.add(base[j], ctx.mul(delta, r[j]));
        if (digits[pos] != 0) break;
      }
    }
    offset += block;
  }
}

/// Splits a range into `parts` contiguous pieces (some possibly empty).
inline std::vector<IndexRange> split_range(IndexRange range, std::size_t parts) {
  std::vector<IndexRange> out;
  if (parts == 0) parts = 1;
  for (std::size_t i = 0; i < parts; ++i) {
    const IndexRange sub = shard_range(range.size(), Shard{i, parts});
    out.push_back(IndexRange{range.begin + sub.begin, range.begin + sub.end});
  }
  return out;
}

/// Worker count used when the caller passes 0.
inline std::size_t default_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

}  // namespace hermcode
