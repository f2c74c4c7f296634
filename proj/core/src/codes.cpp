#include "hermcode/codes.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hermcode/sweep.hpp"

namespace hermcode {
namespace {

// Runs the zero-count sweep over all projective combinations of `rows`,
// split across worker threads, and folds each piece with `Acc`.
template <class Acc>
std::vector<Acc> sweep_parallel(const FieldCtx& ctx, const Matrix& rows, std::size_t threads, const Acc& init) {
  const IndexRange all{0, projective_count(ctx.q2(), rows.rows())};
  const auto pieces = split_range(all, threads == 0 ? default_threads() : threads);
  std::vector<Acc> acc(pieces.size(), init);
  auto work = [&](std::size_t i) {
    sweep_zero_counts(ctx, rows, pieces[i], [&](std::uint64_t, std::uint64_t zeros) { acc[i].add(zeros); });
  };
  if (pieces.size() == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < pieces.size(); ++i) pool.emplace_back(work, i);
    for (auto& t : pool) t.join();
  }
  return acc;
}

struct MaxZeros {
  std::uint64_t m = 0;  // zero counts equal to m belong to the zero codeword
  std::uint64_t best = 0;
  bool any = false;
  void add(std::uint64_t zeros) {
    if (zeros == m) return;
    if (!any || zeros > best) best = zeros;
    any = true;
  }
};

Matrix basis_rows(const FieldCtx& ctx, const FunctionalCode& code) { return row_echelon(ctx, code.generator).reduced; }

void check_classes(std::uint64_t classes, std::uint64_t budget, const char* what) {
  if (classes > budget) throw BudgetExceeded(what, classes, budget);
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

FunctionalCode build_code(const FieldCtx& ctx, std::size_t n, std::span<const ProjPoint> points, std::size_t d,
                          std::uint64_t budget) {
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
  auto basis = monomial_basis(n, d);
  const std::uint64_t cells = static_cast<std::uint64_t>(basis->size()) * points.size();
  if (cells > budget) throw BudgetExceeded("generator matrix", cells, budget);
  return FunctionalCode{n, d, ctx, evaluation_matrix(ctx, *basis, points), {points.begin(), points.end()}};
}

FunctionalCode build_code(const FieldCtx& ctx, const HermitianVariety& variety, std::size_t d, std::uint64_t budget) {
  return build_code(ctx, variety.n(), variety.points(), d, budget);
}

std::size_t code_dimension(const FieldCtx& ctx, const FunctionalCode& code) { return rank(ctx, code.generator); }

CodeParameters min_distance(const FieldCtx& ctx, const FunctionalCode& code, MinDistanceMode mode,
                            const MinDistanceOptions& options) {
  CodeParameters out;
  out.m = code.length();

  if (mode == MinDistanceMode::WitnessOnly) {
    out.k = code_dimension(ctx, code);
    bool any = false;
    for (const auto& f : options.witnesses) {
      const auto w = weight(codeword_of(ctx, code, f));
      if (w == 0) continue;
      out.dmin = any ? std::min(out.dmin, w) : w;
      any = true;
    }
    if (!any) throw std::invalid_argument("no witness gives a nonzero codeword");
    out.dmin_status = DminStatus::WitnessUpperBoundOnly;
    return out;
  }

  Matrix rows;
  if (mode == MinDistanceMode::ExhaustiveMessages) {
    rows = basis_rows(ctx, code);
    out.k = rows.rows();
    check_classes(projective_count(ctx.q2(), rows.rows()), options.budget, "message classes");
  } else {
    rows = code.generator;
    check_classes(projective_count(ctx.q2(), rows.rows()), options.budget, "form classes");
    out.k = code_dimension(ctx, code);
  }
  if (out.k == 0) throw std::invalid_argument("the code is zero");

  auto acc = sweep_parallel(ctx, rows, options.threads, MaxZeros{out.m});
  MaxZeros total;
  for (const auto& a : acc) {
    if (!a.any) continue;
    total.best = total.any ? std::max(total.best, a.best) : a.best;
    total.any = true;
  }
  out.dmin = out.m - total.best;
  out.dmin_status = DminStatus::Exact;
  return out;
}

std::map<std::uint64_t, std::uint64_t> weight_distribution(const FieldCtx& ctx, const FunctionalCode& code,
                                                           std::uint64_t budget, std::size_t threads) {
  struct Hist {
    std::map<std::uint64_t, std::uint64_t> zeros;
    void add(std::uint64_t z) { ++zeros[z]; }
  };
  const Matrix rows = basis_rows(ctx, code);
  check_classes(projective_count(ctx.q2(), rows.rows()), budget, "message classes");
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& h : sweep_parallel(ctx, rows, threads, Hist{}))
    for (const auto& [z, c] : h.zeros) out[code.length() - z] += c;
  return out;
}

std::vector<FieldElement> codeword_of(const FieldCtx& ctx, const FunctionalCode& code, const HomogeneousForm& f) {
  if (f.n() != code.n || f.d() != code.d) throw std::invalid_argument("form does not match the code");
  std::vector<FieldElement> word(code.length());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const FieldElement c = f.coeffs()[i];
    if (c.code == 0) continue;
    const FieldElement* r = code.generator.row(i);
    for (std::size_t j = 0; j < word.size(); ++j) word[j] = ctx.add(word[j], ctx.mul(c, r[j]));
  }
  return word;
}

std::uint64_t weight(std::span<const FieldElement> word) noexcept {
  return static_cast<std::uint64_t>(
      std::count_if(word.begin(), word.end(), [](FieldElement c) { return c.code != 0; }));
}

TheoreticalParameters theoretical_parameters(int n, int d, std::int64_t q, bool assume_conjecture) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (d < 1 || d > q) throw std::invalid_argument("degree must satisfy 1 <= d <= q");
  TheoreticalParameters out;
  out.m = static_cast<std::uint64_t>(count_points_formula(n, RankCase::RankNCone, q));
  out.k = binomial(static_cast<std::uint64_t>(n + d), static_cast<std::uint64_t>(d));
  switch (n) {
    case 2: out.dmin = static_cast<std::uint64_t>(ipow(q, 3) - (d - 1) * q * q); return out;
    case 3: out.dmin = static_cast<std::uint64_t>(q * q * (ipow(q, 3) - d * q - (d - 1))); return out;
    case 4: out.dmin = static_cast<std::uint64_t>(ipow(q, 7) - (d - 1) * ipow(q, 3) * (q * q + q - 1)); return out;
    default: break;
  }
  const BoundValue b = rank_n_bound(n, d, q, assume_conjecture);
  out.provenance = b.provenance;
  if (!b.known()) {
    out.kind = DminKind::Unknown;
    return out;
  }
  out.kind = DminKind::LowerBound;
  out.dmin = out.m - static_cast<std::uint64_t>(*b.value);
  return out;
}

void write_generator_matrix(std::ostream& out, const FieldCtx& ctx, const FunctionalCode& code) {
  // The earliest linearly independent monomial rows.
  const auto pivots = row_echelon(ctx, transpose(code.generator)).pivots;
  out << code.n << ' ' << code.d << ' ' << ctx.p() << ' ' << ctx.e() << ' ';
  for (std::size_t i = 0; i < ctx.modulus().size(); ++i) out << (i ? "," : "") << ctx.modulus()[i];
  out << ' ' << code.length() << ' ' << pivots.size() << '\n';
  for (std::size_t r : pivots) {
    const FieldElement* row = code.generator.row(r);
    for (std::size_t j = 0; j < code.length(); ++j) out << (j ? " " : "") << row[j].code;
    out << '\n';
  }
}

GeneratorFile read_generator_matrix(std::istream& in) {
  GeneratorFile g;
  std::string modulus;
  std::size_t m = 0, k = 0;
  if (!(in >> g.n >> g.d >> g.p >> g.e >> modulus >> m >> k)) throw std::runtime_error("malformed generator header");
  std::istringstream ms(modulus);
  for (std::string tok; std::getline(ms, tok, ',');) g.modulus.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
  std::vector<FieldElement> data(m * k);
  for (auto& c : data)
    if (!(in >> c.code)) throw std::runtime_error("generator file ends early");
  g.rows = Matrix(k, m, std::move(data));
  return g;
}

const char* to_string(DminStatus s) noexcept {
  return s == DminStatus::Exact ? "Exact" : "WitnessUpperBoundOnly";
}

const char* to_string(DminKind k) noexcept {
  switch (k) {
    case DminKind::Exact: return "Exact";
    case DminKind::LowerBound: return "LowerBound";
    case DminKind::Unknown: return "Unknown";
  }
  return "?";
}

}  // namespace hermcode
