#include "hermcode/bounds.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

#include "hermcode/sweep.hpp"

namespace hermcode {
namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void require_degree(int d, std::int64_t q) {
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
  if (d > q) throw std::invalid_argument("degree exceeds q");
}

// |U_k| for the non-degenerate variety in P^k.
std::int64_t u_count(int k, std::int64_t q) { return count_points_formula(k, RankCase::Nondegenerate, q); }

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

// Dual vector of the line through two points of the plane.
std::vector<FieldElement> line_dual(const FieldCtx& ctx, const ProjPoint& a, const ProjPoint& b) {
  std::vector<FieldElement> data = a.coords;
  data.insert(data.end(), b.coords.begin(), b.coords.end());
  const auto ns = nullspace(ctx, Matrix(2, a.coords.size(), std::move(data)));
  if (ns.size() != 1) throw std::logic_error("points do not span a line");
  return ns.front();
}

Hyperplane cone_over(const FieldCtx& ctx, std::vector<FieldElement> dual) {
  dual.push_back(FieldElement{});
  return hyperplane_from(ctx, std::move(dual));
}

struct Tally {
  std::uint64_t max_count = 0, n_maximizers = 0;
  std::vector<std::uint64_t> maximizers;
};

Tally run_range(const FieldCtx& ctx, const Matrix& rows, IndexRange range, std::size_t cap) {
  Tally t;
  sweep_zero_counts(ctx, rows, range, [&](std::uint64_t index, std::uint64_t zeros) {
    if (zeros < t.max_count) return;
    if (zeros > t.max_count || t.n_maximizers == 0) {
      t.max_count = zeros;
      t.n_maximizers = 0;
      t.maximizers.clear();
    }
    ++t.n_maximizers;
    if (t.maximizers.size() < cap) t.maximizers.push_back(index);
  });
  return t;
}

}  // namespace

std::int64_t serre_bound(int n, int d, std::int64_t s) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  require_degree(d, s);
  return d * ipow(s, n - 1) + pi_count(n - 2, s);
}

std::int64_t sorensen_max(int d, std::int64_t q) {
  require_degree(d, q);
  return d * (q * q * q + q * q - q) + q + 1;
}

BoundValue known_M(int n, int d, std::int64_t q) {
  require_degree(d, q);
  if (n < 2) throw std::invalid_argument("known_M needs n >= 2");
  if (n == 2) return {d * (q + 1), Provenance::Theorem, "plane curve bound d(q+1)"};
  if (n == 3) return {sorensen_max(d, q), Provenance::Theorem, "Sørensen's bound"};
  const bool even = n % 2 == 0;
  const std::int64_t u1 = u_count(n - 1, q), u2 = u_count(n - 2, q);
  const char* source = "hyperplane configurations of degree <= 3";
  if (d == 1) return {even ? u1 : q * q * u2 + 1, Provenance::Theorem, source};
  if (d == 2) return {even ? 2 * u1 - u2 : (2 * q * q - 1) * u2 + 2, Provenance::Theorem, source};
  if (d == 3 && q >= 7) return {even ? 3 * u1 - 2 * u2 : (3 * q * q - 2) * u2 + 3, Provenance::Theorem, source};
  return {std::nullopt, Provenance::Theorem, "unknown"};
}

BoundValue conjectured_M(int n, int d, std::int64_t q) {
  require_degree(d, q);
  if (n < 3) throw std::invalid_argument("conjectured_M needs n >= 3");
  const std::int64_t u2 = u_count(n - 2, q);
  const std::int64_t v = n % 2 == 0 ? d * u_count(n - 1, q) - (d - 1) * u2 : (d * q * q - d + 1) * u2 + d;
  return {v, Provenance::Conjecture, "d hyperplanes through a common codimension-2 section"};
}

BoundValue rank_n_bound(int n, int d, std::int64_t q, bool assume_conjecture) {
  require_degree(d, q);
  if (n < 3) throw std::invalid_argument("rank_n_bound needs n >= 3");
  BoundValue inner = known_M(n - 1, d, q);
  if (!inner.known() && assume_conjecture) inner = conjectured_M(n - 1, d, q);
  if (!inner.known()) return {std::nullopt, Provenance::Theorem, "unknown"};
  const std::int64_t a = u_count(n - 1, q) + off_hyperplane_margin(n, d, q);
  const std::int64_t b = 1 + q * q * *inner.value;
  return {std::max(a, b), inner.provenance, "rank-n cone bound"};
}

std::int64_t n2_bound(int d, std::int64_t q) {
  require_degree(d, q);
  return d * q * q + 1;
}

std::int64_t off_hyperplane_margin(int n, int d, std::int64_t q) {
  if (n < 3) throw std::invalid_argument("dimension must be at least 3");
  return (d - 1) * (q + 1) * ipow(q, 2 * n - 4);
}

std::int64_t vertex_missing_bound(int n, int d, std::int64_t q) {
  if (n < 3) throw std::invalid_argument("dimension must be at least 3");
  return d * u_count(n - 1, q);
}

ExtremalWitness construct_extremal(const FieldCtx& ctx, int n, int d) {
  const auto q = static_cast<std::int64_t>(ctx.q());
  require_degree(d, q);
  if (n < 2 || n > 4) throw std::invalid_argument("extremal constructions exist for n in {2, 3, 4}");

  const HermitianVariety base = make_standard_nondegenerate(ctx, static_cast<std::size_t>(n - 1));
  ExtremalWitness w{HomogeneousForm(monomial_basis(static_cast<std::size_t>(n), static_cast<std::size_t>(d))), 0, {},
                    {}};

  if (n == 2) {
    const auto& pts = base.points();
    if (pts.size() < static_cast<std::size_t>(d)) throw std::logic_error("too few points on the base");
    for (int i = 0; i < d; ++i) {
      const auto& x = pts[static_cast<std::size_t>(i)].coords;
      w.factors.push_back(cone_over(ctx, {x[1], ctx.neg(x[0])}));
    }
    w.predicted_count = n2_bound(d, q);
    w.description = "d-generator-lines";
  } else if (n == 3) {
    const auto plane = enumerate_points(ctx, 2);
    const auto ext = std::find_if(plane.begin(), plane.end(), [&](const ProjPoint& x) { return !base.contains(x); });
    if (ext == plane.end()) throw std::logic_error("no external point in the plane");
    std::set<ProjPoint> seen;
    for (const auto& x : plane) {
      if (x == *ext || static_cast<int>(w.factors.size()) == d) continue;
      if (classify_line(ctx, base, *ext, x).type != LineType::Secant) continue;
      const Hyperplane l = hyperplane_from(ctx, line_dual(ctx, *ext, x));
      if (!seen.insert(l.dual).second) continue;
      w.factors.push_back(cone_over(ctx, l.dual.coords));
    }
    if (static_cast<int>(w.factors.size()) != d) throw std::logic_error("too few secant lines through the external point");
    w.predicted_count = 1 + q * q * d * (q + 1);
    w.description = "d-concurrent-secants-cone";
  } else {
    const auto space = enumerate_points(ctx, 3);
    const auto ext = std::find_if(space.begin(), space.end(), [&](const ProjPoint& x) { return !base.contains(x); });
    if (ext == space.end()) throw std::logic_error("no external point in the solid");
    std::vector<ProjPoint> chord;
    for (const auto& a : base.points()) {
      if (classify_line(ctx, base, *ext, a).type != LineType::Secant) continue;
      for (const auto& x : line_through(ctx, *ext, a))
        if (base.contains(x)) chord.push_back(x);
      break;
    }
    if (chord.size() != static_cast<std::size_t>(q + 1)) throw std::logic_error("no secant chord through the external point");
    for (int i = 0; i < d; ++i)
      w.factors.push_back(
          cone_over(ctx, tangent_hyperplane(ctx, base, chord[static_cast<std::size_t>(i)]).dual.coords));
    w.predicted_count = 1 + q * q * sorensen_max(d, q);
    w.description = "d-tangent-planes-through-secant-cone";
  }

  w.form = product_of_hyperplanes(ctx, w.factors);
  const HermitianVariety cone = make_standard_cone(ctx, static_cast<std::size_t>(n));
  const auto count = static_cast<std::int64_t>(intersection_count(ctx, w.form, cone.points()));
  if (count != w.predicted_count)
    throw std::logic_error("extremal construction met the cone in " + std::to_string(count) + " points, expected " +
                           std::to_string(w.predicted_count));
  return w;
}

ExtremalWitness construct_serre_extremal(const FieldCtx& ctx, int n, int d) {
  const auto s = static_cast<std::int64_t>(ctx.q2());
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  require_degree(d, s);
  ExtremalWitness w{HomogeneousForm(monomial_basis(static_cast<std::size_t>(n), static_cast<std::size_t>(d))), 0, {},
                    {}};
  for (int c = 0; c < d; ++c) {
    std::vector<FieldElement> dual(static_cast<std::size_t>(n) + 1);
    dual[0] = FieldCtx::one();
    dual[1] = FieldElement{static_cast<std::uint32_t>(c)};
    w.factors.push_back(hyperplane_from(ctx, std::move(dual)));
  }
  w.form = product_of_hyperplanes(ctx, w.factors);
  w.predicted_count = serre_bound(n, d, s);
  w.description = "d-hyperplanes-through-codim2-flat";
  const auto pts = enumerate_points(ctx, static_cast<std::size_t>(n));
  const auto count = static_cast<std::int64_t>(intersection_count(ctx, w.form, pts));
  if (count != w.predicted_count)
    throw std::logic_error("hyperplane pencil met the space in " + std::to_string(count) + " points, expected " +
                           std::to_string(w.predicted_count));
  return w;
}

OracleResult bruteforce_max_intersection(const FieldCtx& ctx, std::span<const ProjPoint> points, std::size_t n,
                                         std::size_t d, Shard shard, const OracleOptions& options) {
  auto basis = monomial_basis(n, d);
  OracleResult out;
  out.n = n;
  out.d = d;
  out.points = points.size();
  out.total_forms = projective_count(ctx.q2(), basis->size());
  out.range = shard_range(out.total_forms, shard);
  const std::uint64_t work = saturating_mul(out.range.size(), std::max<std::uint64_t>(points.size(), 1));
  if (work > options.budget) throw BudgetExceeded("intersection oracle", work, options.budget);

  const Matrix rows = evaluation_matrix(ctx, *basis, points);
  const std::size_t threads = options.threads == 0 ? default_threads() : options.threads;
  const auto pieces = split_range(out.range, threads);
  std::vector<Tally> tallies(pieces.size());
  if (pieces.size() == 1) {
    tallies[0] = run_range(ctx, rows, pieces[0], options.max_retained);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < pieces.size(); ++i)
      pool.emplace_back([&, i] { tallies[i] = run_range(ctx, rows, pieces[i], options.max_retained); });
    for (auto& t : pool) t.join();
  }

  std::vector<OracleResult> parts;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    OracleResult part = out;
    part.range = pieces[i];
    part.max_count = tallies[i].max_count;
    part.n_maximizers = tallies[i].n_maximizers;
    part.maximizers = std::move(tallies[i].maximizers);
    parts.push_back(std::move(part));
  }
  return merge_oracle_results(parts, options.max_retained);
}

OracleResult bruteforce_max_intersection(const FieldCtx& ctx, const HermitianVariety& variety, std::size_t d,
                                         Shard shard, const OracleOptions& options) {
  return bruteforce_max_intersection(ctx, variety.points(), variety.n(), d, shard, options);
}

OracleResult merge_oracle_results(std::span<const OracleResult> parts, std::size_t max_retained) {
  if (parts.empty()) throw std::invalid_argument("nothing to merge");
  std::vector<const OracleResult*> sorted;
  for (const auto& p : parts) sorted.push_back(&p);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const OracleResult* a, const OracleResult* b) { return a->range.begin < b->range.begin; });

  OracleResult out;
  const OracleResult& first = *sorted.front();
  out.n = first.n;
  out.d = first.d;
  out.points = first.points;
  out.total_forms = first.total_forms;
  out.range = {first.range.begin, first.range.begin};
  for (const OracleResult* p : sorted) {
    if (p->n != out.n || p->d != out.d || p->points != out.points || p->total_forms != out.total_forms)
      throw std::invalid_argument("partial results describe different problems");
    if (p->range.begin != out.range.end) throw std::invalid_argument("partial ranges are not contiguous");
    out.range.end = p->range.end;
    if (p->range.size() == 0 || p->n_maximizers == 0) continue;
    if (p->max_count < out.max_count) continue;
    if (p->max_count > out.max_count || out.n_maximizers == 0) {
      out.max_count = p->max_count;
      out.n_maximizers = 0;
      out.maximizers.clear();
    }
    out.n_maximizers += p->n_maximizers;
    for (std::uint64_t idx : p->maximizers) {
      if (out.maximizers.size() >= max_retained) break;
      out.maximizers.push_back(idx);
    }
  }
  return out;
}

HomogeneousForm form_at_index(const FieldCtx& ctx, std::size_t n, std::size_t d, std::uint64_t index) {
  auto basis = monomial_basis(n, d);
  auto coeffs = projective_vector_at(ctx.q2(), basis->size(), index);
  return HomogeneousForm(std::move(basis), std::move(coeffs));
}

LineUnionCheck check_union_of_cone_lines(const FieldCtx& ctx, const HermitianVariety& cone, const HomogeneousForm& f) {
  if (!cone.is_rank_n_cone()) throw std::invalid_argument("variety is not a rank-n cone");
  const ProjPoint& vertex = *cone.vertex();
  std::vector<ProjPoint> zeros;
  for (const auto& x : cone.points())
    if (evaluate_form(ctx, f, x).code == 0) zeros.push_back(x);  // canonical order is preserved

  std::set<std::vector<ProjPoint>> lines;
  for (const auto& x : zeros) {
    if (x == vertex) continue;
    auto line = line_through(ctx, vertex, x);
    if (lines.count(line)) continue;
    for (const auto& y : line)
      if (!std::binary_search(zeros.begin(), zeros.end(), y)) return {false, 0};
    lines.insert(std::move(line));
  }
  return {!lines.empty(), lines.size()};
}

bool check_cone_with_vertex(const FieldCtx& ctx, const HomogeneousForm& f, const ProjPoint& vertex) {
  if (vertex.coords.size() != f.n() + 1) throw std::invalid_argument("vertex dimension does not match the form");
  if (evaluate_form(ctx, f, vertex).code != 0) return false;
  std::vector<ProjPoint> zeros;
  for (auto& x : enumerate_points(ctx, f.n()))
    if (evaluate_form(ctx, f, x).code == 0) zeros.push_back(std::move(x));
  std::set<ProjPoint> covered;
  for (const auto& x : zeros) {
    if (x == vertex || covered.count(x)) continue;
    for (const auto& y : line_through(ctx, vertex, x)) {
      if (!std::binary_search(zeros.begin(), zeros.end(), y)) return false;
      covered.insert(y);
    }
  }
  return true;
}

const char* to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::Theorem: return "Theorem";
    case Provenance::Conjecture: return "Conjecture";
    case Provenance::BruteForce: return "BruteForce";
  }
  return "?";
}

}  // namespace hermcode
