#include "hermcode_cli/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "hermcode/bounds.hpp"
#include "hermcode/codes.hpp"
#include "hermcode/hermitian.hpp"
#include "hermcode/sweep.hpp"

namespace hermcode::cli {
namespace {

Check make(std::string name, bool pass, std::string detail = {}) {
  return Check{std::move(name), pass, std::move(detail)};
}

std::string cell(std::size_t n, std::size_t d) { return "n=" + std::to_string(n) + ",d=" + std::to_string(d); }

// Largest n the suites visit for this field; q = 2 reaches P⁴, larger fields stop earlier.
std::size_t max_n(const RunConfig& c, const FieldCtx& ctx) {
  std::size_t cap = ctx.q2() <= 4 ? 4 : ctx.q2() <= 9 ? 4 : 3;
  return std::max<std::size_t>(2, std::min(c.n, cap));
}

std::int64_t u_count(int k, std::int64_t q) { return count_points_formula(k, RankCase::Nondegenerate, q); }

std::vector<std::vector<ProjPoint>> all_lines(const FieldCtx& ctx, std::span<const ProjPoint> pts) {
  std::set<std::vector<ProjPoint>> lines;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      auto l = line_through(ctx, pts[i], pts[j]);
      // Each line is generated from its two smallest points only.
      if (l[0] == pts[i] && l[1] == pts[j]) lines.insert(std::move(l));
    }
  return {lines.begin(), lines.end()};
}

}  // namespace

std::vector<Check> suite_field(const RunConfig& c) {
  const FieldCtx ctx(c.p, c.e);
  const std::uint32_t q = ctx.q(), q2 = ctx.q2();
  std::vector<Check> out;
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, q2 - 1);

  bool inv_ok = true, log_ok = true;
  for (std::uint32_t a = 1; a < q2; ++a) {
    const FieldElement x{a};
    inv_ok = inv_ok && ctx.mul(x, ctx.inv(x)) == FieldCtx::one();
    log_ok = log_ok && ctx.exp(ctx.log(x)) == x;
  }
  out.push_back(make("inverse", inv_ok));
  out.push_back(make("exp_log_bijection", log_ok));

  const bool exhaustive = std::uint64_t{q2} * q2 * q2 <= 300'000;
  bool axioms = true;
  auto triple = [&](FieldElement a, FieldElement b, FieldElement x) {
    axioms = axioms && ctx.mul(a, ctx.add(b, x)) == ctx.add(ctx.mul(a, b), ctx.mul(a, x)) &&
             ctx.mul(ctx.mul(a, b), x) == ctx.mul(a, ctx.mul(b, x)) &&
             ctx.add(ctx.add(a, b), x) == ctx.add(a, ctx.add(b, x)) && ctx.mul(a, b) == ctx.mul(b, a) &&
             ctx.add(a, b) == ctx.add(b, a);
  };
  if (exhaustive) {
    for (std::uint32_t a = 0; a < q2; ++a)
      for (std::uint32_t b = 0; b < q2; ++b)
        for (std::uint32_t x = 0; x < q2; ++x) triple({a}, {b}, {x});
  } else {
    for (int i = 0; i < 100'000; ++i) triple({pick(rng)}, {pick(rng)}, {pick(rng)});
  }
  out.push_back(make("field_axioms", axioms, exhaustive ? "exhaustive" : "100000 sampled triples"));

  bool frob_ok = true, maps_in_base = true;
  std::map<std::uint32_t, std::uint32_t> norm_fiber, trace_fiber;
  for (std::uint32_t a = 0; a < q2; ++a) {
    const FieldElement x{a};
    frob_ok = frob_ok && ctx.frob(ctx.frob(x)) == x && ctx.frob(x) == ctx.pow(x, q);
    maps_in_base = maps_in_base && ctx.in_base(ctx.norm(x)) && ctx.in_base(ctx.trace(x)) &&
                   ctx.norm(x) == ctx.mul(x, ctx.frob(x)) && ctx.trace(x) == ctx.add(x, ctx.frob(x));
    ++norm_fiber[ctx.norm(x).code];
    ++trace_fiber[ctx.trace(x).code];
  }
  out.push_back(make("frobenius_involution", frob_ok));
  out.push_back(make("norm_trace_in_subfield", maps_in_base));

  bool fibers = norm_fiber.size() == q && trace_fiber.size() == q;
  for (const auto& [b, n] : norm_fiber) fibers = fibers && n == (b == 0 ? 1 : q + 1);
  for (const auto& [b, n] : trace_fiber) fibers = fibers && n == q;
  out.push_back(make("norm_trace_fibers", fibers, "norm fibers q+1, trace fibers q"));

  bool subfield = ctx.base_elements().size() == q;
  for (auto b : ctx.base_elements()) subfield = subfield && ctx.in_base(b);
  bool preimages = true;
  for (auto b : ctx.base_elements()) {
    if (b.code != 0) preimages = preimages && ctx.norm(ctx.norm_preimage(b)) == b;
    preimages = preimages && ctx.trace(ctx.trace_preimage(b)) == b;
  }
  out.push_back(make("subfield_is_fixed_set", subfield));
  out.push_back(make("norm_trace_preimages", preimages));
  return out;
}

std::vector<Check> suite_proj(const RunConfig& c) {
  const FieldCtx ctx(c.p, c.e);
  const auto s = static_cast<std::int64_t>(ctx.q2());
  std::vector<Check> out;
  const std::size_t top = max_n(c, ctx);
  for (std::size_t n = 1; n <= top; ++n) {
    const auto pts = enumerate_points(ctx, n, c.point_budget);
    const bool count = static_cast<std::int64_t>(pts.size()) == pi_count(static_cast<int>(n), s);
    const bool canonical = std::is_sorted(pts.begin(), pts.end()) &&
                           std::adjacent_find(pts.begin(), pts.end()) == pts.end() &&
                           std::all_of(pts.begin(), pts.end(), [](const ProjPoint& x) { return is_normalized(x); });
    out.push_back(make("point_count_n" + std::to_string(n), count, std::to_string(pts.size())));
    out.push_back(make("canonical_order_n" + std::to_string(n), canonical));
    if (n < 2 || pts.size() > 1000) continue;
    const auto planes = enumerate_hyperplanes(ctx, n, c.point_budget);
    bool incid = static_cast<std::int64_t>(planes.size()) == pi_count(static_cast<int>(n), s);
    for (const auto& h : planes) {
      const auto on = std::count_if(pts.begin(), pts.end(), [&](const ProjPoint& x) { return incidence(ctx, x, h); });
      incid = incid && on == pi_count(static_cast<int>(n) - 1, s);
    }
    out.push_back(make("hyperplane_incidence_n" + std::to_string(n), incid));
    bool lines = true;
    for (std::size_t i = 1; i < pts.size(); i += std::max<std::size_t>(1, pts.size() / 50))
      lines = lines && line_through(ctx, pts[0], pts[i]).size() == static_cast<std::size_t>(s + 1);
    out.push_back(make("line_size_n" + std::to_string(n), lines));
  }
  return out;
}

std::vector<Check> suite_hermitian(const RunConfig& c) {
  const FieldCtx ctx(c.p, c.e);
  const auto q = static_cast<std::int64_t>(ctx.q());
  std::vector<Check> out;
  const std::size_t top = max_n(c, ctx);

  for (std::size_t n = 1; n <= top; ++n) {
    const auto v = make_standard_nondegenerate(ctx, n);
    const auto expect = count_points_formula(static_cast<int>(n), RankCase::Nondegenerate, q);
    out.push_back(make("nondegenerate_count_n" + std::to_string(n),
                       static_cast<std::int64_t>(v.points(c.point_budget).size()) == expect, std::to_string(expect)));
  }
  for (std::size_t n = 2; n <= top; ++n) {
    const auto v = make_standard_cone(ctx, n);
    const auto expect = count_points_formula(static_cast<int>(n), RankCase::RankNCone, q);
    out.push_back(make("cone_count_n" + std::to_string(n),
                       static_cast<std::int64_t>(v.points(c.point_budget).size()) == expect && v.rank() == n,
                       std::to_string(expect)));
  }

  // Canonical congruence on seeded random Hermitian matrices.
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, ctx.q2() - 1);
  bool congruence = true;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t size = 2 + trial % 4;
    Matrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
      const auto base = ctx.base_elements();
      m(i, i) = base[pick(rng) % base.size()];
      for (std::size_t j = i + 1; j < size; ++j) {
        m(i, j) = FieldElement{pick(rng)};
        m(j, i) = ctx.frob(m(i, j));
      }
    }
    if (m.is_zero()) continue;
    const HermitianMatrix h(ctx, m);
    const Congruence s = canonical_congruence(ctx, h);
    const Matrix diag = congruent_form(ctx, m, s.transform);
    Matrix expect(size, size);
    for (std::size_t i = 0; i < s.rank; ++i) expect(i, i) = FieldCtx::one();
    congruence = congruence && diag == expect && rank(ctx, s.transform) == size && s.rank == hermitian_rank(ctx, h);
  }
  out.push_back(make("canonical_congruence", congruence, "50 seeded matrices"));

  // Line trichotomy on non-degenerate varieties.
  for (std::size_t n = 2; n <= std::min<std::size_t>(top, 3); ++n) {
    const auto pts = enumerate_points(ctx, n, c.point_budget);
    if (pts.size() > 1000) continue;
    const auto v = make_standard_nondegenerate(ctx, n);
    bool ok = true;
    std::map<std::string, std::size_t> tally;
    for (const auto& l : all_lines(ctx, pts)) {
      const auto cls = classify_line(ctx, v, l[0], l[1]);
      ok = ok && cls.type != LineType::Unknown && cls.count != 0 && (n >= 3 || cls.type != LineType::Contained);
      ++tally[to_string(cls.type)];
    }
    std::string detail;
    for (const auto& [k, cnt] : tally) detail += k + "=" + std::to_string(cnt) + " ";
    out.push_back(make("line_trichotomy_n" + std::to_string(n), ok, detail));
  }

  // Hyperplane sections.
  for (std::size_t n = 2; n <= top; ++n) {
    const auto planes = enumerate_hyperplanes(ctx, n, c.point_budget);
    if (planes.size() > 1000) continue;
    const auto v = make_standard_nondegenerate(ctx, n);
    const auto u = [&](int k) { return k < 0 ? 0 : u_count(k, q); };
    const int ni = static_cast<int>(n);
    const std::int64_t tangent = 1 + q * q * u(ni - 2), non_tangent = u(ni - 1);
    bool ok = true;
    for (const auto& h : planes) {
      const auto info = hyperplane_section(ctx, v, h);
      const bool on = v.contains(ProjPoint{h.dual.coords});
      const auto cnt = static_cast<std::int64_t>(info.count);
      ok = ok && (on ? info.type == SectionType::Tangent && cnt == tangent
                     : info.type == SectionType::NonTangent && cnt == non_tangent);
    }
    out.push_back(make("hyperplane_sections_n" + std::to_string(n), ok,
                       "tangent " + std::to_string(tangent) + ", non-tangent " + std::to_string(non_tangent)));

    const auto cone = make_standard_cone(ctx, n);
    const std::int64_t avoiding = u(ni - 1);
    // Through the vertex: cones over the tangent or non-tangent sections of the base.
    const std::int64_t through_tangent = 1 + q * q * (ni == 2 ? 1 : 1 + q * q * u(ni - 3));
    const std::int64_t through_plain = 1 + q * q * u(ni - 2);
    bool cone_ok = true;
    for (const auto& h : planes) {
      const auto info = hyperplane_section(ctx, cone, h);
      const auto cnt = static_cast<std::int64_t>(info.count);
      if (info.type == SectionType::VertexAvoiding)
        cone_ok = cone_ok && cnt == avoiding && info.rank == n;
      else
        cone_ok = cone_ok && info.type == SectionType::VertexIncident && (cnt == through_tangent || cnt == through_plain);
    }
    out.push_back(make("cone_sections_n" + std::to_string(n), cone_ok,
                       "avoiding " + std::to_string(avoiding) + ", through vertex {" + std::to_string(through_plain) +
                           ", " + std::to_string(through_tangent) + "}"));

    bool tangents = true;
    for (const auto& a : v.points()) {
      const auto info = hyperplane_section(ctx, v, tangent_hyperplane(ctx, v, a));
      tangents = tangents && info.type == SectionType::Tangent && incidence(ctx, a, tangent_hyperplane(ctx, v, a));
    }
    out.push_back(make("tangent_hyperplanes_n" + std::to_string(n), tangents));
  }
  return out;
}

std::vector<Check> suite_forms(const RunConfig& c) {
  const FieldCtx ctx(c.p, c.e);
  std::vector<Check> out;
  bool sizes = true;
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t d = 1; d <= 4; ++d) sizes = sizes && monomial_basis(n, d)->size() == binomial(n + d, d);
  out.push_back(make("monomial_basis_size", sizes));

  bool roundtrip = true;
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto total = projective_count(ctx.q2(), k);
    for (std::uint64_t i = 0; i < total; i += std::max<std::uint64_t>(1, total / 500))
      roundtrip = roundtrip && projective_index_of(ctx.q2(), projective_vector_at(ctx.q2(), k, i)) == i;
  }
  out.push_back(make("projective_index_roundtrip", roundtrip));

  const std::size_t n = 2, d = 1;
  std::uint64_t expected = 0, visited = 0;
  bool order = true;
  const std::uint64_t total = projective_count(ctx.q2(), monomial_basis(n, d)->size());
  enumerate_forms_projective(ctx, n, d, Shard{}, [&](std::uint64_t idx, const HomogeneousForm& f) {
    order = order && idx == expected++ && projective_index_of(ctx.q2(), f.coeffs()) == idx;
    ++visited;
  });
  out.push_back(make("form_enumeration", order && visited == total, std::to_string(visited) + " forms"));

  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, ctx.q2() - 1);
  const auto pts = enumerate_points(ctx, 2);
  bool product = true;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Hyperplane> hs;
    for (int i = 0; i < 2; ++i) {
      std::vector<FieldElement> u{{pick(rng)}, {pick(rng)}, {pick(rng)}};
      if (std::all_of(u.begin(), u.end(), [](FieldElement x) { return x.code == 0; })) u[0] = FieldCtx::one();
      hs.push_back(hyperplane_from(ctx, u));
    }
    const auto f = product_of_hyperplanes(ctx, hs);
    for (const auto& x : pts) {
      FieldElement expect = FieldCtx::one();
      for (const auto& h : hs) {
        FieldElement lin{};
        for (std::size_t v = 0; v < 3; ++v) lin = ctx.add(lin, ctx.mul(h.dual.coords[v], x.coords[v]));
        expect = ctx.mul(expect, lin);
      }
      product = product && evaluate_form(ctx, f, x) == expect;
    }
  }
  out.push_back(make("product_of_hyperplanes", product, "20 seeded pairs"));
  return out;
}

std::vector<Check> suite_codes(const RunConfig& c) {
  const FieldCtx ctx(c.p, c.e);
  const auto q = static_cast<std::int64_t>(ctx.q());
  std::vector<Check> out;
  const std::size_t top = max_n(c, ctx);
  for (std::size_t n = 2; n <= top; ++n)
    for (std::size_t d = 1; d <= static_cast<std::size_t>(std::min<std::int64_t>(q, 3)); ++d) {
      if (c.d != 0 && d != c.d) continue;
      const auto cone = make_standard_cone(ctx, n);
      const auto code = build_code(ctx, cone, d, c.evaluation_budget);
      const auto k = code_dimension(ctx, code);
      const auto theory = theoretical_parameters(static_cast<int>(n), static_cast<int>(d), q);
      out.push_back(make("injectivity_" + cell(n, d), k == binomial(n + d, d), "k=" + std::to_string(k)));

      const auto classes = projective_count(ctx.q2(), k);
      if (classes <= c.message_budget) {
        MinDistanceOptions opt;
        opt.budget = c.message_budget;
        opt.threads = c.threads;
        const auto p = min_distance(ctx, code, MinDistanceMode::ExhaustiveMessages, opt);
        out.push_back(make("exhaustive_dmin_" + cell(n, d), p.dmin == *theory.dmin,
                           std::to_string(p.dmin) + " vs " + std::to_string(*theory.dmin)));
        out.push_back(make("singleton_" + cell(n, d), p.dmin <= p.m - p.k + 1));
        if (classes <= 2000) {
          const auto f = min_distance(ctx, code, MinDistanceMode::ExhaustiveForms, opt);
          out.push_back(make("modes_agree_" + cell(n, d), f.dmin == p.dmin));
        }
      }
      const auto w = construct_extremal(ctx, static_cast<int>(n), static_cast<int>(d));
      const auto wt = weight(codeword_of(ctx, code, w.form));
      out.push_back(make("witness_weight_" + cell(n, d), wt == *theory.dmin,
                         std::to_string(wt) + " vs " + std::to_string(*theory.dmin)));
    }
  return out;
}

std::vector<Check> suite_bounds(const RunConfig& c) {
  const FieldCtx ctx(c.p, c.e);
  const auto q = static_cast<std::int64_t>(ctx.q());
  std::vector<Check> out;
  const int qi = static_cast<int>(q);

  bool conj = true;
  for (int d = 1; d <= qi; ++d) conj = conj && *conjectured_M(3, d, q).value == sorensen_max(d, q);
  out.push_back(make("conjecture_matches_sorensen", conj));

  bool monotone = true;
  for (int n = 3; n <= 6; ++n) {
    std::int64_t prev = 0;
    for (int d = 1; d <= qi; ++d) {
      const auto b = rank_n_bound(n, d, q);
      if (!b.known()) break;
      monotone = monotone && *b.value >= prev;
      prev = *b.value;
    }
  }
  out.push_back(make("rank_n_bound_monotone", monotone));

  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= qi; ++d) {
      if (c.d != 0 && static_cast<std::size_t>(d) != c.d) continue;
      const auto w = construct_extremal(ctx, n, d);
      const auto cone = make_standard_cone(ctx, static_cast<std::size_t>(n));
      const auto lines = check_union_of_cone_lines(ctx, cone, w.form);
      out.push_back(make("witness_" + cell(n, d), lines.is_union,
                         w.description + " count " + std::to_string(w.predicted_count)));
      if (n < 3) continue;
      // Points off the base hyperplane x_n = 0 lying on the other factors.
      std::size_t off = 0;
      const auto base = hyperplane_from(ctx, [&] {
        std::vector<FieldElement> u(static_cast<std::size_t>(n) + 1);
        u.back() = FieldCtx::one();
        return u;
      }());
      std::vector<Hyperplane> with_base = w.factors;
      with_base.front() = base;
      const auto f = product_of_hyperplanes(ctx, with_base);
      for (const auto& x : cone.points())
        if (!incidence(ctx, x, base) && evaluate_form(ctx, f, x).code == 0) ++off;
      out.push_back(make("off_hyperplane_margin_" + cell(n, d),
                         static_cast<std::int64_t>(off) <= off_hyperplane_margin(n, d, q), std::to_string(off)));
    }

  // Forms missing the vertex, streamed over every quadric or plane of P³ (vertex is point 0).
  for (int d = 1; d <= std::min(qi, 2); ++d) {
    if (c.d != 0 && static_cast<std::size_t>(d) != c.d) continue;
    const auto cone = make_standard_cone(ctx, 3);
    const auto basis = monomial_basis(3, static_cast<std::size_t>(d));
    const auto total = projective_count(ctx.q2(), basis->size());
    if (total > 2'000'000) continue;
    const Matrix rows = evaluation_matrix(ctx, *basis, cone.points());
    std::uint64_t worst = 0;
    sweep_zero_counts(ctx, rows, IndexRange{0, total}, [&](std::uint64_t idx, std::uint64_t zeros) {
      if (projective_vector_at(ctx.q2(), basis->size(), idx).back().code != 0) worst = std::max(worst, zeros);
    });
    const auto bound = vertex_missing_bound(3, d, q);
    out.push_back(make("vertex_missing_" + cell(3, static_cast<std::size_t>(d)),
                       static_cast<std::int64_t>(worst) <= bound,
                       std::to_string(worst) + " <= " + std::to_string(bound)));
  }

  for (int n = 2; n <= 3; ++n)
    for (int d = 1; d <= std::min(qi, 2); ++d) {
      const auto w = construct_serre_extremal(ctx, n, d);
      out.push_back(make("serre_equality_" + cell(n, d), true, std::to_string(w.predicted_count)));
    }

  // Oracle cells on the cone that fit the evaluation budget.
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t d = 1; d <= static_cast<std::size_t>(std::min(qi, 2)); ++d) {
      if (c.d != 0 && d != c.d) continue;
      if (c.n != 4 && n != c.n) continue;
      const auto cone = make_standard_cone(ctx, n);
      const auto forms = projective_count(ctx.q2(), binomial(n + d, d));
      if (forms > 2'000'000 || forms * cone.points().size() > c.evaluation_budget) continue;
      RunConfig cell_config = c;
      cell_config.n = n;
      cell_config.d = d;
      cell_config.variety = VarietyKind::Cone;
      OracleOptions opt;
      opt.threads = c.threads;
      const auto r = bruteforce_max_intersection(ctx, cone, d, {}, opt);
      const auto report = oracle_report(cell_config, r);
      const bool ch = report["characterization"]["union_of_lines"]["all"].get<bool>() &&
                      report["characterization"]["cone_with_vertex"].get<bool>();
      out.push_back(make("oracle_" + cell(n, d), report["matches_bound"].get<bool>(),
                         "max " + std::to_string(r.max_count) + ", bound " + report["bound"].dump()));
      out.push_back(make("characterization_" + cell(n, d), ch,
                         std::to_string(r.n_maximizers) + " maximizers"));
    }
  return out;
}

std::vector<Check> suite_threefold_sections(const RunConfig& c) {
  const FieldCtx ctx(c.p, c.e);
  const auto q = static_cast<std::int64_t>(ctx.q());
  std::vector<Check> out;
  const auto cone = make_standard_cone(ctx, 4);
  std::vector<Hyperplane> avoiding;
  for (auto& h : enumerate_hyperplanes(ctx, 4, c.point_budget))
    if (h.dual.coords.back().code != 0) avoiding.push_back(std::move(h));
  std::size_t total_avoiding = avoiding.size();
  if (avoiding.size() > 300) {
    std::mt19937_64 rng(c.seed);
    std::shuffle(avoiding.begin(), avoiding.end(), rng);
    avoiding.resize(25);
  }
  const std::string coverage = std::to_string(avoiding.size()) + " of " + std::to_string(total_avoiding) + " hyperplanes";
  auto section_count = [&](const HomogeneousForm& f, const Hyperplane& h) {
    std::int64_t count = 0;
    for (const auto& x : cone.points())
      if (incidence(ctx, x, h) && evaluate_form(ctx, f, x).code == 0) ++count;
    return count;
  };

  // Every hyperplane attaining the maximum cuts each vertex-avoiding hyperplane in a tangent plane.
  const auto forms = projective_count(ctx.q2(), 5);
  if (forms * cone.points().size() <= c.evaluation_budget) {
    const auto r = bruteforce_max_intersection(ctx, cone, 1);
    bool ok = static_cast<std::int64_t>(r.max_count) == 1 + q * q * sorensen_max(1, q);
    for (auto idx : r.maximizers) {
      const auto f = form_at_index(ctx, 4, 1, idx);
      for (const auto& h : avoiding) ok = ok && section_count(f, h) == sorensen_max(1, q);
    }
    out.push_back(make("maximizer_sections_n=4,d=1", ok,
                       std::to_string(r.maximizers.size()) + " maximizers, " + coverage));
  }
  // Witnesses of degree d <= q - 1 meet every sampled section in exactly M_3(d) points.
  for (int d = 1; d < static_cast<int>(q); ++d) {
    const auto w = construct_extremal(ctx, 4, d);
    bool ok = true;
    for (const auto& h : avoiding) ok = ok && section_count(w.form, h) == sorensen_max(d, q);
    out.push_back(make("witness_sections_" + cell(4, static_cast<std::size_t>(d)), ok, coverage));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"field", "proj", "hermitian", "forms", "codes", "bounds", "sections"};
  return names;
}

std::vector<Check> run_suite(const std::string& name, const RunConfig& config) {
  if (name == "field") return suite_field(config);
  if (name == "proj") return suite_proj(config);
  if (name == "hermitian") return suite_hermitian(config);
  if (name == "forms") return suite_forms(config);
  if (name == "codes") return suite_codes(config);
  if (name == "bounds") return suite_bounds(config);
  if (name == "sections") return suite_threefold_sections(config);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace hermcode::cli
