// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hermcode/bounds.hpp"
#include "hermcode/codes.hpp"
#include "hermcode_cli/commands.hpp"
#include "oracles.hpp"

using namespace hermcode;

namespace {

struct Outcome {
  bool pass = true;
  int failures = 0;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      ++failures;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string join(const std::set<std::size_t>& s) {
  std::string out = "{";
  for (auto x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

// Criteria whose stated target cannot hold; each must fail on exactly one documented check.
const std::set<int> kUnattainable{2};

Outcome point_counts() {
  Outcome o;
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}}) {
    const FieldCtx ctx(p, e);
    const std::int64_t q = ctx.q();
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto nd = make_standard_nondegenerate(ctx, n).points().size();
      const auto cone = make_standard_cone(ctx, n).points().size();
      const auto tag = "q=" + std::to_string(q) + ",n=" + std::to_string(n);
      o.expect(static_cast<std::int64_t>(nd) == count_points_formula(static_cast<int>(n), RankCase::Nondegenerate, q),
               "U " + tag);
      o.expect(static_cast<std::int64_t>(cone) == count_points_formula(static_cast<int>(n), RankCase::RankNCone, q),
               "cone " + tag);
      o.expect(nd == oracle::hermitian_count(ctx, n, n + 1), "U brute " + tag);
      o.expect(cone == oracle::hermitian_count(ctx, n, n), "cone brute " + tag);
    }
  }
  o.expect(make_standard_cone(FieldCtx(2, 1), 4).points().size() == 181, "181");
  o.expect(make_standard_cone(FieldCtx(3, 1), 4).points().size() == 2521, "2521");
  return o;
}

Outcome section_dichotomies() {
  Outcome o;
  const FieldCtx ctx(2, 1);
  const std::size_t q = 2;

  for (std::size_t n = 2; n <= 4; ++n) {
    const auto v = make_standard_nondegenerate(ctx, n);
    const auto pts = enumerate_points(ctx, n);
    std::set<std::size_t> line_counts;
    if (n <= 3) {
      std::set<std::vector<ProjPoint>> seen;
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          auto line = line_through(ctx, pts[i], pts[j]);
          if (line.front() != pts[i] || !seen.insert(line).second) continue;
          const auto c = classify_line(ctx, v, pts[i], pts[j]);
          o.expect(c.type != LineType::Unknown, "line with " + std::to_string(c.count) + " points");
          line_counts.insert(c.count);
        }
      const std::set<std::size_t> allowed{0, 1, q + 1, q * q + 1};
      for (auto c : line_counts) o.expect(allowed.count(c) == 1, "line count " + std::to_string(c));
    }
    std::set<std::size_t> tangent, nontangent;
    for (const auto& h : enumerate_hyperplanes(ctx, n)) {
      const auto s = hyperplane_section(ctx, v, h);
      (s.type == SectionType::Tangent ? tangent : nontangent).insert(s.count);
      o.expect(s.type == SectionType::Tangent || s.type == SectionType::NonTangent, "degenerate section");
    }
    const auto un1 = static_cast<std::size_t>(count_points_formula(static_cast<int>(n - 1), RankCase::Nondegenerate, 2));
    const auto un2 = static_cast<std::size_t>(count_points_formula(static_cast<int>(n - 2), RankCase::Nondegenerate, 2));
    o.expect(tangent == std::set<std::size_t>{1 + q * q * un2}, "tangent sections n=" + std::to_string(n));
    o.expect(nontangent == std::set<std::size_t>{un1}, "non-tangent sections n=" + std::to_string(n));
  }

  std::set<std::size_t> incident4;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto cone = make_standard_cone(ctx, n);
    const auto un1 = static_cast<std::size_t>(count_points_formula(static_cast<int>(n - 1), RankCase::Nondegenerate, 2));
    std::set<std::size_t> avoiding, incident;
    for (const auto& h : enumerate_hyperplanes(ctx, n)) {
      const auto s = hyperplane_section(ctx, cone, h);
      (s.type == SectionType::VertexAvoiding ? avoiding : incident).insert(s.count);
    }
    o.expect(avoiding == std::set<std::size_t>{un1}, "vertex-avoiding n=" + std::to_string(n));
    if (n == 4) incident4 = incident;
  }

  const std::set<std::size_t> stated{1 + q * q * (q * q * q + 1), 1 + q * q * (q * q + q + 1)};
  o.expect(incident4 == stated,
           "vertex-incident sections of the cone in P^4 are " + join(incident4) + ", stated " + join(stated) +
               "; a tangent plane section of the Hermitian surface has q^3+q^2+1 points, so the second value is "
               "1+q^2(q^3+q^2+1) = 53");
  return o;
}

struct OracleCase {
  const char* label;
  HermitianVariety v;
  std::size_t d;
  std::uint64_t expected;
};

std::vector<OracleCase> oracle_cases(const FieldCtx& ctx) {
  return {{"cone n=2 d=1", make_standard_cone(ctx, 2), 1, 5},  {"cone n=2 d=2", make_standard_cone(ctx, 2), 2, 9},
          {"cone n=3 d=1", make_standard_cone(ctx, 3), 1, 13}, {"cone n=3 d=2", make_standard_cone(ctx, 3), 2, 25},
          {"cone n=4 d=1", make_standard_cone(ctx, 4), 1, 53}, {"U3 d=1", make_standard_nondegenerate(ctx, 3), 1, 13},
          {"U3 d=2", make_standard_nondegenerate(ctx, 3), 2, 23}};
}

std::vector<OracleResult> g_oracle;  // shared with the characterization criterion

Outcome oracle_maxima() {
  Outcome o;
  const FieldCtx ctx(2, 1);
  OracleOptions opt;
  opt.threads = 0;
  opt.max_retained = 1'000'000;
  for (const auto& c : oracle_cases(ctx)) {
    const auto r = bruteforce_max_intersection(ctx, c.v, c.d, {}, opt);
    g_oracle.push_back(r);
    o.expect(r.max_count == c.expected, std::string(c.label) + " max " + std::to_string(r.max_count));
    const std::int64_t q = 2;
    const int n = static_cast<int>(c.v.n()), d = static_cast<int>(c.d);
    std::int64_t theory = 0;
    if (c.v.is_rank_n_cone())
      theory = n == 2 ? n2_bound(d, q) : *rank_n_bound(n, d, q).value;
    else
      theory = *known_M(n, d, q).value;
    o.expect(static_cast<std::int64_t>(r.max_count) == theory, std::string(c.label) + " vs closed form");
  }
  return o;
}

Outcome characterization() {
  Outcome o;
  const FieldCtx ctx(2, 1);
  const auto cases = oracle_cases(ctx);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    if (!c.v.is_rank_n_cone()) continue;
    const auto& r = g_oracle.at(i);
    o.expect(r.maximizers.size() == r.n_maximizers, std::string(c.label) + " maximizers truncated");
    const std::uint64_t lines = (r.max_count - 1) / 4;
    for (auto idx : r.maximizers) {
      const auto f = form_at_index(ctx, c.v.n(), c.d, idx);
      const auto u = check_union_of_cone_lines(ctx, c.v, f);
      o.expect(u.is_union && u.lines == lines, std::string(c.label) + " maximizer not a union of lines");
      o.expect(check_cone_with_vertex(ctx, f, *c.v.vertex()), std::string(c.label) + " maximizer not a cone");
      o.expect(intersection_count(ctx, f, c.v.points()) == r.max_count, std::string(c.label) + " recount");
    }
    // Maximizers on the cone are exactly the cones over maximizers on its base.
    const std::size_t n = c.v.n();
    const auto base_pts = make_standard_nondegenerate(ctx, n - 1).points();
    const auto naive = oracle::naive_max(ctx, base_pts, n - 1, c.d);
    o.expect(naive.max == lines, std::string(c.label) + " base maximum " + std::to_string(naive.max));
    o.expect(naive.maximizers == r.n_maximizers, std::string(c.label) + " maximizer count " +
                                                     std::to_string(r.n_maximizers) + " vs base configurations " +
                                                     std::to_string(naive.maximizers));
  }
  return o;
}

Outcome code_parameters() {
  Outcome o;
  struct Case {
    std::uint32_t p;
    std::size_t n, d, m, k, dmin;
  };
  for (const auto& c : {Case{2, 2, 1, 13, 3, 8}, Case{2, 2, 2, 13, 6, 4}, Case{2, 3, 1, 37, 4, 24},
                        Case{2, 3, 2, 37, 10, 12}, Case{2, 4, 1, 181, 5, 128}, Case{3, 2, 1, 37, 3, 27},
                        Case{3, 2, 2, 37, 6, 18}}) {
    const FieldCtx ctx(c.p, 1);
    const auto code = build_code(ctx, make_standard_cone(ctx, c.n), c.d);
    MinDistanceOptions opt;
    opt.threads = 0;
    const auto got = min_distance(ctx, code, MinDistanceMode::ExhaustiveMessages, opt);
    const auto t = theoretical_parameters(static_cast<int>(c.n), static_cast<int>(c.d), c.p);
    const auto tag = "[" + std::to_string(got.m) + "," + std::to_string(got.k) + "," + std::to_string(got.dmin) + "]";
    o.expect(got.m == c.m && got.k == c.k && got.dmin == c.dmin, tag);
    o.expect(t.m == got.m && t.k == got.k && t.dmin == got.dmin, tag + " vs closed form");
  }
  return o;
}

Outcome witness_weights() {
  Outcome o;
  auto check = [&](std::uint32_t p, int n, int d, std::uint64_t expected) {
    const FieldCtx ctx(p, 1);
    const auto code = build_code(ctx, make_standard_cone(ctx, static_cast<std::size_t>(n)), static_cast<std::size_t>(d));
    MinDistanceOptions opt;
    opt.witnesses.push_back(construct_extremal(ctx, n, d).form);
    const auto got = min_distance(ctx, code, MinDistanceMode::WitnessOnly, opt);
    const auto tag = "q=" + std::to_string(p) + ",n=" + std::to_string(n) + ",d=" + std::to_string(d);
    o.expect(got.dmin == expected, tag + " weight " + std::to_string(got.dmin));
    o.expect(got.dmin_status == DminStatus::WitnessUpperBoundOnly, tag + " status");
    o.expect(theoretical_parameters(n, d, p).dmin == got.dmin, tag + " vs closed form");
  };
  check(2, 4, 2, 88);
  check(3, 2, 3, 9);
  for (std::uint64_t d = 1; d <= 3; ++d) check(3, 3, static_cast<int>(d), 9 * (27 - 3 * d - (d - 1)));
  return o;
}

Outcome injectivity() {
  Outcome o;
  auto check = [&](std::uint32_t p, std::size_t n, std::size_t d) {
    const FieldCtx ctx(p, 1);
    const auto code = build_code(ctx, make_standard_cone(ctx, n), d);
    o.expect(code_dimension(ctx, code) == binomial(n + d, d),
             "q=" + std::to_string(p) + ",n=" + std::to_string(n) + ",d=" + std::to_string(d));
  };
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t d = 1; d <= 2; ++d) check(p, n, d);
  check(3, 2, 3);
  return o;
}

Outcome serre_equality() {
  Outcome o;
  const FieldCtx ctx(2, 1);
  for (int n = 2; n <= 3; ++n) {
    const auto pts = enumerate_points(ctx, static_cast<std::size_t>(n));
    for (int d = 1; d <= 2; ++d) {
      const auto w = construct_serre_extremal(ctx, n, d);
      const auto bound = serre_bound(n, d, 4);
      const auto tag = "n=" + std::to_string(n) + ",d=" + std::to_string(d);
      o.expect(static_cast<std::int64_t>(intersection_count(ctx, w.form, pts)) == bound, tag + " construction");
      o.expect(bound == d * (n == 2 ? 4 : 16) + pi_count(n - 2, 4), tag + " closed form");
      if (n == 2) {
        const auto r = bruteforce_max_intersection(ctx, pts, 2, static_cast<std::size_t>(d));
        o.expect(static_cast<std::int64_t>(r.max_count) == bound, tag + " oracle " + std::to_string(r.max_count));
      }
    }
  }
  return o;
}

Outcome shard_determinism() {
  Outcome o;
  cli::RunConfig c;
  c.p = 2;
  c.e = 1;
  c.n = 3;
  c.d = 2;
  c.threads = 0;
  const auto whole = cli::cmd_oracle(c);
  cli::RunConfig m = c;
  for (std::uint64_t i = 0; i < 4; ++i) {
    cli::RunConfig s = c;
    s.shard = {i, 4};
    m.inputs.push_back(cli::dump_report(cli::cmd_oracle(s).report));
  }
  const auto merged = cli::cmd_merge(m);
  o.expect(whole.exit_code == cli::kPass, "unsharded exit " + std::to_string(whole.exit_code));
  o.expect(merged.exit_code == cli::kPass, "merged exit " + std::to_string(merged.exit_code));
  o.expect(cli::dump_report(merged.report) == cli::dump_report(whole.report), "merged report differs");
  return o;
}

Outcome bound_table() {
  Outcome o;
  for (int d = 1; d <= 2; ++d) {
    const auto m3 = *known_M(3, d, 2).value;
    o.expect(*rank_n_bound(4, d, 2).value == 1 + 4 * m3, "rank_n_bound(4," + std::to_string(d) + ",2)");
    o.expect(static_cast<std::uint64_t>(181 - (1 + 4 * m3)) == theoretical_parameters(4, d, 2).dmin,
             "dmin d=" + std::to_string(d));
  }
  for (std::int64_t q : {2, 3})
    for (int d = 1; d <= q; ++d)
      o.expect(conjectured_M(3, d, q).value == sorensen_max(d, q),
               "conjecture q=" + std::to_string(q) + ",d=" + std::to_string(d));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"point counts", point_counts},
      {"section dichotomies", section_dichotomies},
      {"intersection maxima", oracle_maxima},
      {"maximizer characterization", characterization},
      {"exhaustive code parameters", code_parameters},
      {"witness weights", witness_weights},
      {"generator injectivity", injectivity},
      {"Serre equality", serre_equality},
      {"shard determinism", shard_determinism},
      {"bound table identities", bound_table},
  };
  int passed = 0;
  bool ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool known = kUnattainable.count(id) == 1;
    std::printf("criterion %2d %-28s %s (%.2fs)%s%s%s\n", id, criteria[i].first, r.pass ? "PASS" : "FAIL", secs,
                r.detail.empty() ? "" : " ", r.detail.c_str(), known && !r.pass ? " [unattainable as stated]" : "");
    passed += r.pass;
    if (known ? r.failures != 1 : !r.pass) ok = false;
  }
  std::printf("%d/%zu criteria pass; %zu unattainable as stated\n", passed, criteria.size(), kUnattainable.size());
  return ok ? 0 : 1;
}
