#include "hermcode_cli/commands.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hermcode/codes.hpp"
#include "hermcode/hermitian.hpp"
#include "hermcode/json_io.hpp"
#include "hermcode_cli/verify.hpp"

namespace hermcode::cli {
namespace {

using nlohmann::json;

json header(const char* command, const RunConfig& c, const FieldCtx& ctx) {
  return {{"schema", 1}, {"command", command}, {"field", field_to_json(ctx)}, {"n", c.n}, {"d", c.d},
          {"p", c.p},    {"e", c.e}};
}

std::vector<ProjPoint> variety_points(const RunConfig& c, const FieldCtx& ctx) {
  switch (c.variety) {
    case VarietyKind::Cone: return make_standard_cone(ctx, c.n).points(c.point_budget);
    case VarietyKind::Nondegenerate: return make_standard_nondegenerate(ctx, c.n).points(c.point_budget);
    case VarietyKind::Space: return enumerate_points(ctx, c.n, c.point_budget);
  }
  return {};
}

BoundValue oracle_bound(const RunConfig& c, std::int64_t q) {
  const int n = static_cast<int>(c.n), d = static_cast<int>(c.d);
  switch (c.variety) {
    case VarietyKind::Cone:
      if (n == 2) return {n2_bound(d, q), Provenance::Theorem, "generator lines of the plane cone"};
      return rank_n_bound(n, d, q, c.assume_conjecture);
    case VarietyKind::Nondegenerate: {
      BoundValue b = known_M(n, d, q);
      if (!b.known() && c.assume_conjecture && n >= 3) b = conjectured_M(n, d, q);
      return b;
    }
    case VarietyKind::Space: return {serre_bound(n, d, q * q), Provenance::Theorem, "Serre's inequality"};
  }
  return {};
}

json parameters_json(const TheoreticalParameters& t) {
  return {{"m", t.m},
          {"k", t.k},
          {"dmin", t.dmin ? json(*t.dmin) : json(nullptr)},
          {"kind", to_string(t.kind)},
          {"provenance", to_string(t.provenance)}};
}

CommandResult budget_refusal(json report, const BudgetExceeded& e) {
  report["error"] = {{"kind", "budget"}, {"message", e.what()}, {"required", e.required()}, {"budget", e.budget()}};
  return {std::move(report), kBudgetRefusal, {}};
}

}  // namespace

void validate(const RunConfig& c) {
  const FieldCtx ctx(c.p, c.e);
  if (c.n < 2) throw std::invalid_argument("n must be at least 2");
  if (c.d < 1 || c.d > ctx.q()) throw std::invalid_argument("d must satisfy 1 <= d <= q");
  if (c.shard.total == 0 || c.shard.index >= c.shard.total) throw std::invalid_argument("shard index must be below total");
}

CommandResult cmd_params(const RunConfig& c) {
  validate(c);
  const FieldCtx ctx(c.p, c.e);
  const auto q = static_cast<std::int64_t>(ctx.q());
  json report = header("params", c, ctx);
  const TheoreticalParameters theory =
      theoretical_parameters(static_cast<int>(c.n), static_cast<int>(c.d), q, c.assume_conjecture);
  report["theoretical"] = parameters_json(theory);
  report["assume_conjecture"] = c.assume_conjecture;

  try {
    const HermitianVariety cone = make_standard_cone(ctx, c.n);
    const FunctionalCode code = build_code(ctx, c.n, cone.points(c.point_budget), c.d, c.evaluation_budget);
    const std::uint64_t k = code_dimension(ctx, code);
    const std::uint64_t classes = projective_count(ctx.q2(), k);
    CodeParameters computed;
    if (classes <= c.message_budget) {
      MinDistanceOptions opt;
      opt.budget = c.message_budget;
      opt.threads = c.threads;
      computed = min_distance(ctx, code, MinDistanceMode::ExhaustiveMessages, opt);
      report["method"] = "exhaustive_messages";
    } else if (c.n <= 4) {
      const ExtremalWitness w = construct_extremal(ctx, static_cast<int>(c.n), static_cast<int>(c.d));
      MinDistanceOptions opt;
      opt.witnesses = {w.form};
      computed = min_distance(ctx, code, MinDistanceMode::WitnessOnly, opt);
      report["method"] = "witness_only";
      report["witness"] = {{"description", w.description}, {"count", w.predicted_count}};
      report["message_classes"] = classes;
    } else {
      throw BudgetExceeded("message classes", classes, c.message_budget);
    }
    report["m"] = computed.m;
    report["k"] = computed.k;
    report["dmin"] = computed.dmin;
    report["dmin_status"] = to_string(computed.dmin_status);

    bool match = computed.m == theory.m && computed.k == theory.k;
    if (theory.kind == DminKind::Exact) match = match && computed.dmin == *theory.dmin;
    if (theory.kind == DminKind::LowerBound && computed.dmin_status == DminStatus::Exact)
      match = match && computed.dmin >= *theory.dmin;
    report["match"] = match;
    if (theory.kind == DminKind::Unknown) return {report, kUnknownBound, {}};
    return {report, match ? kPass : kInvariantFailure, {}};
  } catch (const BudgetExceeded& e) {
    CommandResult r = budget_refusal(std::move(report), e);
    if (theory.kind == DminKind::Unknown) r.exit_code = kUnknownBound;
    return r;
  }
}

CommandResult cmd_verify(const RunConfig& c) {
  const FieldCtx ctx(c.p, c.e);
  json report = {{"schema", 1}, {"command", "verify"}, {"suite", c.suite}, {"field", field_to_json(ctx)}};
  std::vector<std::string> suites;
  if (c.suite == "all")
    suites = suite_names();
  else
    suites = {c.suite};
  json checks = json::array();
  bool pass = true, refused = false;
  for (const auto& s : suites) {
    try {
      for (const auto& ch : run_suite(s, c)) {
        checks.push_back({{"suite", s}, {"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
        pass = pass && ch.pass;
      }
    } catch (const BudgetExceeded& e) {
      checks.push_back({{"suite", s}, {"name", "budget"}, {"pass", false}, {"detail", e.what()}});
      refused = true;
    }
  }
  report["checks"] = checks;
  report["pass"] = pass && !refused;
  if (!pass) {
    json failing = json::array();
    for (const auto& ch : checks)
      if (!ch["pass"].get<bool>()) failing.push_back(ch["name"]);
    report["failing"] = failing;
  }
  return {report, !pass ? kInvariantFailure : refused ? kBudgetRefusal : kPass, {}};
}

json oracle_report(const RunConfig& c, const OracleResult& r) {
  const FieldCtx ctx(c.p, c.e);
  const auto q = static_cast<std::int64_t>(ctx.q());
  json report = header("oracle", c, ctx);
  report["variety"] = to_string(c.variety);
  report["assume_conjecture"] = c.assume_conjecture;
  report.update(oracle_to_json(r));
  const BoundValue bound = oracle_bound(c, q);
  report["bound"] = bound.value ? json(*bound.value) : json(nullptr);
  report["bound_provenance"] = to_string(bound.provenance);
  report["bound_source"] = bound.source;
  const bool complete = r.range.begin == 0 && r.range.end == r.total_forms;
  report["complete"] = complete;
  if (!complete) return report;

  if (bound.value) report["matches_bound"] = static_cast<std::int64_t>(r.max_count) == *bound.value;
  json ch = nullptr;
  if (c.variety == VarietyKind::Cone) {
    const HermitianVariety cone = make_standard_cone(ctx, c.n);
    const std::uint64_t expected_lines = (r.max_count - 1) / ctx.q2();
    bool all_union = true, all_cone = true;
    std::set<std::size_t> line_counts;
    for (std::uint64_t idx : r.maximizers) {
      const HomogeneousForm f = form_at_index(ctx, c.n, c.d, idx);
      const LineUnionCheck u = check_union_of_cone_lines(ctx, cone, f);
      all_union = all_union && u.is_union && u.lines == expected_lines;
      line_counts.insert(u.lines);
      all_cone = all_cone && check_cone_with_vertex(ctx, f, *cone.vertex());
    }
    ch = {{"checked", r.maximizers.size()},
          {"expected_lines", expected_lines},
          {"union_of_lines", {{"all", all_union}, {"line_counts", line_counts}}},
          {"cone_with_vertex", all_cone}};
  }
  report["characterization"] = ch;
  return report;
}

namespace {

int oracle_exit(const RunConfig& c, const json& report) {
  if (!report["complete"].get<bool>()) return kPass;
  if (report["bound"].is_null()) return kUnknownBound;
  if (!report["matches_bound"].get<bool>()) return kInvariantFailure;
  const auto& ch = report["characterization"];
  // Structural characterizations are established for n <= 4 only.
  if (!ch.is_null() && c.n <= 4 &&
      !(ch["union_of_lines"]["all"].get<bool>() && ch["cone_with_vertex"].get<bool>()))
    return kInvariantFailure;
  return kPass;
}

}  // namespace

CommandResult cmd_oracle(const RunConfig& c) {
  validate(c);
  const FieldCtx ctx(c.p, c.e);
  try {
    const auto pts = variety_points(c, ctx);
    OracleOptions opt;
    opt.threads = c.threads;
    opt.budget = c.evaluation_budget;
    const OracleResult r = bruteforce_max_intersection(ctx, pts, c.n, c.d, c.shard, opt);
    json report = oracle_report(c, r);
    const int code = oracle_exit(c, report);
    return {report, code, {}};
  } catch (const BudgetExceeded& e) {
    json report = header("oracle", c, ctx);
    report["variety"] = to_string(c.variety);
    return budget_refusal(std::move(report), e);
  }
}

CommandResult cmd_merge(const RunConfig& c) {
  if (c.inputs.empty()) throw std::invalid_argument("merge needs at least one partial report");
  std::vector<OracleResult> parts;
  RunConfig merged_config;
  json identity;
  for (const auto& text : c.inputs) {
    const json j = json::parse(text);
    const json id = {{"field", j.at("field")},
                     {"variety", j.at("variety")},
                     {"n", j.at("n")},
                     {"d", j.at("d")},
                     {"assume_conjecture", j.at("assume_conjecture")}};
    if (identity.is_null()) {
      identity = id;
      const FieldCtx ctx = field_from_json(j.at("field"));
      merged_config.p = ctx.p();
      merged_config.e = ctx.e();
      merged_config.n = j.at("n").get<std::size_t>();
      merged_config.d = j.at("d").get<std::size_t>();
      merged_config.variety = parse_variety(j.at("variety").get<std::string>());
      merged_config.assume_conjecture = j.at("assume_conjecture").get<bool>();
    } else if (id != identity) {
      throw std::invalid_argument("partial reports describe different problems");
    }
    parts.push_back(oracle_from_json(j));
  }
  const OracleResult r = merge_oracle_results(parts);
  json report = oracle_report(merged_config, r);
  return {report, oracle_exit(merged_config, report), {}};
}

CommandResult cmd_construct(const RunConfig& c) {
  validate(c);
  const FieldCtx ctx(c.p, c.e);
  const auto q = static_cast<std::int64_t>(ctx.q());
  json report = header("construct", c, ctx);
  report["variety"] = to_string(c.variety);
  if (c.variety == VarietyKind::Nondegenerate)
    throw std::invalid_argument("constructions are provided for the cone and for the whole space");

  const ExtremalWitness w = c.variety == VarietyKind::Space
                                ? construct_serre_extremal(ctx, static_cast<int>(c.n), static_cast<int>(c.d))
                                : construct_extremal(ctx, static_cast<int>(c.n), static_cast<int>(c.d));
  const auto pts = variety_points(c, ctx);
  const FunctionalCode code = build_code(ctx, c.n, pts, c.d, c.evaluation_budget);
  const auto word = codeword_of(ctx, code, w.form);
  json factors = json::array();
  for (const auto& h : w.factors) {
    std::vector<std::uint32_t> dual;
    for (auto x : h.dual.coords) dual.push_back(x.code);
    factors.push_back(dual);
  }
  std::vector<std::uint64_t> zero_points;
  for (std::size_t j = 0; j < word.size(); ++j)
    if (word[j].code == 0) zero_points.push_back(j);

  const HomogeneousForm normalized = w.form.projectivized(ctx);
  report["description"] = w.description;
  report["form"] = form_to_json(w.form);
  report["form_index"] = projective_index_of(ctx.q2(), normalized.coeffs());
  report["factors"] = factors;
  report["predicted_count"] = w.predicted_count;
  report["count"] = zero_points.size();
  report["m"] = code.length();
  report["codeword_weight"] = weight(word);
  report["zero_point_indices"] = zero_points;

  bool match = static_cast<std::int64_t>(zero_points.size()) == w.predicted_count;
  if (c.variety == VarietyKind::Cone) {
    const auto theory = theoretical_parameters(static_cast<int>(c.n), static_cast<int>(c.d), q);
    report["theoretical_dmin"] = *theory.dmin;
    match = match && weight(word) == *theory.dmin;
  } else {
    report["bound"] = serre_bound(static_cast<int>(c.n), static_cast<int>(c.d), q * q);
  }
  report["match"] = match;
  return {report, match ? kPass : kInvariantFailure, {}};
}

CommandResult cmd_export(const RunConfig& c) {
  validate(c);
  const FieldCtx ctx(c.p, c.e);
  json report = header("export", c, ctx);
  report["what"] = c.what;
  try {
    const auto pts = variety_points(c, ctx);
    std::ostringstream text;
    if (c.what == "points") {
      write_points_csv(text, ctx, c.n, pts);
    } else if (c.what == "generator") {
      write_generator_matrix(text, ctx, build_code(ctx, c.n, pts, c.d, c.evaluation_budget));
    } else if (c.what == "weights") {
      const auto dist =
          weight_distribution(ctx, build_code(ctx, c.n, pts, c.d, c.evaluation_budget), c.message_budget, c.threads);
      text << "weight,count\n";
      for (const auto& [w, n] : dist) text << w << ',' << n << '\n';
    } else {
      throw std::invalid_argument("unknown export target: " + c.what);
    }
    return {report, kPass, text.str()};
  } catch (const BudgetExceeded& e) {
    return budget_refusal(std::move(report), e);
  }
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

const char* to_string(VarietyKind k) noexcept {
  switch (k) {
    case VarietyKind::Cone: return "cone";
    case VarietyKind::Nondegenerate: return "nondegenerate";
    case VarietyKind::Space: return "space";
  }
  return "?";
}

VarietyKind parse_variety(const std::string& s) {
  if (s == "cone") return VarietyKind::Cone;
  if (s == "nondegenerate") return VarietyKind::Nondegenerate;
  if (s == "space") return VarietyKind::Space;
  throw std::invalid_argument("unknown variety: " + s);
}

Shard parse_shard(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("shard must look like i/T");
  Shard out{std::stoull(s.substr(0, slash)), std::stoull(s.substr(slash + 1))};
  if (out.total == 0 || out.index >= out.total) throw std::invalid_argument("shard index must be below total");
  return out;
}

}  // namespace hermcode::cli
