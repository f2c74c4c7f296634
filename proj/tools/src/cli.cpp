#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hermcode_cli/commands.hpp"
#include "hermcode_cli/verify.hpp"

namespace hermcode::cli {
namespace {

// Exit code for unusable arguments; distinct from the verification outcomes.
constexpr int kUsageError = 4;

struct Options {
  RunConfig config;
  std::string variety = "cone";
  std::string shard = "0/1";
  std::string out;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--p", o.config.p, "field characteristic")->required();
  sub->add_option("--e", o.config.e, "q = p^e")->required();
  sub->add_option("--n", o.config.n, "ambient projective dimension");
  sub->add_option("--d", o.config.d, "form degree (d <= q)");
  sub->add_option("--variety", o.variety, "cone, nondegenerate or space")
      ->check(CLI::IsMember({"cone", "nondegenerate", "space"}));
  sub->add_option("--point-budget", o.config.point_budget);
  sub->add_option("--evaluation-budget", o.config.evaluation_budget);
  sub->add_option("--message-budget", o.config.message_budget);
  sub->add_option("--threads", o.config.threads, "worker threads, 0 for all cores");
  sub->add_flag("--assume-conjecture", o.config.assume_conjecture,
                "substitute conjectured maxima for unknown ones");
  sub->add_option("--seed", o.config.seed, "seed for sampled checks");
  sub->add_option("--out", o.out, "write the report here instead of stdout");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Functional codes on Hermitian cones: parameters, oracles and witnesses"};
  app.require_subcommand(1);

  Options params, verify, oracle, construct, exporter, merge;
  verify.config.n = 4;
  verify.config.d = 0;

  auto* s_params = app.add_subcommand("params", "theoretical and computed code parameters");
  add_common(s_params, params);
  auto* s_verify = app.add_subcommand("verify", "run invariant suites");
  add_common(s_verify, verify);
  s_verify->add_option("--suite", verify.config.suite, "suite name or all");
  auto* s_oracle = app.add_subcommand("oracle", "exhaustive intersection maximum");
  add_common(s_oracle, oracle);
  s_oracle->add_option("--shard", oracle.shard, "i/T");
  auto* s_construct = app.add_subcommand("construct", "extremal witness");
  add_common(s_construct, construct);
  auto* s_export = app.add_subcommand("export", "points CSV, generator matrix or weight CSV");
  add_common(s_export, exporter);
  s_export->add_option("--what", exporter.config.what)->check(CLI::IsMember({"points", "generator", "weights"}));
  auto* s_merge = app.add_subcommand("merge", "merge partial oracle reports");
  std::vector<std::string> merge_files;
  s_merge->add_option("reports", merge_files, "partial report files")->required();
  s_merge->add_option("--out", merge.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : kUsageError;
  }

  Options* chosen = nullptr;
  CommandResult (*run)(const RunConfig&) = nullptr;
  if (*s_params) chosen = &params, run = cmd_params;
  if (*s_verify) chosen = &verify, run = cmd_verify;
  if (*s_oracle) chosen = &oracle, run = cmd_oracle;
  if (*s_construct) chosen = &construct, run = cmd_construct;
  if (*s_export) chosen = &exporter, run = cmd_export;
  if (*s_merge) chosen = &merge, run = cmd_merge;

  CommandResult result;
  try {
    RunConfig& c = chosen->config;
    c.variety = parse_variety(chosen->variety);
    c.shard = parse_shard(chosen->shard);
    for (const auto& f : merge_files) c.inputs.push_back(read_file(f));
    result = run(c);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const std::string payload = result.text.empty() ? dump_report(result.report) : result.text;
  if (chosen->out.empty()) {
    out << payload;
  } else {
    std::ofstream f(chosen->out);
    if (!f) {
      err << "error: cannot write " << chosen->out << '\n';
      return kUsageError;
    }
    f << payload;
  }
  if (result.exit_code == kBudgetRefusal && result.report.contains("error"))
    err << result.report["error"]["message"].get<std::string>() << '\n';
  return result.exit_code;
}

}  // namespace hermcode::cli
