#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "stoprule/analytics.hpp"
#include "stoprule/report.hpp"

namespace {

using namespace stoprule;

// --seed wins over STOPRULE_SEED, which wins over the built-in default.
std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t flag_value) {
  if (seed_opt->count() > 0) return flag_value;
  if (const char* env = std::getenv("STOPRULE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("STOPRULE_SEED is not a valid integer: " +
                                  std::string(env));
    }
  }
  return kDefaultMasterSeed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and simulated statistics of sequential-trial stopping rules"};
  app.require_subcommand(1);

  std::string format = "human";
  app.add_option("--format", format, "Output format: human, csv, json")
      ->capture_default_str();

  std::string rule = "consecutive-rewards";
  std::string profile;
  int m = 1;
  int m_prime = 1;
  double p = 0.5;
  double h1 = 1.0;
  double h2 = 0.0;
  double tolerance = 1e-9;
  long long episodes = 100'000;
  long long stride = 1000;
  int m_max = 10;
  std::uint64_t seed = kDefaultMasterSeed;

  auto add_p = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "Probability of a reward per trial")
        ->required()
        ->check(CLI::Range(0.0, 1.0).description("strictly inside (0,1)"));
  };
  auto add_m = [&](CLI::App* cmd) {
    cmd->add_option("--m", m, "Required matching-outcome count")
        ->required()
        ->check(CLI::Range(1, kMaxRuleCount));
  };
  auto add_rule = [&](CLI::App* cmd) {
    cmd->add_option("--rule", rule, "Stopping rule kind")->capture_default_str();
  };
  auto add_episodes = [&](CLI::App* cmd) {
    cmd->add_option("--episodes", episodes, "Number of simulated episodes")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };

  CLI::App* cmd_stats = app.add_subcommand("stats", "Closed-form mean/variance/std and cost ratio");
  add_rule(cmd_stats);
  add_m(cmd_stats);
  add_p(cmd_stats);

  CLI::App* cmd_pmf = app.add_subcommand("pmf", "Stopping-time distribution, truncated at --tolerance");
  add_rule(cmd_pmf);
  add_m(cmd_pmf);
  add_p(cmd_pmf);
  cmd_pmf->add_option("--tolerance", tolerance, "Truncation-mass tolerance")
      ->capture_default_str()
      ->check(CLI::Range(1e-15, 1e-3));

  CLI::App* cmd_table3 = app.add_subcommand(
      "table3", "Theory-vs-simulation comparison over the full (m, p) grid");
  add_episodes(cmd_table3);
  const CLI::Option* table3_seed = cmd_table3->add_option("--seed", seed, "Master seed");

  CLI::App* cmd_trace = app.add_subcommand("trace", "Running-mean convergence trace");
  add_rule(cmd_trace);
  add_m(cmd_trace);
  add_p(cmd_trace);
  add_episodes(cmd_trace);
  cmd_trace->add_option("--stride", stride, "Episodes between trace points")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  const CLI::Option* trace_seed = cmd_trace->add_option("--seed", seed, "Master seed");

  CLI::App* cmd_fig1 = app.add_subcommand(
      "fig1", "Mean trials of both reward rules for m = 1..m-max");
  add_p(cmd_fig1);
  cmd_fig1->add_option("--m-max", m_max, "Largest m to tabulate")
      ->capture_default_str()
      ->check(CLI::Range(1, kMaxRuleCount));

  CLI::App* cmd_decide = app.add_subcommand(
      "decide", "Two-phase plan, cost ratios, and the adoption verdict");
  cmd_decide->add_option("--profile", profile, "Criticality profile")->required();
  add_m(cmd_decide);
  cmd_decide->add_option("--m-prime", m_prime, "Phase II count m'")
      ->capture_default_str()
      ->check(CLI::Range(1, kMaxRuleCount));
  add_p(cmd_decide);
  cmd_decide->add_option("--h1", h1, "Phase I cost-ratio threshold")
      ->required()
      ->check(CLI::PositiveNumber);
  const CLI::Option* h2_opt = cmd_decide->add_option("--h2", h2, "Phase II cost-ratio threshold")
      ->check(CLI::PositiveNumber);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const OutputFormat fmt = parse_format(format);
    Table table;

    if (cmd_stats->parsed()) {
      table = stats_table(RuleSpec(parse_rule_kind(rule), m), Environment(p));
    } else if (cmd_pmf->parsed()) {
      table = pmf_table(RuleSpec(parse_rule_kind(rule), m), Environment(p), tolerance);
    } else if (cmd_table3->parsed()) {
      table = comparison_table(episodes, resolve_seed(table3_seed, seed));
    } else if (cmd_trace->parsed()) {
      ExperimentConfig cfg{RuleSpec(parse_rule_kind(rule), m), Environment(p),
                           episodes, resolve_seed(trace_seed, seed)};
      table = trace_table(cfg, stride);
    } else if (cmd_fig1->parsed()) {
      table = fig1_table(Environment(p), m_max);
    } else if (cmd_decide->parsed()) {
      if (h2_opt->count() == 0) h2 = h1;
      table = decide_table(parse_profile(profile), m, m_prime, Environment(p),
                           DecisionThresholds(h1, h2));
    }

    std::cout << render(table, fmt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
