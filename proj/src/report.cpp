#include "stoprule/report.hpp"

#include <cstdio>
#include <stdexcept>

#include "stoprule/analytics.hpp"

namespace stoprule {

namespace {

std::string printf_str(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "human") return OutputFormat::Human;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format '" + name +
                              "' (valid: human, csv, json)");
}

RuleKind parse_rule_kind(const std::string& name) {
  if (name == "consecutive-rewards") return RuleKind::ConsecutiveRewards;
  if (name == "total-rewards") return RuleKind::TotalRewards;
  if (name == "consecutive-punishments") return RuleKind::ConsecutivePunishments;
  if (name == "total-punishments") return RuleKind::TotalPunishments;
  throw std::invalid_argument(
      "unknown rule '" + name +
      "' (valid: consecutive-rewards, total-rewards, consecutive-punishments, "
      "total-punishments)");
}

CriticalityProfile parse_profile(const std::string& name) {
  if (name == "mission-critical") return CriticalityProfile::MissionCritical;
  if (name == "intermediate-2") return CriticalityProfile::IntermediateLevel2;
  if (name == "intermediate-1") return CriticalityProfile::IntermediateLevel1;
  if (name == "non-mission-critical") return CriticalityProfile::NonMissionCritical;
  throw std::invalid_argument(
      "unknown profile '" + name +
      "' (valid: mission-critical, intermediate-2, intermediate-1, "
      "non-mission-critical)");
}

Cell num_cell(double value, int human_decimals) {
  char fmt[8];
  std::snprintf(fmt, sizeof(fmt), "%%.%df", human_decimals);
  return Cell{printf_str("%.12g", value), printf_str(fmt, value), true};
}

Cell sig_cell(double value) {
  return Cell{printf_str("%.12g", value), printf_str("%.6g", value), true};
}

Cell int_cell(long long value) {
  std::string s = std::to_string(value);
  return Cell{s, s, true};
}

Cell uint_cell(std::uint64_t value) {
  std::string s = std::to_string(value);
  return Cell{s, s, true};
}

Cell text_cell(std::string value) {
  return Cell{value, std::move(value), false};
}

std::string render(const Table& table, OutputFormat format) {
  std::string out;
  const std::size_t ncols = table.columns.size();

  switch (format) {
    case OutputFormat::Csv: {
      for (std::size_t c = 0; c < ncols; ++c) {
        if (c) out += ',';
        out += table.columns[c];
      }
      out += '\n';
      for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < ncols; ++c) {
          if (c) out += ',';
          out += row[c].full;
        }
        out += '\n';
      }
      return out;
    }
    case OutputFormat::Json: {
      out += "{\"rows\":[";
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (r) out += ',';
        out += '{';
        for (std::size_t c = 0; c < ncols; ++c) {
          if (c) out += ',';
          out += '"';
          out += table.columns[c];
          out += "\":";
          const Cell& cell = table.rows[r][c];
          if (cell.is_number) {
            out += cell.full;
          } else {
            out += '"';
            out += cell.full;
            out += '"';
          }
        }
        out += '}';
      }
      out += "]}\n";
      return out;
    }
    case OutputFormat::Human: {
      std::vector<std::size_t> widths(ncols);
      for (std::size_t c = 0; c < ncols; ++c) {
        widths[c] = table.columns[c].size();
        for (const auto& row : table.rows) {
          if (row[c].human.size() > widths[c]) widths[c] = row[c].human.size();
        }
      }
      auto emit_row = [&](auto get) {
        for (std::size_t c = 0; c < ncols; ++c) {
          if (c) out += "  ";
          const std::string& s = get(c);
          out.append(widths[c] - s.size(), ' ');
          out += s;
        }
        out += '\n';
      };
      emit_row([&](std::size_t c) -> const std::string& { return table.columns[c]; });
      for (const auto& row : table.rows) {
        emit_row([&](std::size_t c) -> const std::string& { return row[c].human; });
      }
      return out;
    }
  }
  throw std::logic_error("render: bad format");
}

const std::vector<int> kGridM = {3, 5, 7, 10};
const std::vector<double> kGridP = {0.6, 0.75, 0.9};

Table stats_table(const RuleSpec& spec, const Environment& env) {
  const StoppingTimeStats s = stats_for_rule(spec, env);
  const CostRatio r = cost_ratio(spec, env);
  Table t;
  t.columns = {"rule", "m", "p", "mean", "variance", "std", "cost_ratio"};
  t.rows.push_back({text_cell(to_string(spec.kind)), int_cell(spec.m),
                    sig_cell(env.p()), num_cell(s.mean, 2),
                    num_cell(s.variance, 2), num_cell(s.stddev, 2),
                    num_cell(r.value, 3)});
  return t;
}

Table pmf_table(const RuleSpec& spec, const Environment& env, double tolerance) {
  const Pmf pmf = pmf_for_rule(spec, env, tolerance);
  Table t;
  t.columns = {"n", "probability"};
  for (std::size_t i = 0; i < pmf.probabilities.size(); ++i) {
    t.rows.push_back({int_cell(pmf.support_start + static_cast<long long>(i)),
                      sig_cell(pmf.probabilities[i])});
  }
  return t;
}

Table comparison_table(long long episodes, std::uint64_t master_seed) {
  Table t;
  t.columns = {"rule",   "m",       "p",           "mean_th",
               "mean_emp", "err_mean_pct", "std_th",  "std_emp",
               "err_std_pct", "episodes", "seed"};
  for (int m : kGridM) {
    for (double p : kGridP) {
      for (RuleKind kind : {RuleKind::ConsecutiveRewards, RuleKind::TotalRewards}) {
        ExperimentConfig cfg{RuleSpec(kind, m), Environment(p), episodes,
                             master_seed};
        const SimulationSummary s = run_experiment(cfg);
        t.rows.push_back({text_cell(to_string(kind)), int_cell(m), sig_cell(p),
                          num_cell(s.theoretical_mean, 2),
                          num_cell(s.empirical_mean, 2),
                          num_cell(s.err_mean_pct, 3),
                          num_cell(s.theoretical_std, 2),
                          num_cell(s.empirical_std, 2),
                          num_cell(s.err_std_pct, 3), int_cell(s.episodes),
                          uint_cell(s.master_seed)});
      }
    }
  }
  return t;
}

Table trace_table(const ExperimentConfig& config, long long stride) {
  const ConvergenceTrace trace = convergence_trace(config, stride);
  Table t;
  t.columns = {"episode", "running_mean"};
  for (const auto& [episode, mean] : trace.points) {
    t.rows.push_back({int_cell(episode), num_cell(mean, 2)});
  }
  return t;
}

Table fig1_table(const Environment& env, int m_max) {
  Table t;
  t.columns = {"m", "mean_consecutive", "mean_total"};
  for (int m = 1; m <= m_max; ++m) {
    t.rows.push_back({int_cell(m), num_cell(mean_consecutive(env, m), 2),
                      num_cell(mean_total(env, m), 2)});
  }
  return t;
}

Table decide_table(CriticalityProfile profile, int m, int m_prime,
                   const Environment& env,
                   const DecisionThresholds& thresholds) {
  const PhasePlan plan = plan_for_profile(profile, m, m_prime);
  const AdoptionDecision d = phase1_decide(plan, env, thresholds);
  const CostRatio r2 = phase2_cost_ratio(plan, env);
  Table t;
  t.columns = {"profile", "m",  "m_prime", "p",  "phase1_rule",
               "phase2_rule", "r1", "h1",  "phase1_verdict", "r2", "h2"};
  t.rows.push_back({text_cell(to_string(profile)), int_cell(m),
                    int_cell(m_prime), sig_cell(env.p()),
                    text_cell(to_string(plan.phase1.kind)),
                    text_cell(to_string(plan.phase2.kind)),
                    num_cell(d.cost_ratio.value, 3), num_cell(d.threshold, 3),
                    text_cell(d.verdict == Verdict::Adopt ? "adopt" : "reject"),
                    num_cell(r2.value, 3), num_cell(thresholds.h2, 3)});
  return t;
}

}  // namespace stoprule
