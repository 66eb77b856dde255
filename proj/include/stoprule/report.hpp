#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stoprule/decision.hpp"
#include "stoprule/model.hpp"
#include "stoprule/montecarlo.hpp"

namespace stoprule {

enum class OutputFormat { Human, Csv, Json };

/// Throws std::invalid_argument listing the valid names on mismatch.
OutputFormat parse_format(const std::string& name);
RuleKind parse_rule_kind(const std::string& name);
CriticalityProfile parse_profile(const std::string& name);

/// One table cell, pre-formatted twice: `full` round-trips at 12
/// significant digits (csv/json), `human` is display precision.
struct Cell {
  std::string full;
  std::string human;
  bool is_number = true;
};

Cell num_cell(double value, int human_decimals);
Cell sig_cell(double value);  // human shows %.6g
Cell int_cell(long long value);
Cell uint_cell(std::uint64_t value);
Cell text_cell(std::string value);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Human: aligned columns. Csv: header row, '.' decimal separator, no
/// locale dependence. Json: one object with a "rows" array.
std::string render(const Table& table, OutputFormat format);

/// The (m, p) comparison grid: m in {3,5,7,10} x p in {0.6,0.75,0.9}.
extern const std::vector<int> kGridM;
extern const std::vector<double> kGridP;

Table stats_table(const RuleSpec& spec, const Environment& env);
Table pmf_table(const RuleSpec& spec, const Environment& env, double tolerance);

/// Runs every grid cell for both consecutive-rewards and total-rewards
/// rules at the given episode count.
Table comparison_table(long long episodes, std::uint64_t master_seed);

Table trace_table(const ExperimentConfig& config, long long stride);
Table fig1_table(const Environment& env, int m_max);
Table decide_table(CriticalityProfile profile, int m, int m_prime,
                   const Environment& env, const DecisionThresholds& thresholds);

}  // namespace stoprule
