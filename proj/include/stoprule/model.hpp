#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace stoprule {

/// Result of a single Bernoulli trial.
enum class TrialOutcome { Reward, Punishment };

constexpr TrialOutcome flip(TrialOutcome o) {
  return o == TrialOutcome::Reward ? TrialOutcome::Punishment
                                   : TrialOutcome::Reward;
}

/// i.i.d. trial environment: P(Reward) = p, P(Punishment) = q = 1 - p.
/// p is restricted to the open interval (0,1); the degenerate endpoints
/// would make some rules never fire.
class Environment {
 public:
  explicit Environment(double p) : p_(p) {
    if (!(p > 0.0 && p < 1.0)) {
      throw std::invalid_argument("Environment: p must lie strictly in (0,1), got " +
                                  std::to_string(p));
    }
  }

  double p() const { return p_; }
  double q() const { return 1.0 - p_; }

 private:
  double p_;
};

/// The four stopping rules: stop on m consecutive or m total outcomes of
/// the given kind.
enum class RuleKind {
  ConsecutiveRewards,
  TotalRewards,
  ConsecutivePunishments,
  TotalPunishments,
};

constexpr bool is_reward_kind(RuleKind k) {
  return k == RuleKind::ConsecutiveRewards || k == RuleKind::TotalRewards;
}

constexpr bool is_consecutive_kind(RuleKind k) {
  return k == RuleKind::ConsecutiveRewards ||
         k == RuleKind::ConsecutivePunishments;
}

/// The outcome an automaton for this kind is counting.
constexpr TrialOutcome target_outcome(RuleKind k) {
  return is_reward_kind(k) ? TrialOutcome::Reward : TrialOutcome::Punishment;
}

constexpr RuleKind reflected(RuleKind k) {
  switch (k) {
    case RuleKind::ConsecutiveRewards: return RuleKind::ConsecutivePunishments;
    case RuleKind::TotalRewards: return RuleKind::TotalPunishments;
    case RuleKind::ConsecutivePunishments: return RuleKind::ConsecutiveRewards;
    case RuleKind::TotalPunishments: return RuleKind::TotalRewards;
  }
  throw std::logic_error("reflected: bad RuleKind");
}

const char* to_string(RuleKind k);

/// Documented limit on the run/count parameter; keeps p^m above underflow
/// for all supported p >= 0.05.
inline constexpr int kMaxRuleCount = 200;

/// A stopping rule: which kind and how many matching outcomes are needed.
struct RuleSpec {
  RuleKind kind;
  int m;

  RuleSpec(RuleKind kind_, int m_) : kind(kind_), m(m_) {
    if (m < 1) {
      throw std::invalid_argument("RuleSpec: m must be >= 1, got " +
                                  std::to_string(m));
    }
    if (m > kMaxRuleCount) {
      throw std::invalid_argument("RuleSpec: m exceeds supported limit " +
                                  std::to_string(kMaxRuleCount));
    }
  }

  friend bool operator==(const RuleSpec& a, const RuleSpec& b) {
    return a.kind == b.kind && a.m == b.m;
  }
};

/// Exact mean/variance/std of the number of trials to stop.
struct StoppingTimeStats {
  double mean = 0.0;
  double variance = 0.0;
  double stddev = 0.0;
};

/// Expected trials per required matching outcome (learning overhead).
struct CostRatio {
  double value = 0.0;
  RuleKind rule_kind = RuleKind::ConsecutiveRewards;
};

/// System class selecting which rule governs each phase.
enum class CriticalityProfile {
  MissionCritical,
  IntermediateLevel2,
  IntermediateLevel1,
  NonMissionCritical,
};

const char* to_string(CriticalityProfile p);

/// Cost-ratio thresholds for the two phases; trial cost is normalized to 1.
struct DecisionThresholds {
  double h1;
  double h2;
  double trial_cost_unit = 1.0;

  DecisionThresholds(double h1_, double h2_, double unit = 1.0)
      : h1(h1_), h2(h2_), trial_cost_unit(unit) {
    if (!(h1 > 0.0) || !(h2 > 0.0)) {
      throw std::invalid_argument("DecisionThresholds: h1 and h2 must be > 0");
    }
  }
};

/// Reflection: swap p <-> q and reward rules <-> punishment rules.
/// Applying it twice is the identity.
inline std::pair<RuleSpec, Environment> reflect(const RuleSpec& spec,
                                                const Environment& env) {
  return {RuleSpec(reflected(spec.kind), spec.m), Environment(env.q())};
}

}  // namespace stoprule
