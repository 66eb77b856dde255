#pragma once

#include "stoprule/automata.hpp"
#include "stoprule/model.hpp"

namespace stoprule {

/// A (learning rule, validation rule) pair: Phase I is reward-based,
/// Phase II punishment-based.
struct PhasePlan {
  RuleSpec phase1;
  RuleSpec phase2;
};

enum class Verdict { Adopt, Reject };

struct AdoptionDecision {
  Verdict verdict = Verdict::Reject;
  CostRatio cost_ratio;
  double threshold = 0.0;
};

/// Phase II termination monitor: wraps the plan's punishment automaton and
/// raises an alert when it stops.
class MonitorState {
 public:
  explicit MonitorState(RuleSpec phase2_spec) : automaton_(phase2_spec) {}

  MonitorState step(TrialOutcome outcome) const {
    if (alert()) {
      throw std::logic_error("MonitorState::step: alert already raised");
    }
    MonitorState next = *this;
    next.automaton_ = automaton_.step(outcome);
    return next;
  }

  bool alert() const { return automaton_.is_stopped(); }
  const RuleAutomaton& automaton() const { return automaton_; }

 private:
  RuleAutomaton automaton_;
};

/// Profile-to-rule mapping:
///   MissionCritical     -> (ConsecutiveRewards, TotalPunishments)
///   IntermediateLevel2  -> (ConsecutiveRewards, ConsecutivePunishments)
///   IntermediateLevel1  -> (TotalRewards,       TotalPunishments)
///   NonMissionCritical  -> (TotalRewards,       ConsecutivePunishments)
PhasePlan plan_for_profile(CriticalityProfile profile, int m, int m_prime);

/// Phase I adoption decision: Adopt iff the phase-1 cost ratio is strictly
/// below h1.
AdoptionDecision phase1_decide(const PhasePlan& plan, const Environment& env,
                               const DecisionThresholds& thresholds);

/// Phase II cost ratio: 1/q for total punishments,
/// (1 - q^m') / (m' p q^m') for consecutive punishments.
CostRatio phase2_cost_ratio(const PhasePlan& plan, const Environment& env);

}  // namespace stoprule
