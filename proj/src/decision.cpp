#include "stoprule/decision.hpp"

#include "stoprule/analytics.hpp"

namespace stoprule {

PhasePlan plan_for_profile(CriticalityProfile profile, int m, int m_prime) {
  switch (profile) {
    case CriticalityProfile::MissionCritical:
      return {RuleSpec(RuleKind::ConsecutiveRewards, m),
              RuleSpec(RuleKind::TotalPunishments, m_prime)};
    case CriticalityProfile::IntermediateLevel2:
      return {RuleSpec(RuleKind::ConsecutiveRewards, m),
              RuleSpec(RuleKind::ConsecutivePunishments, m_prime)};
    case CriticalityProfile::IntermediateLevel1:
      return {RuleSpec(RuleKind::TotalRewards, m),
              RuleSpec(RuleKind::TotalPunishments, m_prime)};
    case CriticalityProfile::NonMissionCritical:
      return {RuleSpec(RuleKind::TotalRewards, m),
              RuleSpec(RuleKind::ConsecutivePunishments, m_prime)};
  }
  throw std::logic_error("plan_for_profile: bad profile");
}

AdoptionDecision phase1_decide(const PhasePlan& plan, const Environment& env,
                               const DecisionThresholds& thresholds) {
  AdoptionDecision d;
  d.cost_ratio = cost_ratio(plan.phase1, env);
  d.threshold = thresholds.h1;
  // Strict comparison; equality rejects.
  d.verdict = d.cost_ratio.value < thresholds.h1 ? Verdict::Adopt : Verdict::Reject;
  return d;
}

CostRatio phase2_cost_ratio(const PhasePlan& plan, const Environment& env) {
  return cost_ratio(plan.phase2, env);
}

}  // namespace stoprule
