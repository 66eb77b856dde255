#pragma once

#include <cstddef>
#include <vector>

#include "stoprule/model.hpp"

namespace stoprule {

/// Hard cap on PMF terms; tails decay geometrically well before this at
/// desk scale.
inline constexpr std::size_t kMaxPmfTerms = 1'000'000;

/// Truncated first-passage distribution over trial counts.
/// probabilities[i] is Pr[stop at trial support_start + i].
struct Pmf {
  int support_start = 1;
  std::vector<double> probabilities;
  double truncation_mass = 0.0;
  bool reached_tolerance = true;

  double mass() const;
  double mean() const;
  double variance() const;
};

/// E[X] for m consecutive rewards: (1 - p^m) / (q p^m).
double mean_consecutive(const Environment& env, int m);

/// Var[X] for m consecutive rewards: 1/(q^2 p^2m) - (2m+1)/(q p^m) - p/q^2.
double variance_consecutive(const Environment& env, int m);

/// E[Z] for m total rewards: m / p.
double mean_total(const Environment& env, int m);

/// Var[Z] for m total rewards: m q / p^2.
double variance_total(const Environment& env, int m);

/// Mean/variance/std for any of the four rules; punishment kinds are
/// reflected onto the reward formulas.
StoppingTimeStats stats_for_rule(const RuleSpec& spec, const Environment& env);

/// First-passage PMF for m consecutive rewards, by series expansion of the
/// first-passage generating function. Extends until the truncated mass is
/// below tolerance (or the term cap is hit, in which case
/// reached_tolerance is false).
Pmf pmf_consecutive(const Environment& env, int m, double tolerance);

/// Stopping-time PMF for m total rewards: negative binomial,
/// a_n = C(n-1, m-1) p^m q^(n-m) for n >= m.
Pmf pmf_total(const Environment& env, int m, double tolerance);

/// PMF for any of the four rules (punishment kinds via reflection).
Pmf pmf_for_rule(const RuleSpec& spec, const Environment& env, double tolerance);

/// Generating function of the recurrent event "a run of m rewards ends at
/// trial n":  B(z) = (1 - z + q p^m z^(m+1)) / ((1 - z)(1 - p^m z^m)).
/// Requires |z| < 1. The first-passage series relates to it by
/// A(z) = (B(z) - 1) / B(z).
double eval_recurrent_gf(const Environment& env, int m, double z);

/// Learning overhead: expected trials per required matching outcome.
CostRatio cost_ratio(const RuleSpec& spec, const Environment& env);

}  // namespace stoprule
