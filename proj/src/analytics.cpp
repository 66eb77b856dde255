#include "stoprule/analytics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace stoprule {

namespace {

// p^m with an explicit underflow guard; callers divide by this.
double pow_checked(double p, int m) {
  const double pm = std::pow(p, m);
  if (pm < 1e-300) {
    throw std::domain_error("p^m underflows for p=" + std::to_string(p) +
                            ", m=" + std::to_string(m));
  }
  return pm;
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::domain_error(std::string(what) +
                            " is not finite for the given (p, m)");
  }
}

void check_tolerance(double tolerance) {
  if (!(tolerance > 0.0 && tolerance <= 1e-3)) {
    throw std::invalid_argument("tolerance must lie in (0, 1e-3]");
  }
}

// C(n-1, m-1): direct product for small n, log-space for large.
double choose_n1_m1(int n, int m) {
  const int k = m - 1;
  if (n <= 60) {
    double c = 1.0;
    for (int i = 1; i <= k; ++i) {
      c *= static_cast<double>(n - m + i) / i;
    }
    return c;
  }
  return std::exp(std::lgamma(n) - std::lgamma(m) - std::lgamma(n - m + 1));
}

}  // namespace

double Pmf::mass() const {
  double s = 0.0;
  for (double a : probabilities) s += a;
  return s;
}

double Pmf::mean() const {
  double s = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    s += static_cast<double>(support_start + i) * probabilities[i];
  }
  return s;
}

double Pmf::variance() const {
  const double mu = mean();
  double s = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    const double n = static_cast<double>(support_start + i);
    s += n * n * probabilities[i];
  }
  return s - mu * mu;
}

double mean_consecutive(const Environment& env, int m) {
  const double pm = pow_checked(env.p(), m);
  const double v = (1.0 - pm) / (env.q() * pm);
  require_finite(v, "mean_consecutive");
  return v;
}

double variance_consecutive(const Environment& env, int m) {
  const double p = env.p();
  const double q = env.q();
  const double pm = pow_checked(p, m);
  const double v = 1.0 / (q * q * pm * pm) - (2.0 * m + 1.0) / (q * pm) - p / (q * q);
  require_finite(v, "variance_consecutive");
  return v;
}

double mean_total(const Environment& env, int m) {
  return static_cast<double>(m) / env.p();
}

double variance_total(const Environment& env, int m) {
  const double p = env.p();
  return static_cast<double>(m) * env.q() / (p * p);
}

StoppingTimeStats stats_for_rule(const RuleSpec& spec, const Environment& env) {
  if (!is_reward_kind(spec.kind)) {
    auto [rspec, renv] = reflect(spec, env);
    return stats_for_rule(rspec, renv);
  }
  StoppingTimeStats s;
  if (spec.kind == RuleKind::ConsecutiveRewards) {
    s.mean = mean_consecutive(env, spec.m);
    s.variance = variance_consecutive(env, spec.m);
  } else {
    s.mean = mean_total(env, spec.m);
    s.variance = variance_total(env, spec.m);
  }
  s.stddev = std::sqrt(s.variance);
  return s;
}

Pmf pmf_consecutive(const Environment& env, int m, double tolerance) {
  check_tolerance(tolerance);
  const double p = env.p();
  const double q = env.q();
  const double pm = pow_checked(p, m);

  // Coefficients of A(z) = p^m z^m (1 - pz) / (1 - z + q p^m z^(m+1)),
  // extracted by the linear recurrence implied by the denominator:
  //   a_n = a_(n-1) - q p^m a_(n-m-1) + [n = m] p^m - [n = m+1] p^(m+1).
  Pmf out;
  out.support_start = m;
  out.reached_tolerance = false;

  double cumulative = 0.0;
  for (std::size_t i = 0; i < kMaxPmfTerms; ++i) {
    const int n = m + static_cast<int>(i);
    double a = (i > 0) ? out.probabilities[i - 1] : 0.0;
    const int back = n - m - 1;  // index of a_(n-m-1) relative to support
    if (back >= m) {
      a -= q * pm * out.probabilities[back - m];
    }
    if (n == m) a += pm;
    if (n == m + 1) a -= pm * p;
    if (a < 0.0) a = 0.0;  // clamp roundoff at the tail
    out.probabilities.push_back(a);
    cumulative += a;
    if (1.0 - cumulative < tolerance) {
      out.reached_tolerance = true;
      break;
    }
  }
  out.truncation_mass = 1.0 - cumulative;
  if (out.truncation_mass < 0.0) out.truncation_mass = 0.0;
  return out;
}

Pmf pmf_total(const Environment& env, int m, double tolerance) {
  check_tolerance(tolerance);
  const double p = env.p();
  const double q = env.q();
  const double pm = pow_checked(p, m);

  Pmf out;
  out.support_start = m;
  out.reached_tolerance = false;

  double cumulative = 0.0;
  for (std::size_t i = 0; i < kMaxPmfTerms; ++i) {
    const int n = m + static_cast<int>(i);
    const double a = choose_n1_m1(n, m) * pm * std::pow(q, n - m);
    out.probabilities.push_back(a);
    cumulative += a;
    if (1.0 - cumulative < tolerance) {
      out.reached_tolerance = true;
      break;
    }
  }
  out.truncation_mass = 1.0 - cumulative;
  if (out.truncation_mass < 0.0) out.truncation_mass = 0.0;
  return out;
}

Pmf pmf_for_rule(const RuleSpec& spec, const Environment& env, double tolerance) {
  if (!is_reward_kind(spec.kind)) {
    auto [rspec, renv] = reflect(spec, env);
    return pmf_for_rule(rspec, renv, tolerance);
  }
  return spec.kind == RuleKind::ConsecutiveRewards
             ? pmf_consecutive(env, spec.m, tolerance)
             : pmf_total(env, spec.m, tolerance);
}

double eval_recurrent_gf(const Environment& env, int m, double z) {
  if (!(std::abs(z) < 1.0)) {
    throw std::domain_error("eval_recurrent_gf requires |z| < 1");
  }
  const double p = env.p();
  const double q = env.q();
  const double pm = pow_checked(p, m);
  const double denom = (1.0 - z) * (1.0 - pm * std::pow(z, m));
  if (std::abs(denom) < 1e-12) {
    throw std::domain_error("eval_recurrent_gf: z too close to a pole");
  }
  const double num = 1.0 - z + q * pm * std::pow(z, m + 1);
  return num / denom;
}

CostRatio cost_ratio(const RuleSpec& spec, const Environment& env) {
  double value = 0.0;
  switch (spec.kind) {
    case RuleKind::ConsecutiveRewards:
      value = mean_consecutive(env, spec.m) / spec.m;
      break;
    case RuleKind::TotalRewards:
      value = 1.0 / env.p();
      break;
    case RuleKind::ConsecutivePunishments:
      value = mean_consecutive(Environment(env.q()), spec.m) / spec.m;
      break;
    case RuleKind::TotalPunishments:
      value = 1.0 / env.q();
      break;
  }
  return CostRatio{value, spec.kind};
}

const char* to_string(RuleKind k) {
  switch (k) {
    case RuleKind::ConsecutiveRewards: return "consecutive-rewards";
    case RuleKind::TotalRewards: return "total-rewards";
    case RuleKind::ConsecutivePunishments: return "consecutive-punishments";
    case RuleKind::TotalPunishments: return "total-punishments";
  }
  return "?";
}

const char* to_string(CriticalityProfile p) {
  switch (p) {
    case CriticalityProfile::MissionCritical: return "mission-critical";
    case CriticalityProfile::IntermediateLevel2: return "intermediate-2";
    case CriticalityProfile::IntermediateLevel1: return "intermediate-1";
    case CriticalityProfile::NonMissionCritical: return "non-mission-critical";
  }
  return "?";
}

}  // namespace stoprule
