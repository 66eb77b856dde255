#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "stoprule/analytics.hpp"

using namespace stoprule;

TEST_CASE("mean_consecutive matches reference values") {
  CHECK(mean_consecutive(Environment(0.6), 3) == doctest::Approx(9.07).epsilon(0.001));
  CHECK(mean_consecutive(Environment(0.6), 10) == doctest::Approx(410.95).epsilon(0.001));
  CHECK(mean_consecutive(Environment(0.75), 5) == doctest::Approx(12.86).epsilon(0.001));
  // m = 1 degenerates to the geometric mean 1/p.
  for (double p : {0.1, 0.35, 0.6, 0.95}) {
    CHECK(mean_consecutive(Environment(p), 1) == doctest::Approx(1.0 / p));
  }
}

TEST_CASE("variance_consecutive matches reference values") {
  CHECK(std::sqrt(variance_consecutive(Environment(0.6), 3)) ==
        doctest::Approx(7.01).epsilon(0.001));
  CHECK(std::sqrt(variance_consecutive(Environment(0.6), 5)) ==
        doctest::Approx(26.00).epsilon(0.001));
  // Direct evaluation; the commonly tabulated 7.01 for this cell is a
  // copy of the m=3, p=0.6 entry.
  CHECK(std::sqrt(variance_consecutive(Environment(0.9), 10)) ==
        doctest::Approx(11.41).epsilon(0.001));
  // m = 1: geometric variance q/p^2.
  CHECK(variance_consecutive(Environment(0.5), 1) == doctest::Approx(2.0));
}

TEST_CASE("mean_total and variance_total") {
  CHECK(mean_total(Environment(0.6), 5) == doctest::Approx(8.33).epsilon(0.001));
  CHECK(mean_total(Environment(0.9), 10) == doctest::Approx(11.11).epsilon(0.001));
  CHECK(std::sqrt(variance_total(Environment(0.6), 3)) ==
        doctest::Approx(1.83).epsilon(0.005));
  CHECK(std::sqrt(variance_total(Environment(0.75), 7)) ==
        doctest::Approx(1.76).epsilon(0.005));
  CHECK(std::sqrt(variance_total(Environment(0.9), 10)) ==
        doctest::Approx(1.111).epsilon(0.001));
}

TEST_CASE("stats_for_rule dispatches and reflects") {
  const StoppingTimeStats s1 =
      stats_for_rule(RuleSpec(RuleKind::TotalPunishments, 4), Environment(0.6));
  CHECK(s1.mean == doctest::Approx(10.0));

  const StoppingTimeStats s2 = stats_for_rule(
      RuleSpec(RuleKind::ConsecutivePunishments, 3), Environment(0.6));
  CHECK(s2.mean == doctest::Approx(24.375));

  const StoppingTimeStats s3 =
      stats_for_rule(RuleSpec(RuleKind::ConsecutiveRewards, 5), Environment(0.75));
  CHECK(s3.mean == doctest::Approx(12.86).epsilon(0.001));
  CHECK(s3.stddev == doctest::Approx(std::sqrt(s3.variance)));
}

TEST_CASE("reflection equality is exact") {
  for (double p : {0.2, 0.5, 0.6, 0.9}) {
    for (int m : {1, 3, 6}) {
      const auto direct =
          stats_for_rule(RuleSpec(RuleKind::ConsecutivePunishments, m), Environment(p));
      const auto mirrored =
          stats_for_rule(RuleSpec(RuleKind::ConsecutiveRewards, m), Environment(1.0 - p));
      CHECK(direct.mean == mirrored.mean);
      CHECK(direct.variance == mirrored.variance);
    }
  }
}

TEST_CASE("pmf_consecutive first terms") {
  const Pmf pmf = pmf_consecutive(Environment(0.6), 2, 1e-9);
  CHECK(pmf.support_start == 2);
  CHECK(pmf.probabilities[0] == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(pmf.probabilities[1] == doctest::Approx(0.144).epsilon(1e-12));
}

TEST_CASE("pmf_consecutive at m=1 is geometric") {
  const Pmf pmf = pmf_consecutive(Environment(0.5), 1, 1e-9);
  for (std::size_t i = 0; i < 20; ++i) {
    CHECK(pmf.probabilities[i] ==
          doctest::Approx(std::pow(0.5, static_cast<double>(i + 1))).epsilon(1e-12));
  }
}

TEST_CASE("pmf_consecutive matches the run-length DP exactly") {
  for (double p : {0.3, 0.5, 0.6, 0.75, 0.9}) {
    for (int m : {1, 2, 3, 4, 6}) {
      const Pmf pmf = pmf_consecutive(Environment(p), m, 1e-9);
      const int n_max = std::min<int>(80, m + static_cast<int>(pmf.probabilities.size()) - 1);
      const auto dp = oracle::dp_pmf_consecutive(p, m, n_max);
      for (int n = m; n <= n_max; ++n) {
        CHECK(std::abs(pmf.probabilities[n - m] - dp[n]) < 1e-12);
      }
    }
  }
}

TEST_CASE("pmf_consecutive matches exhaustive enumeration") {
  for (double p : {0.3, 0.7}) {
    for (int m : {2, 3}) {
      const Pmf pmf = pmf_consecutive(Environment(p), m, 1e-9);
      for (int n = m; n <= 12; ++n) {
        CHECK(std::abs(pmf.probabilities[n - m] -
                       oracle::enum_prob_consecutive(p, m, n)) < 1e-12);
      }
    }
  }
}

TEST_CASE("pmf mass accounting") {
  for (double tol : {1e-4, 1e-9}) {
    const Pmf pmf = pmf_consecutive(Environment(0.6), 3, tol);
    CHECK(pmf.reached_tolerance);
    CHECK(pmf.truncation_mass >= 0.0);
    CHECK(pmf.truncation_mass < tol);
    CHECK(pmf.mass() + pmf.truncation_mass == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("pmf_total matches the closed form and enumeration") {
  const Pmf pmf = pmf_total(Environment(0.6), 2, 1e-9);
  CHECK(pmf.probabilities[0] == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(pmf.probabilities[1] == doctest::Approx(0.288).epsilon(1e-12));
  for (double p : {0.3, 0.7}) {
    for (int m : {1, 3}) {
      const Pmf nb = pmf_total(Environment(p), m, 1e-9);
      for (int n = m; n <= 12; ++n) {
        CHECK(std::abs(nb.probabilities[n - m] - oracle::enum_prob_total(p, m, n)) <
              1e-12);
      }
    }
  }
}

TEST_CASE("pmf_total at m=1 coincides with pmf_consecutive") {
  const Pmf a = pmf_consecutive(Environment(0.5), 1, 1e-10);
  const Pmf b = pmf_total(Environment(0.5), 1, 1e-10);
  const std::size_t n = std::min(a.probabilities.size(), b.probabilities.size());
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(a.probabilities[i] == doctest::Approx(b.probabilities[i]).epsilon(1e-12));
  }
}

TEST_CASE("pmf moments agree with the closed forms") {
  for (double p : {0.6, 0.75, 0.9}) {
    for (int m : {2, 3, 5}) {
      const Environment env(p);
      const Pmf px = pmf_consecutive(env, m, 1e-10);
      CHECK(px.mean() == doctest::Approx(mean_consecutive(env, m)).epsilon(1e-6));
      CHECK(px.variance() ==
            doctest::Approx(variance_consecutive(env, m)).epsilon(1e-6));
      const Pmf pz = pmf_total(env, m, 1e-10);
      CHECK(pz.mean() == doctest::Approx(mean_total(env, m)).epsilon(1e-6));
      CHECK(pz.variance() == doctest::Approx(variance_total(env, m)).epsilon(1e-6));
    }
  }
}

TEST_CASE("recurrent generating function point values") {
  CHECK(eval_recurrent_gf(Environment(0.6), 2, 0.0) == doctest::Approx(1.0));
  // Hand evaluation: p=0.5, m=1, z=0.5.
  CHECK(eval_recurrent_gf(Environment(0.5), 1, 0.5) == doctest::Approx(1.5));
  CHECK_THROWS_AS(eval_recurrent_gf(Environment(0.5), 1, 1.0), std::domain_error);
}

TEST_CASE("first-passage series equals (B-1)/B") {
  for (double p : {0.6, 0.75, 0.9}) {
    for (int m : {2, 3, 5, 10}) {
      const Environment env(p);
      const Pmf pmf = pmf_consecutive(env, m, 1e-10);
      for (double z : {0.1, 0.3, 0.5, 0.7}) {
        double series = 0.0;
        double zn = std::pow(z, pmf.support_start);
        for (double a : pmf.probabilities) {
          series += a * zn;
          zn *= z;
        }
        const double b = eval_recurrent_gf(env, m, z);
        CHECK(series == doctest::Approx((b - 1.0) / b).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("mean of consecutive rule dominates total rule") {
  for (int pi = 1; pi <= 19; ++pi) {
    const double p = 0.05 * pi;
    const Environment env(p);
    for (int m = 1; m <= 20; ++m) {
      const double ex = mean_consecutive(env, m);
      const double ez = mean_total(env, m);
      if (m == 1) {
        CHECK(ex == doctest::Approx(ez).epsilon(1e-12));
      } else {
        CHECK(ex > ez);
      }
    }
  }
}

TEST_CASE("cost ratios") {
  CHECK(cost_ratio(RuleSpec(RuleKind::ConsecutiveRewards, 3), Environment(0.6)).value ==
        doctest::Approx(3.025).epsilon(0.001));
  CHECK(cost_ratio(RuleSpec(RuleKind::TotalRewards, 5), Environment(0.6)).value ==
        doctest::Approx(1.0 / 0.6));
  CHECK(cost_ratio(RuleSpec(RuleKind::TotalPunishments, 2), Environment(0.6)).value ==
        doctest::Approx(2.5));
  CHECK(cost_ratio(RuleSpec(RuleKind::ConsecutivePunishments, 3), Environment(0.6)).value ==
        doctest::Approx(8.125));
}

TEST_CASE("consecutive cost ratio grows with m; total ratio is flat") {
  for (double p : {0.2, 0.5, 0.8}) {
    const Environment env(p);
    double prev = 0.0;
    for (int m = 1; m <= 15; ++m) {
      const double r1 = cost_ratio(RuleSpec(RuleKind::ConsecutiveRewards, m), env).value;
      CHECK(r1 >= 1.0);
      if (m > 1) CHECK(r1 > prev);
      prev = r1;
      CHECK(cost_ratio(RuleSpec(RuleKind::TotalRewards, m), env).value ==
            doctest::Approx(1.0 / p));
    }
  }
}

TEST_CASE("tolerance precondition") {
  CHECK_THROWS_AS(pmf_consecutive(Environment(0.5), 2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(pmf_consecutive(Environment(0.5), 2, 1e-2), std::invalid_argument);
  CHECK_THROWS_AS(pmf_total(Environment(0.5), 2, -1e-9), std::invalid_argument);
}
