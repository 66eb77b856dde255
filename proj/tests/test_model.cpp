#include <doctest.h>

#include "stoprule/model.hpp"

using namespace stoprule;

TEST_CASE("Environment validates p") {
  CHECK_THROWS_AS(Environment(0.0), std::invalid_argument);
  CHECK_THROWS_AS(Environment(1.0), std::invalid_argument);
  CHECK_THROWS_AS(Environment(-0.2), std::invalid_argument);
  Environment env(0.6);
  CHECK(env.p() == doctest::Approx(0.6));
  CHECK(env.q() == doctest::Approx(0.4));
}

TEST_CASE("RuleSpec validates m") {
  CHECK_THROWS_AS(RuleSpec(RuleKind::TotalRewards, 0), std::invalid_argument);
  CHECK_THROWS_AS(RuleSpec(RuleKind::TotalRewards, -3), std::invalid_argument);
  CHECK_THROWS_AS(RuleSpec(RuleKind::TotalRewards, kMaxRuleCount + 1),
                  std::invalid_argument);
  CHECK_NOTHROW(RuleSpec(RuleKind::TotalRewards, kMaxRuleCount));
}

TEST_CASE("reflect swaps p<->q and reward<->punishment kinds") {
  auto [s1, e1] = reflect(RuleSpec(RuleKind::ConsecutivePunishments, 3),
                          Environment(0.6));
  CHECK(s1.kind == RuleKind::ConsecutiveRewards);
  CHECK(s1.m == 3);
  CHECK(e1.p() == doctest::Approx(0.4));

  auto [s2, e2] = reflect(RuleSpec(RuleKind::TotalPunishments, 5),
                          Environment(0.9));
  CHECK(s2.kind == RuleKind::TotalRewards);
  CHECK(s2.m == 5);
  CHECK(e2.p() == doctest::Approx(0.1));
}

TEST_CASE("reflect is an involution") {
  const RuleKind kinds[] = {
      RuleKind::ConsecutiveRewards, RuleKind::TotalRewards,
      RuleKind::ConsecutivePunishments, RuleKind::TotalPunishments};
  for (RuleKind kind : kinds) {
    for (int m : {1, 2, 7, 31}) {
      for (double p : {0.1, 0.5, 0.85}) {
        auto [rs, re] = reflect(RuleSpec(kind, m), Environment(p));
        auto [rrs, rre] = reflect(rs, re);
        CHECK(rrs == RuleSpec(kind, m));
        CHECK(rre.p() == doctest::Approx(p).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("DecisionThresholds requires positive thresholds") {
  CHECK_THROWS_AS(DecisionThresholds(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DecisionThresholds(1.0, -1.0), std::invalid_argument);
  DecisionThresholds t(1.5, 2.0);
  CHECK(t.trial_cost_unit == 1.0);
}
