#pragma once

#include <optional>
#include <stdexcept>

#include "stoprule/model.hpp"

namespace stoprule {

/// Streaming recognizer for one stopping rule. Consumes outcomes one at a
/// time; stopped_at is set the moment progress first reaches spec.m.
/// Value semantics: step() returns the updated automaton.
class RuleAutomaton {
 public:
  explicit RuleAutomaton(RuleSpec spec) : spec_(spec) {}

  RuleAutomaton step(TrialOutcome outcome) const {
    if (stopped_at_) {
      throw std::logic_error("RuleAutomaton::step: automaton already stopped");
    }
    RuleAutomaton next = *this;
    ++next.trials_seen_;
    const bool match = (outcome == target_outcome(spec_.kind));
    if (match) {
      ++next.progress_;
    } else if (is_consecutive_kind(spec_.kind)) {
      next.progress_ = 0;
    }
    if (next.progress_ >= spec_.m) {
      next.stopped_at_ = next.trials_seen_;
    }
    return next;
  }

  const RuleSpec& spec() const { return spec_; }
  long long trials_seen() const { return trials_seen_; }
  int progress() const { return progress_; }
  bool is_stopped() const { return stopped_at_.has_value(); }
  std::optional<long long> stopped_at() const { return stopped_at_; }

 private:
  RuleSpec spec_;
  long long trials_seen_ = 0;
  int progress_ = 0;
  std::optional<long long> stopped_at_;
};

}  // namespace stoprule
