#include "hexgrip/selector.hpp"

#include <cmath>
#include <stdexcept>

namespace hexgrip {

namespace {

// State indices carrying binary values; nonzero weight on one of these gates
// eligibility.
constexpr int kBinaryStates[] = {0, 1, 4, 5};

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

void require_scored(Action a, const char* op) {
  if (a == Action::Idle) {
    throw std::invalid_argument(std::string(op) + ": Idle is not a scored action");
  }
}

}  // namespace

double heading_state(double theta, double d, const SelectorConfig& cfg) {
  require_finite(theta, "theta");
  require_finite(d, "d");
  if (d < 0.0) throw std::invalid_argument("heading_state: negative distance");
  return 1.0 - std::tanh(cfg.C_a * std::abs(theta) * d / cfg.D);
}

double distance_state(double d, const SelectorConfig& cfg) {
  require_finite(d, "d");
  if (d < 0.0) throw std::invalid_argument("distance_state: negative distance");
  return 1.0 - std::tanh(cfg.C_d * std::abs(d - cfg.T_d));
}

double affordance(Action a, const StateVector& s, const SelectorConfig& cfg) {
  require_scored(a, "affordance");
  const WeightRow& w = cfg.W[action_index(a)];
  const auto sv = s.as_array();
  double sum = 0.0;
  for (int k = 0; k < kStateCount; ++k) sum += w[k] * sv[k];
  return sum;
}

bool eligible(Action a, const StateVector& s, const SelectorConfig& cfg) {
  require_scored(a, "eligible");
  const WeightRow& w = cfg.W[action_index(a)];
  const auto sv = s.as_array();
  for (int k : kBinaryStates) {
    if (w[k] != 0.0 && sv[k] != 1.0) return false;
  }
  return true;
}

Selection select_action(const StateVector& s, const SelectorConfig& cfg) {
  Selection out;
  for (Action a : kSelectableActions) {
    const int i = action_index(a);
    out.priorities[i] = cfg.g[i] * affordance(a, s, cfg);
    out.eligible[i] = eligible(a, s, cfg);
  }
  if (!s.mission_started) return out;  // Idle
  // kSelectableActions is ordered by ascending tie-break rank, so replacing
  // on >= hands ties to the higher-ranked action.
  for (Action a : kSelectableActions) {
    const int i = action_index(a);
    if (!out.eligible[i]) continue;
    if (out.action == Action::Idle || out.priorities[i] >= out.priority) {
      out.action = a;
      out.priority = out.priorities[i];
    }
  }
  return out;
}

Selection select_action(const StateVector& s, const SelectorConfig& cfg,
                        Action incumbent) {
  Selection pure = select_action(s, cfg);
  if (incumbent == Action::Idle || pure.action == Action::Idle) return pure;
  const int i = action_index(incumbent);
  if (!pure.eligible[i]) return pure;
  if (pure.action == incumbent) return pure;
  if (pure.priority > cfg.hysteresis * pure.priorities[i]) return pure;
  pure.action = incumbent;
  pure.priority = pure.priorities[i];
  return pure;
}

StateVector StateAssembler::assemble(bool mission_started, bool landed,
                                     const std::optional<TargetEstimate>& estimate,
                                     bool target_under, double tilt,
                                     const SelectorConfig& cfg) {
  if (estimate) {
    held_heading_state_ = heading_state(estimate->bearing, estimate->distance, cfg);
    held_distance_state_ = distance_state(estimate->distance, cfg);
    last_estimate_ = estimate;
  }
  StateVector s;
  s.mission_started = mission_started;
  s.landed = landed;
  s.heading_state = held_heading_state_;
  s.distance_state = held_distance_state_;
  s.target_under = target_under;
  s.unstable = tilt > cfg.tilt_threshold;
  return s;
}

std::optional<TargetEstimate> StateAssembler::held_estimate(
    double now, const SelectorConfig& cfg) const {
  if (!last_estimate_) return std::nullopt;
  if (now - last_estimate_->timestamp > cfg.stale_cap) return std::nullopt;
  return last_estimate_;
}

}  // namespace hexgrip
