#pragma once

#include <optional>

#include "hexgrip/action.hpp"
#include "hexgrip/selector.hpp"

namespace hexgrip {

enum class Posture : std::uint8_t {
  Folded = 0,     // stowed for flight / reel-in
  LegsExtended,   // standing or walking stance
  GripClosing,
  GripHold,
};

enum class Signal : std::uint8_t {
  GraspComplete = 0,  // grip closure finished
  RetryRequest,       // robot asks the drone to lift and restart
  RetrieveRequest,    // robot asks the drone to reel it in
};

struct MotionCommand {
  double v = 0.0;      // forward velocity, m/s
  double omega = 0.0;  // yaw rate, rad/s; positive = counterclockwise
  Posture posture = Posture::LegsExtended;
  std::optional<Signal> signal;
  bool degraded = false;  // zero-motion fallback (estimate missing and stale)
};

struct ControllerConfig {
  double v_max = 0.10;          // m/s
  double omega_max = 0.5;       // rad/s
  double heading_gain = 1.0;    // 1/s, P gain on bearing error
  double grasp_duration = 2.0;  // s to close the grip
  double gait_step_period = 0.4;  // s per tripod gait step
};

const char* posture_name(Posture p);
const char* signal_name(Signal s);

// Pure action-to-command map.
//   Stabilizing / Idle: zero motion (Idle folds, Stabilizing extends legs).
//   Aligning: rotate in place, omega = clamp(heading_gain * bearing).
//   Approaching: v_max plus the same heading correction.
//   ForwardApproaching: v_max, omega = 0; works without an estimate.
//   Grasping: zero motion; GripClosing until elapsed >= grasp_duration, then
//     GripHold with a GraspComplete signal.
//   Retry: zero motion, folded, RetryRequest signal.
// Aligning/Approaching without an estimate return a zero-motion command with
// degraded = true. elapsed is time in the current action; negative elapsed or
// non-finite input throws std::invalid_argument.
MotionCommand command_for(Action a, const std::optional<TargetEstimate>& estimate,
                          double elapsed, const ControllerConfig& cfg);

// Tripod gait cadence: velocity targets are adopted only at step boundaries
// (every gait_step_period seconds) and held constant within a step. Posture,
// signals and the degraded flag pass through untouched.
class GaitQuantizer {
 public:
  MotionCommand apply(const MotionCommand& target, double now,
                      const ControllerConfig& cfg);

 private:
  bool latched_ = false;
  double next_boundary_ = 0.0;
  double held_v_ = 0.0;
  double held_omega_ = 0.0;
};

// Single-owner stateful wrapper used by the mission loop: tracks time in the
// current action and latches one-shot signals (GraspComplete once per
// continuous Grasping interval, RetryRequest on the first Retry tick,
// RetrieveRequest once after a completed grasp).
class ActionController {
 public:
  explicit ActionController(const ControllerConfig& cfg) : cfg_(cfg) {}

  MotionCommand update(Action a, const std::optional<TargetEstimate>& estimate,
                       double now, double dt);

  double elapsed_in_action() const { return elapsed_; }
  Action current_action() const { return current_; }

 private:
  ControllerConfig cfg_;
  Action current_ = Action::Idle;
  double elapsed_ = 0.0;
  bool grasp_complete_sent_ = false;
  bool retry_sent_ = false;
  bool retrieve_sent_ = false;
};

}  // namespace hexgrip
