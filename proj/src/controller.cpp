#include "hexgrip/controller.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hexgrip {

const char* posture_name(Posture p) {
  switch (p) {
    case Posture::Folded: return "Folded";
    case Posture::LegsExtended: return "LegsExtended";
    case Posture::GripClosing: return "GripClosing";
    case Posture::GripHold: return "GripHold";
  }
  return "?";
}

const char* signal_name(Signal s) {
  switch (s) {
    case Signal::GraspComplete: return "GraspComplete";
    case Signal::RetryRequest: return "RetryRequest";
    case Signal::RetrieveRequest: return "RetrieveRequest";
  }
  return "?";
}

MotionCommand command_for(Action a, const std::optional<TargetEstimate>& estimate,
                          double elapsed, const ControllerConfig& cfg) {
  if (!std::isfinite(elapsed) || elapsed < 0.0) {
    throw std::invalid_argument("command_for: elapsed must be finite and >= 0");
  }
  MotionCommand cmd;
  switch (a) {
    case Action::Idle:
      cmd.posture = Posture::Folded;
      break;
    case Action::Stabilizing:
      cmd.posture = Posture::LegsExtended;
      break;
    case Action::Aligning:
    case Action::Approaching:
      if (!estimate) {
        cmd.posture = Posture::LegsExtended;
        cmd.degraded = true;
        break;
      }
      cmd.posture = Posture::LegsExtended;
      cmd.omega = std::clamp(cfg.heading_gain * estimate->bearing,
                             -cfg.omega_max, cfg.omega_max);
      if (a == Action::Approaching) cmd.v = cfg.v_max;
      break;
    case Action::ForwardApproaching:
      cmd.posture = Posture::LegsExtended;
      cmd.v = cfg.v_max;
      break;
    case Action::Grasping:
      if (elapsed >= cfg.grasp_duration) {
        cmd.posture = Posture::GripHold;
        cmd.signal = Signal::GraspComplete;
      } else {
        cmd.posture = Posture::GripClosing;
      }
      break;
    case Action::Retry:
      cmd.posture = Posture::Folded;
      cmd.signal = Signal::RetryRequest;
      break;
  }
  return cmd;
}

MotionCommand GaitQuantizer::apply(const MotionCommand& target, double now,
                                   const ControllerConfig& cfg) {
  // Adopt new velocity targets only on step boundaries; epsilon absorbs
  // accumulated tick-time rounding.
  constexpr double kEps = 1e-9;
  if (!latched_ || now + kEps >= next_boundary_) {
    held_v_ = target.v;
    held_omega_ = target.omega;
    next_boundary_ = now + cfg.gait_step_period;
    latched_ = true;
  }
  MotionCommand out = target;
  out.v = held_v_;
  out.omega = held_omega_;
  return out;
}

MotionCommand ActionController::update(Action a,
                                       const std::optional<TargetEstimate>& estimate,
                                       double now, double dt) {
  (void)now;
  if (a != current_) {
    current_ = a;
    elapsed_ = 0.0;
    grasp_complete_sent_ = false;
    retry_sent_ = false;
    if (a == Action::Grasping) retrieve_sent_ = false;
  } else {
    elapsed_ += dt;
  }
  MotionCommand cmd = command_for(a, estimate, elapsed_, cfg_);
  // One-shot signal latching across the continuous interval of an action.
  if (cmd.signal == Signal::GraspComplete) {
    if (grasp_complete_sent_) {
      cmd.signal.reset();
      if (!retrieve_sent_) {
        cmd.signal = Signal::RetrieveRequest;
        retrieve_sent_ = true;
      }
    } else {
      grasp_complete_sent_ = true;
    }
  } else if (cmd.signal == Signal::RetryRequest) {
    if (retry_sent_) {
      cmd.signal.reset();
    } else {
      retry_sent_ = true;
    }
  }
  return cmd;
}

}  // namespace hexgrip
