#pragma once

#include <array>
#include <map>
#include <optional>

#include "hexgrip/action.hpp"

namespace hexgrip {

// Order of state variables in weight rows and StateVector::as_array():
// {mission_started, landed, heading, distance, target_under, unstable}.
inline constexpr int kStateCount = 6;

using WeightRow = std::array<double, kStateCount>;

// Robot-centric state consumed by the arbiter. mission_started, landed,
// target_under and unstable are binary; heading_state and distance_state are
// continuous scores in (0, 1] produced by heading_state()/distance_state().
struct StateVector {
  bool mission_started = false;
  bool landed = false;
  double heading_state = 1.0;
  double distance_state = 1.0;
  bool target_under = false;
  bool unstable = false;

  std::array<double, kStateCount> as_array() const {
    return {mission_started ? 1.0 : 0.0, landed ? 1.0 : 0.0,
            heading_state,               distance_state,
            target_under ? 1.0 : 0.0,    unstable ? 1.0 : 0.0};
  }
};

struct SelectorConfig {
  double C_a = 2.0;              // heading score gain, unitless
  double C_d = 2.0;              // distance score gain, 1/m
  double T_d = 0.4;              // desired forward-approach distance, m
  double D = 2.5;                // detection envelope (hover height), m
  double tilt_threshold = 0.3490658503988659;  // rad, 20 degrees
  double stale_cap = 5.0;        // s; held estimates older than this are dropped
  double hysteresis = 1.05;      // incumbent-keeping margin used by the mission loop
  // Selection gains and per-state weight rows, indexed by action_index().
  std::array<double, kSelectableActionCount> g{1.0, 6.0, 5.0, 4.0, 20.0, 50.0};
  std::array<WeightRow, kSelectableActionCount> W{{
      {1, 0, 0, 0, 0, 0},  // Stabilizing
      {1, 1, 0, 0, 0, 0},  // Aligning
      {1, 1, 1, 0, 0, 0},  // Approaching
      {1, 1, 1, 1, 0, 0},  // ForwardApproaching
      {1, 1, 0, 0, 1, 0},  // Grasping
      {1, 0, 0, 0, 0, 1},  // Retry
  }};
};

// Relative target fix as the robot consumes it: planar distance and signed
// bearing in the robot frame, stamped with sim time.
struct TargetEstimate {
  double distance = 0.0;   // m, >= 0
  double bearing = 0.0;    // rad in [-pi, pi]; positive = target to the left
  double timestamp = 0.0;  // s
};

// Heading score: 1 - tanh(C_a * |theta| * d / D). 1 when pointed at the
// target or standing on it; decays with combined angular+range error.
// Throws std::invalid_argument on negative d or non-finite input.
double heading_state(double theta, double d, const SelectorConfig& cfg);

// Distance score: 1 - tanh(C_d * |d - T_d|). Peaks at the forward-approach
// distance and is symmetric about it.
// Throws std::invalid_argument on negative or non-finite d.
double distance_state(double d, const SelectorConfig& cfg);

// Weighted affordance sum for one scored action. Rejects Idle.
double affordance(Action a, const StateVector& s, const SelectorConfig& cfg);

// An action is eligible iff every binary state with nonzero weight in its
// row is 1. Continuous states never gate. Rejects Idle.
bool eligible(Action a, const StateVector& s, const SelectorConfig& cfg);

struct Selection {
  Action action = Action::Idle;
  double priority = 0.0;  // g * affordance of the winner; 0 for Idle
  // Raw g*affordance per scored action (indexed by action_index), kept for
  // logging whether or not the action was eligible.
  std::array<double, kSelectableActionCount> priorities{};
  std::array<bool, kSelectableActionCount> eligible{};
};

// Pure argmax of g_i * affordance_i over eligible actions; ties broken by
// the fixed order Retry > Grasping > ForwardApproaching > Approaching >
// Aligning > Stabilizing. Returns Idle iff mission_started is 0.
Selection select_action(const StateVector& s, const SelectorConfig& cfg);

// Same scoring, but the mission loop's incumbent keeps the slot unless a
// challenger beats cfg.hysteresis times its current priority (or the
// incumbent became ineligible). Suppresses boundary chatter from observation
// noise without touching the underlying scores.
Selection select_action(const StateVector& s, const SelectorConfig& cfg,
                        Action incumbent);

// Caller-owned context that assembles StateVectors tick by tick. Holds the
// last heading/distance scores while the estimate channel is empty
// (occlusion, between observation arrivals) and age-caps the estimate handed
// to the motion controller.
class StateAssembler {
 public:
  // estimate: a fresh, non-occluded fix for this tick, or nullopt to hold.
  StateVector assemble(bool mission_started, bool landed,
                       const std::optional<TargetEstimate>& estimate,
                       bool target_under, double tilt,
                       const SelectorConfig& cfg);

  // Last fix if it is no older than cfg.stale_cap at `now`, else nullopt.
  std::optional<TargetEstimate> held_estimate(double now,
                                              const SelectorConfig& cfg) const;

 private:
  double held_heading_state_ = 1.0;
  double held_distance_state_ = 1.0;
  std::optional<TargetEstimate> last_estimate_;
};

}  // namespace hexgrip
