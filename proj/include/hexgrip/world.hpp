#pragma once

#include <optional>
#include <vector>

#include "hexgrip/controller.hpp"
#include "hexgrip/rng.hpp"

namespace hexgrip {

enum class GripState : std::uint8_t { Open = 0, Closing, Holding };

// Tether/winch phase machine. The vertical axis is reduced to this plus an
// altitude scalar; everything else in the world is planar.
enum class WinchPhase : std::uint8_t {
  AtHover = 0,    // stowed under the drone, before descent
  Descending,
  OnGround,
  Retrieving,     // reeling in after a grasp
  RepositionLift, // retry: lifting back to hover before re-dropping
};

enum class WinchEvent : std::uint8_t { BeginDescent = 0, BeginRetrieve, RestartMission };

// One scheduled deck tilt impulse. Times are accumulated ground-contact
// seconds (the clock pauses while the robot hangs from the tether), and each
// impulse fires exactly once.
struct TiltImpulse {
  double t = 0.0;    // s of ground contact
  double mag = 0.0;  // rad added to deck tilt
};

struct DeckDisturbance {
  double rate = 0.05;     // Poisson impulses per second of ground contact
  double mag_min = 0.2;   // rad
  double mag_max = 0.5;   // rad
  double decay = 1.0;     // s, exponential tilt decay constant
  std::vector<TiltImpulse> schedule;
};

struct WorldConfig {
  double obs_rate = 10.0;          // Hz, drone observation cadence
  double obs_noise_d_sd = 0.05;    // m
  double obs_noise_theta_sd = 0.05;  // rad
  double occlusion_radius = 0.25;  // m; robot this close blocks the drone's view
  DeckDisturbance deck;
  std::array<double, 3> target_dims{0.214, 0.172, 0.098};  // m, L x W x H
  double target_mass = 1.0;   // kg
  double robot_mass = 3.0;    // kg
  double hover_height = 2.5;  // m
  double descent_rate = 0.5;  // m/s, also the reel-in rate
  double start_offset = 1.0;  // m, first-drop distance from the target
  double grasp_radius = 0.30;  // m, closure succeeds iff target center within
  bool target_present = true;
};

struct Pose2D {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;  // rad in [-pi, pi]
};

struct WorldState {
  double time = 0.0;
  Pose2D robot;
  bool robot_airborne = true;
  double altitude = 0.0;  // m above deck while airborne
  WinchPhase phase = WinchPhase::AtHover;
  double target_x = 0.0;
  double target_y = 0.0;
  bool target_present = true;
  double target_radius = 0.0;  // m, footprint disc; fixed at world creation
  double tilt = 0.0;           // rad, true deck-induced body tilt in [0, pi/2]
  double tether_tension = 0.0;  // N
  GripState grip = GripState::Open;
  bool grip_attached = false;
  double grip_hold_since = -1.0;  // time grip became Holding; <0 = never
  double ground_clock = 0.0;      // accumulated s of ground contact
  std::size_t next_scheduled_impulse = 0;
};

// Drone camera channel. estimate is empty iff the view was occluded (robot
// within occlusion_radius of the target, or no target on deck).
struct TargetObservation {
  std::optional<TargetEstimate> estimate;
  double timestamp = 0.0;

  bool occluded() const { return !estimate.has_value(); }
};

// Footprint disc radius for a target of the given planar dims (half the
// diagonal of the top face, orientation-agnostic).
double target_footprint_radius(const std::array<double, 3>& dims);

// Fresh world at hover: target at the origin, drop point start_offset away in
// a seeded random direction with a seeded random landing heading.
WorldState make_initial_world(const WorldConfig& cfg, Rng& rng);

// Advance one tick of dt seconds (dt in (0, 0.1]).
// On the ground: exact closed-form unicycle arc for (v, omega), deck tilt
// impulses (scheduled + Poisson) with exponential decay, grip transitions
// driven by the commanded posture (closure succeeds iff the target center is
// within grasp_radius at completion; a Holding grip never opens here).
// Airborne: altitude follows the winch phase at descent_rate; tension is the
// hanging weight (plus payload when attached); touchdown zeroes tilt.
WorldState step_world(const WorldState& w, const MotionCommand& cmd, double dt,
                      const WorldConfig& cfg, Rng& rng);

// Observation as the drone sees it right now; the caller owns the cadence.
TargetObservation drone_observe(const WorldState& w, const WorldConfig& cfg,
                                Rng& rng);

// Apply a winch event. Phase-inconsistent events (retrieve while mid-descent,
// descent while not at hover, ...) throw std::logic_error.
void winch_event(WorldState& w, WinchEvent e, const WorldConfig& cfg);

const char* grip_state_name(GripState g);
const char* winch_phase_name(WinchPhase p);

}  // namespace hexgrip
