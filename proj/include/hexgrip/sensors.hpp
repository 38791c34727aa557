#pragma once

#include "hexgrip/rng.hpp"
#include "hexgrip/world.hpp"

namespace hexgrip {

struct SensorConfig {
  double ultrasonic_range = 0.5;  // m, max height at which the pair still sees the deck
  std::array<bool, 2> ultrasonic_fail{false, false};  // {front, rear}
  double detection_footprint = 0.20;  // m, half-length of the underside along heading
  double pressure_noise_sd = 0.5;     // N
  double tension_landed_max = 5.0;    // N, below this the robot is on the deck
  double tension_grasped_min = 34.335;  // N, (robot + half target) * g
  double tilt_noise_sd = 0.02;        // rad
  bool pressure_fail = false;
  double fallback_verify_delay = 1.0;  // s; dead-pressure grasp assessment time
};

enum class PressureVerdict : std::uint8_t { Landed = 0, Airborne, GraspVerified };

// front/rear are the raw echoes (false for a failed sensor); target_under is
// the fused bit: AND of both when healthy, the surviving sensor when exactly
// one failed, 0 when both failed.
struct UltrasonicReading {
  bool front = false;
  bool rear = false;
  bool target_under = false;
};

// Downward-looking pair mounted at +/- detection_footprint/2 along the
// heading. A healthy sensor fires iff the target footprint disc covers its
// mounting point. Detection needs the robot on the deck (or within
// ultrasonic_range of it). rng is reserved; echoes are currently noise-free.
UltrasonicReading ultrasonic_under(const WorldState& w, const SensorConfig& cfg,
                                   Rng& rng);

// Tether tension platelet, banded: noisy tension < tension_landed_max =>
// Landed; < tension_grasped_min => Airborne; else GraspVerified.
// With pressure_fail the platelet is dead and the verdict is the fallback
// assessment instead: GraspVerified iff payload_attached (the robot probing
// its own grip), else Landed/Airborne from true tension without noise.
PressureVerdict pressure_verdict(double tether_tension, bool payload_attached,
                                 const SensorConfig& cfg, Rng& rng);

// IMU-derived body tilt: true tilt plus Gaussian noise, clamped to [0, pi/2].
// Throws std::invalid_argument if true_tilt is outside [0, pi/2].
double tilt_read(double true_tilt, const SensorConfig& cfg, Rng& rng);

const char* pressure_verdict_name(PressureVerdict v);

}  // namespace hexgrip
