#include "hexgrip/sensors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hexgrip {

namespace {

bool point_over_target(const WorldState& w, double along_offset) {
  if (!w.target_present) return false;
  const double px = w.robot.x + along_offset * std::cos(w.robot.heading);
  const double py = w.robot.y + along_offset * std::sin(w.robot.heading);
  const double dx = px - w.target_x;
  const double dy = py - w.target_y;
  return std::hypot(dx, dy) <= w.target_radius;
}

}  // namespace

UltrasonicReading ultrasonic_under(const WorldState& w, const SensorConfig& cfg,
                                   Rng& rng) {
  (void)rng;  // echoes are noise-free in this model
  UltrasonicReading r;
  const bool in_range = !w.robot_airborne || w.altitude <= cfg.ultrasonic_range;
  const double off = cfg.detection_footprint / 2.0;
  const bool front_ok = !cfg.ultrasonic_fail[0];
  const bool rear_ok = !cfg.ultrasonic_fail[1];
  if (in_range) {
    r.front = front_ok && point_over_target(w, +off);
    r.rear = rear_ok && point_over_target(w, -off);
  }
  if (front_ok && rear_ok) {
    r.target_under = r.front && r.rear;
  } else if (front_ok) {
    r.target_under = r.front;
  } else if (rear_ok) {
    r.target_under = r.rear;
  } else {
    r.target_under = false;
  }
  return r;
}

PressureVerdict pressure_verdict(double tether_tension, bool payload_attached,
                                 const SensorConfig& cfg, Rng& rng) {
  if (cfg.pressure_fail) {
    // Dead platelet: the robot assesses the grip itself and takes the
    // landed/airborne bit from the winch (modeled as noise-free tension).
    if (payload_attached) return PressureVerdict::GraspVerified;
    return tether_tension < cfg.tension_landed_max ? PressureVerdict::Landed
                                                   : PressureVerdict::Airborne;
  }
  const double reading = gaussian(rng, tether_tension, cfg.pressure_noise_sd);
  if (reading < cfg.tension_landed_max) return PressureVerdict::Landed;
  if (reading < cfg.tension_grasped_min) return PressureVerdict::Airborne;
  return PressureVerdict::GraspVerified;
}

double tilt_read(double true_tilt, const SensorConfig& cfg, Rng& rng) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  if (!std::isfinite(true_tilt) || true_tilt < 0.0 || true_tilt > kHalfPi) {
    throw std::invalid_argument("tilt_read: true tilt outside [0, pi/2]");
  }
  const double reading = gaussian(rng, true_tilt, cfg.tilt_noise_sd);
  return std::clamp(reading, 0.0, kHalfPi);
}

const char* pressure_verdict_name(PressureVerdict v) {
  switch (v) {
    case PressureVerdict::Landed: return "Landed";
    case PressureVerdict::Airborne: return "Airborne";
    case PressureVerdict::GraspVerified: return "GraspVerified";
  }
  return "?";
}

}  // namespace hexgrip
