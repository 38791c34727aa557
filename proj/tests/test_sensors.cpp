#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "hexgrip/sensors.hpp"
#include "hexgrip/world.hpp"

using namespace hexgrip;

namespace {

// Landed robot at (x, y) with the given heading, target disc at the origin.
WorldState grounded_at(double x, double y, double heading) {
  WorldState w;
  w.robot = {x, y, heading};
  w.robot_airborne = false;
  w.phase = WinchPhase::OnGround;
  w.target_present = true;
  w.target_radius = target_footprint_radius({0.214, 0.172, 0.098});
  return w;
}

}  // namespace

TEST_CASE("target footprint radius matches the frozen reference value") {
  CHECK(target_footprint_radius({0.214, 0.172, 0.098}) ==
        doctest::Approx(0.13727709204379294).epsilon(1e-15));
}

TEST_CASE("both sonars fire only when both mounting points sit over the disc") {
  SensorConfig cfg;
  Rng rng(1);
  // Centered: mounting points at +-0.10 m, disc radius 0.137: both covered.
  WorldState w = grounded_at(0.0, 0.0, 0.0);
  UltrasonicReading r = ultrasonic_under(w, cfg, rng);
  CHECK(r.front);
  CHECK(r.rear);
  CHECK(r.target_under);
  // Nose over the disc, tail off it: no fused detection.
  w = grounded_at(-0.15, 0.0, 0.0);  // front point at -0.05, rear at -0.25
  r = ultrasonic_under(w, cfg, rng);
  CHECK(r.front);
  CHECK_FALSE(r.rear);
  CHECK_FALSE(r.target_under);
  // Far away: silence.
  w = grounded_at(1.0, 0.0, 0.0);
  r = ultrasonic_under(w, cfg, rng);
  CHECK_FALSE(r.front);
  CHECK_FALSE(r.rear);
  CHECK_FALSE(r.target_under);
}

TEST_CASE("a single failed sonar leaves the survivor in charge") {
  SensorConfig cfg;
  cfg.ultrasonic_fail = {true, false};  // front dead
  Rng rng(1);
  // Centered on the target: the rear sensor alone carries the detection.
  WorldState w = grounded_at(0.0, 0.0, 0.0);
  UltrasonicReading r = ultrasonic_under(w, cfg, rng);
  CHECK_FALSE(r.front);
  CHECK(r.rear);
  CHECK(r.target_under);

  cfg.ultrasonic_fail = {false, true};  // rear dead
  // Disc ahead of the robot: front point over it at d = 0.2.
  w = grounded_at(-0.2, 0.0, 0.0);
  r = ultrasonic_under(w, cfg, rng);
  CHECK(r.front);
  CHECK_FALSE(r.rear);
  CHECK(r.target_under);

  cfg.ultrasonic_fail = {true, true};
  w = grounded_at(0.0, 0.0, 0.0);
  r = ultrasonic_under(w, cfg, rng);
  CHECK_FALSE(r.target_under);
}

TEST_CASE("sonar needs ground proximity and an actual target") {
  SensorConfig cfg;
  Rng rng(1);
  WorldState w = grounded_at(0.0, 0.0, 0.0);
  w.robot_airborne = true;
  w.altitude = cfg.ultrasonic_range + 0.1;
  CHECK_FALSE(ultrasonic_under(w, cfg, rng).target_under);
  w.altitude = cfg.ultrasonic_range - 0.1;  // final approach on the tether
  CHECK(ultrasonic_under(w, cfg, rng).target_under);
  w.robot_airborne = false;
  w.target_present = false;
  CHECK_FALSE(ultrasonic_under(w, cfg, rng).target_under);
}

TEST_CASE("tension bands resolve landed, hanging and loaded states") {
  SensorConfig cfg;
  cfg.pressure_noise_sd = 0.0;  // exact banding
  Rng rng(1);
  CHECK(pressure_verdict(0.0, false, cfg, rng) == PressureVerdict::Landed);
  // Robot-only hanging weight: 3.0 kg * 9.81 = 29.43 N.
  CHECK(pressure_verdict(29.43, false, cfg, rng) == PressureVerdict::Airborne);
  // Robot plus payload: 4.0 kg * 9.81 = 39.24 N.
  CHECK(pressure_verdict(39.24, false, cfg, rng) == PressureVerdict::GraspVerified);
  // Band edges.
  CHECK(pressure_verdict(cfg.tension_landed_max - 0.001, false, cfg, rng) ==
        PressureVerdict::Landed);
  CHECK(pressure_verdict(cfg.tension_landed_max, false, cfg, rng) ==
        PressureVerdict::Airborne);
  CHECK(pressure_verdict(cfg.tension_grasped_min, false, cfg, rng) ==
        PressureVerdict::GraspVerified);
}

TEST_CASE("band separation dwarfs the sensor noise") {
  SensorConfig cfg;  // sd = 0.5 N against ~10 N gaps
  Rng rng(42);
  for (int i = 0; i < 2000; ++i) {
    CHECK(pressure_verdict(0.0, false, cfg, rng) == PressureVerdict::Landed);
    CHECK(pressure_verdict(29.43, false, cfg, rng) == PressureVerdict::Airborne);
    CHECK(pressure_verdict(39.24, false, cfg, rng) == PressureVerdict::GraspVerified);
  }
}

TEST_CASE("dead pressure platelet falls back to the grip's own assessment") {
  SensorConfig cfg;
  cfg.pressure_fail = true;
  Rng rng(1);
  CHECK(pressure_verdict(39.24, true, cfg, rng) == PressureVerdict::GraspVerified);
  CHECK(pressure_verdict(0.0, true, cfg, rng) == PressureVerdict::GraspVerified);
  CHECK(pressure_verdict(0.0, false, cfg, rng) == PressureVerdict::Landed);
  CHECK(pressure_verdict(29.43, false, cfg, rng) == PressureVerdict::Airborne);
}

TEST_CASE("tilt reads exactly with zero noise and clamps with noise") {
  SensorConfig cfg;
  cfg.tilt_noise_sd = 0.0;
  Rng rng(1);
  CHECK(tilt_read(0.25, cfg, rng) == 0.25);
  cfg.tilt_noise_sd = 1.0;  // absurd noise to exercise the clamp
  for (int i = 0; i < 500; ++i) {
    const double r = tilt_read(0.1, cfg, rng);
    CHECK(r >= 0.0);
    CHECK(r <= 1.5707963267948966);
  }
  CHECK_THROWS_AS(tilt_read(-0.01, cfg, rng), std::invalid_argument);
  CHECK_THROWS_AS(tilt_read(1.6, cfg, rng), std::invalid_argument);
  CHECK_THROWS_AS(tilt_read(std::nan(""), cfg, rng), std::invalid_argument);
}
