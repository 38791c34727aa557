// Independent reference computations for the test suites. Everything here is
// written from the defining formulas with literal constants, deliberately not
// sharing code paths (or config structs) with the library implementation.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace oracle {

// Default-config scores, literal constants.
inline double heading_score(double theta, double d) {
  return 1.0 - std::tanh(2.0 * std::abs(theta) * d / 2.5);
}

inline double distance_score(double d) {
  return 1.0 - std::tanh(2.0 * std::abs(d - 0.4));
}

// Per-action weighted state sums, spelled out term by term. State order:
// {mission_started, landed, heading, distance, target_under, unstable}.
inline double affordance_stabilizing(const std::array<double, 6>& s) { return s[0]; }
inline double affordance_aligning(const std::array<double, 6>& s) { return s[0] + s[1]; }
inline double affordance_approaching(const std::array<double, 6>& s) {
  return s[0] + s[1] + s[2];
}
inline double affordance_forward(const std::array<double, 6>& s) {
  return s[0] + s[1] + s[2] + s[3];
}
inline double affordance_grasping(const std::array<double, 6>& s) {
  return s[0] + s[1] + s[4];
}
inline double affordance_retry(const std::array<double, 6>& s) { return s[0] + s[5]; }

inline std::array<double, 6> affordances(const std::array<double, 6>& s) {
  return {affordance_stabilizing(s), affordance_aligning(s),
          affordance_approaching(s), affordance_forward(s),
          affordance_grasping(s),    affordance_retry(s)};
}

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
};

// Fine-step Euler integration of the unicycle ODE, the reference for the
// closed-form arc update. sub_dt divides the whole tick; the remainder step
// covers dt not being a multiple of sub_dt.
inline Pose euler_unicycle(Pose p, double v, double omega, double dt,
                           double sub_dt = 1e-4) {
  if (!(dt > 0.0)) throw std::invalid_argument("euler_unicycle: dt must be positive");
  double remaining = dt;
  while (remaining > 0.0) {
    const double h = remaining < sub_dt ? remaining : sub_dt;
    p.x += v * std::cos(p.heading) * h;
    p.y += v * std::sin(p.heading) * h;
    p.heading += omega * h;
    remaining -= h;
  }
  return p;
}

// Smallest signed angular difference a - b.
inline double angle_diff(double a, double b) {
  double d = a - b;
  while (d > 3.14159265358979323846) d -= 2.0 * 3.14159265358979323846;
  while (d < -3.14159265358979323846) d += 2.0 * 3.14159265358979323846;
  return d;
}

}  // namespace oracle
