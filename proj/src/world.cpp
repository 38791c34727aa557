#include "hexgrip/world.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hexgrip {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGravity = 9.81;
constexpr double kWinchSnap = 1e-9;  // m, altitude snap against rounding drift

double wrap_angle(double a) {
  while (a > kPi) a -= 2.0 * kPi;
  while (a < -kPi) a += 2.0 * kPi;
  return a;
}

double hanging_tension(const WorldState& w, const WorldConfig& cfg) {
  double mass = cfg.robot_mass;
  if (w.grip_attached) mass += cfg.target_mass;
  return mass * kGravity;
}

// Closed-form unicycle arc; exact for piecewise-constant (v, omega).
void integrate_plane(Pose2D& p, double v, double omega, double dt) {
  if (std::abs(omega) < 1e-12) {
    p.x += v * std::cos(p.heading) * dt;
    p.y += v * std::sin(p.heading) * dt;
    return;
  }
  const double r = v / omega;
  const double h2 = p.heading + omega * dt;
  p.x += r * (std::sin(h2) - std::sin(p.heading));
  p.y -= r * (std::cos(h2) - std::cos(p.heading));
  p.heading = wrap_angle(h2);
}

void apply_deck_disturbance(WorldState& w, double dt, const WorldConfig& cfg,
                            Rng& rng) {
  const DeckDisturbance& deck = cfg.deck;
  // Scheduled impulses fire once when the ground-contact clock crosses them.
  while (w.next_scheduled_impulse < deck.schedule.size() &&
         deck.schedule[w.next_scheduled_impulse].t <= w.ground_clock) {
    w.tilt += deck.schedule[w.next_scheduled_impulse].mag;
    ++w.next_scheduled_impulse;
  }
  if (deck.rate > 0.0 && uniform(rng, 0.0, 1.0) < deck.rate * dt) {
    w.tilt += uniform(rng, deck.mag_min, deck.mag_max);
  }
  if (deck.decay > 0.0) w.tilt *= std::exp(-dt / deck.decay);
  w.tilt = std::clamp(w.tilt, 0.0, kPi / 2.0);
}

void step_grip(WorldState& w, Posture posture, const WorldConfig& cfg) {
  switch (w.grip) {
    case GripState::Open:
      if (posture == Posture::GripClosing) w.grip = GripState::Closing;
      break;
    case GripState::Closing:
      if (posture == Posture::GripHold) {
        // Closure completes now; success is pure geometry at this instant.
        w.grip = GripState::Holding;
        w.grip_hold_since = w.time;
        const double d = std::hypot(w.robot.x - w.target_x, w.robot.y - w.target_y);
        w.grip_attached = w.target_present && d <= cfg.grasp_radius;
      } else if (posture != Posture::GripClosing) {
        w.grip = GripState::Open;  // closure aborted (retry preempted it)
      }
      break;
    case GripState::Holding:
      // A holding grip is released only by a mission restart, never by a
      // posture command: the payload must not drop on a selector artifact.
      break;
  }
}

void reposition_at_apex(WorldState& w, const WorldConfig& cfg, Rng& rng) {
  const double lo = std::max(0.1, cfg.start_offset - 0.2);
  const double hi = cfg.start_offset + 0.2;
  const double offset = uniform(rng, lo, hi);
  const double dir = uniform(rng, 0.0, 2.0 * kPi);
  w.robot.x = w.target_x + offset * std::cos(dir);
  w.robot.y = w.target_y + offset * std::sin(dir);
  w.robot.heading = uniform(rng, -kPi, kPi);
}

}  // namespace

double target_footprint_radius(const std::array<double, 3>& dims) {
  return std::hypot(dims[0], dims[1]) / 2.0;
}

WorldState make_initial_world(const WorldConfig& cfg, Rng& rng) {
  WorldState w;
  w.target_present = cfg.target_present;
  w.target_radius = target_footprint_radius(cfg.target_dims);
  w.robot_airborne = true;
  w.altitude = cfg.hover_height;
  w.phase = WinchPhase::AtHover;
  const double dir = uniform(rng, 0.0, 2.0 * kPi);
  w.robot.x = w.target_x + cfg.start_offset * std::cos(dir);
  w.robot.y = w.target_y + cfg.start_offset * std::sin(dir);
  w.robot.heading = uniform(rng, -kPi, kPi);
  w.tether_tension = hanging_tension(w, cfg);
  return w;
}

WorldState step_world(const WorldState& prev, const MotionCommand& cmd, double dt,
                      const WorldConfig& cfg, Rng& rng) {
  if (!(dt > 0.0) || dt > 0.1) {
    throw std::invalid_argument("step_world: dt must be in (0, 0.1]");
  }
  WorldState w = prev;
  w.time += dt;

  if (!w.robot_airborne) {
    // The legs double as the gripper, so walking requires the walking stance:
    // any other posture pins the body regardless of lingering gait velocity.
    if (cmd.posture == Posture::LegsExtended) {
      integrate_plane(w.robot, cmd.v, cmd.omega, dt);
    }
    w.ground_clock += dt;
    apply_deck_disturbance(w, dt, cfg, rng);
    step_grip(w, cmd.posture, cfg);
    w.tether_tension = 0.0;  // slack while standing on the deck
  } else {
    switch (w.phase) {
      case WinchPhase::AtHover:
        break;  // waiting for BeginDescent
      case WinchPhase::Descending:
        w.altitude -= cfg.descent_rate * dt;
        // Snap tolerance: accumulated rounding in altitude must not cost a
        // whole extra tick when hover_height / descent_rate divides evenly.
        if (w.altitude <= kWinchSnap) {
          w.altitude = 0.0;
          w.robot_airborne = false;
          w.phase = WinchPhase::OnGround;
          w.tilt = 0.0;
          w.tether_tension = 0.0;
        }
        break;
      case WinchPhase::Retrieving:
        w.altitude += cfg.descent_rate * dt;
        if (w.altitude >= cfg.hover_height - kWinchSnap) w.altitude = cfg.hover_height;
        break;
      case WinchPhase::RepositionLift:
        w.altitude += cfg.descent_rate * dt;
        if (w.altitude >= cfg.hover_height - kWinchSnap) {
          w.altitude = cfg.hover_height;
          reposition_at_apex(w, cfg, rng);
          w.phase = WinchPhase::Descending;
        }
        break;
      case WinchPhase::OnGround:
        break;  // unreachable: OnGround implies !robot_airborne
    }
    if (w.robot_airborne) {
      w.tilt = 0.0;  // hanging plumb from the tether
      w.tether_tension = hanging_tension(w, cfg);
    }
  }

  // An attached payload travels with the robot.
  if (w.grip_attached) {
    w.target_x = w.robot.x;
    w.target_y = w.robot.y;
  }
  return w;
}

TargetObservation drone_observe(const WorldState& w, const WorldConfig& cfg,
                                Rng& rng) {
  TargetObservation obs;
  obs.timestamp = w.time;
  if (!w.target_present) return obs;
  const double dx = w.target_x - w.robot.x;
  const double dy = w.target_y - w.robot.y;
  const double d = std::hypot(dx, dy);
  if (d <= cfg.occlusion_radius) return obs;  // robot body blocks the view
  TargetEstimate est;
  est.distance = std::max(0.0, d + gaussian(rng, 0.0, cfg.obs_noise_d_sd));
  est.bearing = wrap_angle(std::atan2(dy, dx) - w.robot.heading +
                           gaussian(rng, 0.0, cfg.obs_noise_theta_sd));
  est.timestamp = w.time;
  obs.estimate = est;
  return obs;
}

void winch_event(WorldState& w, WinchEvent e, const WorldConfig& cfg) {
  switch (e) {
    case WinchEvent::BeginDescent:
      if (w.phase != WinchPhase::AtHover) {
        throw std::logic_error("winch_event: BeginDescent requires hover");
      }
      w.phase = WinchPhase::Descending;
      return;
    case WinchEvent::BeginRetrieve:
      if (w.phase != WinchPhase::OnGround) {
        throw std::logic_error("winch_event: BeginRetrieve requires the robot on the deck");
      }
      w.phase = WinchPhase::Retrieving;
      w.robot_airborne = true;
      w.altitude = 0.0;
      w.tilt = 0.0;
      w.tether_tension = (cfg.robot_mass + (w.grip_attached ? cfg.target_mass : 0.0)) * kGravity;
      return;
    case WinchEvent::RestartMission:
      if (w.phase != WinchPhase::OnGround && w.phase != WinchPhase::Retrieving) {
        throw std::logic_error("winch_event: RestartMission requires ground contact or an active retrieve");
      }
      w.phase = WinchPhase::RepositionLift;
      w.robot_airborne = true;
      w.tilt = 0.0;
      // The grip lets go for the next attempt; an unattached target stays put.
      w.grip = GripState::Open;
      w.grip_attached = false;
      w.grip_hold_since = -1.0;
      w.tether_tension = cfg.robot_mass * kGravity;
      return;
  }
  throw std::logic_error("winch_event: unknown event");
}

const char* grip_state_name(GripState g) {
  switch (g) {
    case GripState::Open: return "Open";
    case GripState::Closing: return "Closing";
    case GripState::Holding: return "Holding";
  }
  return "?";
}

const char* winch_phase_name(WinchPhase p) {
  switch (p) {
    case WinchPhase::AtHover: return "AtHover";
    case WinchPhase::Descending: return "Descending";
    case WinchPhase::OnGround: return "OnGround";
    case WinchPhase::Retrieving: return "Retrieving";
    case WinchPhase::RepositionLift: return "RepositionLift";
  }
  return "?";
}

}  // namespace hexgrip
