#include "hexgrip/mission.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace hexgrip {

namespace {

constexpr double kPi = std::numbers::pi;

double true_distance(const WorldState& w) {
  return std::hypot(w.target_x - w.robot.x, w.target_y - w.robot.y);
}

double true_bearing(const WorldState& w) {
  double a = std::atan2(w.target_y - w.robot.y, w.target_x - w.robot.x) -
             w.robot.heading;
  while (a > kPi) a -= 2.0 * kPi;
  while (a < -kPi) a += 2.0 * kPi;
  return a;
}

}  // namespace

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Success: return "Success";
    case Outcome::Timeout: return "Timeout";
    case Outcome::Failure: return "Failure";
  }
  return "?";
}

EpisodeLog run_episode(const RunConfig& cfg, std::uint64_t seed) {
  validate(cfg);
  EpisodeLog log;
  log.seed = seed;

  Rng rng(seed);
  WorldState w = make_initial_world(cfg.world, rng);
  winch_event(w, WinchEvent::BeginDescent, cfg.world);  // mission signal

  StateAssembler assembler;
  ActionController controller(cfg.controller);
  GaitQuantizer gait;
  Action current = Action::Idle;

  const double obs_period = 1.0 / cfg.world.obs_rate;
  double next_obs = 0.0;
  bool last_obs_occluded = false;

  bool grasp_complete = false;
  bool retrieve_started = false;

  try {
    for (double t = 0.0; t <= cfg.timeout; t += cfg.dt) {
      // Drone observation channel at its own cadence; the freshest
      // non-occluded fix feeds the assembler, everything else holds.
      bool obs_tick = false;
      std::optional<TargetEstimate> fresh;
      if (t + 1e-9 >= next_obs) {
        obs_tick = true;
        next_obs += obs_period;
        TargetObservation obs = drone_observe(w, cfg.world, rng);
        last_obs_occluded = obs.occluded();
        fresh = obs.estimate;
      }

      // Onboard sensing.
      const double tilt_meas = tilt_read(w.tilt, cfg.sensors, rng);
      UltrasonicReading sonar;
      if (!w.robot_airborne) sonar = ultrasonic_under(w, cfg.sensors, rng);

      PressureVerdict verdict;
      bool landed_bit;
      if (!cfg.sensors.pressure_fail) {
        verdict = pressure_verdict(w.tether_tension, w.grip_attached, cfg.sensors, rng);
        landed_bit = verdict == PressureVerdict::Landed;
      } else {
        // Dead platelet: landed/airborne comes from the winch, grasp
        // verification from the robot probing its own grip after a delay.
        const bool assessed =
            w.grip == GripState::Holding && w.grip_attached &&
            w.grip_hold_since >= 0.0 &&
            t - w.grip_hold_since >= cfg.sensors.fallback_verify_delay;
        verdict = pressure_verdict(w.robot_airborne ? w.tether_tension : 0.0,
                                   assessed, cfg.sensors, rng);
        if (verdict == PressureVerdict::GraspVerified) log.fallback_grasp_verify = true;
        landed_bit = !w.robot_airborne;
      }

      const StateVector s = assembler.assemble(true, landed_bit, fresh,
                                               sonar.target_under, tilt_meas,
                                               cfg.selector);
      const Selection sel = select_action(s, cfg.selector, current);
      current = sel.action;

      MotionCommand cmd =
          controller.update(current, assembler.held_estimate(t, cfg.selector), t, cfg.dt);
      cmd = gait.apply(cmd, t, cfg.controller);

      if (cmd.signal == Signal::GraspComplete) grasp_complete = true;
      if (!grasp_complete && !w.robot_airborne) log.duration_ground += cfg.dt;

      TickRecord rec;
      rec.time = t;
      rec.d_true = true_distance(w);
      rec.theta_true = true_bearing(w);
      rec.obs_tick = obs_tick;
      rec.occluded = last_obs_occluded;
      if (fresh) {
        rec.d_obs = fresh->distance;
        rec.theta_obs = fresh->bearing;
      }
      rec.state = s;
      rec.priorities = sel.priorities;
      rec.action = current;
      rec.command = cmd;
      rec.tilt_measured = tilt_meas;
      rec.pressure = verdict;
      rec.airborne = w.robot_airborne;
      rec.x = w.robot.x;
      rec.y = w.robot.y;
      rec.heading = w.robot.heading;
      log.ticks.push_back(rec);
      log.duration_total = t;

      if (verdict == PressureVerdict::GraspVerified) {
        log.outcome = Outcome::Success;
        break;
      }

      // Robot-to-drone signals drive the winch.
      if (cmd.signal == Signal::RetryRequest) {
        winch_event(w, WinchEvent::RestartMission, cfg.world);
        ++log.retries;
      } else if (cmd.signal == Signal::RetrieveRequest && !retrieve_started &&
                 !w.robot_airborne) {
        winch_event(w, WinchEvent::BeginRetrieve, cfg.world);
        retrieve_started = true;
      }

      w = step_world(w, cmd, cfg.dt, cfg.world, rng);

      // A retrieve that tops out without a verified grasp failed; go again.
      if (w.phase == WinchPhase::Retrieving && w.altitude >= cfg.world.hover_height) {
        winch_event(w, WinchEvent::RestartMission, cfg.world);
        ++log.retries;
        retrieve_started = false;
        grasp_complete = false;
      }
    }
  } catch (const std::logic_error&) {
    log.outcome = Outcome::Failure;  // phase machine violated: real defect
  }
  return log;
}

BatchSummary run_batch(const RunConfig& cfg, std::uint64_t base_seed, int episodes) {
  if (episodes < 1) throw std::invalid_argument("run_batch: episodes must be >= 1");
  BatchSummary out;
  out.episodes = episodes;
  out.base_seed = base_seed;
  int successes = 0;
  double retries_sum = 0.0;
  std::vector<double> ground;
  for (int i = 0; i < episodes; ++i) {
    EpisodeLog log = run_episode(cfg, base_seed + static_cast<std::uint64_t>(i));
    EpisodeSummary es;
    es.outcome = log.outcome;
    es.duration_ground = log.duration_ground;
    es.retries = log.retries;
    es.seed = log.seed;
    out.runs.push_back(es);
    retries_sum += log.retries;
    if (log.outcome == Outcome::Success) {
      ++successes;
      ground.push_back(log.duration_ground);
    }
  }
  out.success_rate = static_cast<double>(successes) / episodes;
  out.mean_retries = retries_sum / episodes;
  if (!ground.empty()) {
    const double mean =
        std::accumulate(ground.begin(), ground.end(), 0.0) / ground.size();
    double var = 0.0;
    for (double g : ground) var += (g - mean) * (g - mean);
    out.mean_duration_ground = mean;
    out.sd_duration_ground = ground.size() > 1
                                 ? std::sqrt(var / (ground.size() - 1))
                                 : 0.0;
  }
  return out;
}

}  // namespace hexgrip
