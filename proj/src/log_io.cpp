#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hexgrip/mission.hpp"
#include "json.hpp"

namespace hexgrip {

namespace {

using nlohmann::json;

// Fixed-width formatting keeps exports byte-identical for identical runs.
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  return out;
}

void require_nonempty(const EpisodeLog& log, const char* what) {
  if (log.ticks.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty episode log");
  }
}

json command_to_json(const MotionCommand& c) {
  json j{{"v", c.v},
         {"omega", c.omega},
         {"posture", posture_name(c.posture)},
         {"degraded", c.degraded}};
  if (c.signal) j["signal"] = signal_name(*c.signal);
  return j;
}

MotionCommand command_from_json(const json& j) {
  MotionCommand c;
  c.v = j.at("v").get<double>();
  c.omega = j.at("omega").get<double>();
  c.degraded = j.at("degraded").get<bool>();
  const std::string posture = j.at("posture").get<std::string>();
  for (Posture p : {Posture::Folded, Posture::LegsExtended, Posture::GripClosing,
                    Posture::GripHold}) {
    if (posture == posture_name(p)) c.posture = p;
  }
  if (j.contains("signal")) {
    const std::string sig = j.at("signal").get<std::string>();
    for (Signal s : {Signal::GraspComplete, Signal::RetryRequest,
                     Signal::RetrieveRequest}) {
      if (sig == signal_name(s)) c.signal = s;
    }
  }
  return c;
}

json tick_to_json(const TickRecord& r) {
  return json{{"time", r.time},
              {"d_true", r.d_true},
              {"theta_true", r.theta_true},
              {"obs_tick", r.obs_tick},
              {"occluded", r.occluded},
              {"d_obs", r.d_obs},
              {"theta_obs", r.theta_obs},
              {"state",
               json{{"mission_started", r.state.mission_started},
                    {"landed", r.state.landed},
                    {"heading_state", r.state.heading_state},
                    {"distance_state", r.state.distance_state},
                    {"target_under", r.state.target_under},
                    {"unstable", r.state.unstable}}},
              {"priorities", r.priorities},
              {"action", action_name(r.action)},
              {"command", command_to_json(r.command)},
              {"tilt_measured", r.tilt_measured},
              {"pressure", pressure_verdict_name(r.pressure)},
              {"airborne", r.airborne},
              {"x", r.x},
              {"y", r.y},
              {"heading", r.heading}};
}

TickRecord tick_from_json(const json& j) {
  TickRecord r;
  r.time = j.at("time").get<double>();
  r.d_true = j.at("d_true").get<double>();
  r.theta_true = j.at("theta_true").get<double>();
  r.obs_tick = j.at("obs_tick").get<bool>();
  r.occluded = j.at("occluded").get<bool>();
  r.d_obs = j.at("d_obs").get<double>();
  r.theta_obs = j.at("theta_obs").get<double>();
  const json& s = j.at("state");
  r.state.mission_started = s.at("mission_started").get<bool>();
  r.state.landed = s.at("landed").get<bool>();
  r.state.heading_state = s.at("heading_state").get<double>();
  r.state.distance_state = s.at("distance_state").get<double>();
  r.state.target_under = s.at("target_under").get<bool>();
  r.state.unstable = s.at("unstable").get<bool>();
  r.priorities = j.at("priorities").get<std::array<double, kSelectableActionCount>>();
  if (auto a = action_from_name(j.at("action").get<std::string>())) r.action = *a;
  r.command = command_from_json(j.at("command"));
  r.tilt_measured = j.at("tilt_measured").get<double>();
  const std::string verdict = j.at("pressure").get<std::string>();
  for (PressureVerdict v : {PressureVerdict::Landed, PressureVerdict::Airborne,
                            PressureVerdict::GraspVerified}) {
    if (verdict == pressure_verdict_name(v)) r.pressure = v;
  }
  r.airborne = j.at("airborne").get<bool>();
  r.x = j.at("x").get<double>();
  r.y = j.at("y").get<double>();
  r.heading = j.at("heading").get<double>();
  return r;
}

}  // namespace

void write_timeline_csv(const EpisodeLog& log, const std::string& path) {
  require_nonempty(log, "write_timeline_csv");
  std::ofstream out = open_out(path);
  out << "time,d,theta,occluded,action\n";
  for (const TickRecord& r : log.ticks) {
    out << fmt(r.time) << ',' << fmt(r.d_true) << ',' << fmt(r.theta_true) << ','
        << (r.occluded ? 1 : 0) << ',' << action_name(r.action) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_trajectory_csv(const EpisodeLog& log, const std::string& path) {
  require_nonempty(log, "write_trajectory_csv");
  std::ofstream out = open_out(path);
  out << "x,y,heading,time\n";
  for (const TickRecord& r : log.ticks) {
    out << fmt(r.x) << ',' << fmt(r.y) << ',' << fmt(r.heading) << ','
        << fmt(r.time) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void export_plot_data(const EpisodeLog& log, const std::string& out_dir) {
  write_timeline_csv(log, out_dir + "/timeline.csv");
  write_trajectory_csv(log, out_dir + "/trajectory.csv");
}

std::string episode_to_json_text(const EpisodeLog& log) {
  json ticks = json::array();
  for (const TickRecord& r : log.ticks) ticks.push_back(tick_to_json(r));
  json j{{"outcome", outcome_name(log.outcome)},
         {"duration_ground", log.duration_ground},
         {"duration_total", log.duration_total},
         {"retries", log.retries},
         {"seed", log.seed},
         {"fallback_grasp_verify", log.fallback_grasp_verify},
         {"ticks", ticks}};
  return j.dump();
}

EpisodeLog episode_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("episode log parse error: ") + e.what());
  }
  EpisodeLog log;
  try {
    const std::string oc = j.at("outcome").get<std::string>();
    for (Outcome o : {Outcome::Success, Outcome::Timeout, Outcome::Failure}) {
      if (oc == outcome_name(o)) log.outcome = o;
    }
    log.duration_ground = j.at("duration_ground").get<double>();
    log.duration_total = j.at("duration_total").get<double>();
    log.retries = j.at("retries").get<int>();
    log.seed = j.at("seed").get<std::uint64_t>();
    log.fallback_grasp_verify = j.at("fallback_grasp_verify").get<bool>();
    for (const json& t : j.at("ticks")) log.ticks.push_back(tick_from_json(t));
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("episode log structure error: ") + e.what());
  }
  return log;
}

std::string episode_summary_json_text(const EpisodeLog& log) {
  json j{{"outcome", outcome_name(log.outcome)},
         {"duration_ground", log.duration_ground},
         {"duration_total", log.duration_total},
         {"retries", log.retries},
         {"seed", log.seed},
         {"fallback_grasp_verify", log.fallback_grasp_verify},
         {"ticks", log.ticks.size()}};
  return j.dump(2);
}

std::string batch_summary_json_text(const BatchSummary& s) {
  json runs = json::array();
  for (const EpisodeSummary& r : s.runs) {
    runs.push_back(json{{"seed", r.seed},
                        {"outcome", outcome_name(r.outcome)},
                        {"duration_ground", r.duration_ground},
                        {"retries", r.retries}});
  }
  json j{{"episodes", s.episodes},
         {"base_seed", s.base_seed},
         {"success_rate", s.success_rate},
         {"mean_duration_ground", s.mean_duration_ground},
         {"sd_duration_ground", s.sd_duration_ground},
         {"mean_retries", s.mean_retries},
         {"runs", runs}};
  return j.dump(2);
}

}  // namespace hexgrip
