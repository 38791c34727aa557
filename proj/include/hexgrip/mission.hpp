#pragma once

#include <string>
#include <vector>

#include "hexgrip/config.hpp"

namespace hexgrip {

enum class Outcome : std::uint8_t { Success = 0, Timeout, Failure };

// One simulation tick as the mission loop saw it, sufficient to rebuild every
// exported artifact offline.
struct TickRecord {
  double time = 0.0;
  double d_true = 0.0;      // m, planar robot-target distance (ground truth)
  double theta_true = 0.0;  // rad, signed bearing (ground truth)
  bool obs_tick = false;    // an observation arrived this tick
  bool occluded = false;    // latest observation attempt was occluded
  double d_obs = 0.0;       // valid when obs_tick && !occluded
  double theta_obs = 0.0;
  StateVector state;
  std::array<double, kSelectableActionCount> priorities{};
  Action action = Action::Idle;
  MotionCommand command;      // post-gait command actually applied
  double tilt_measured = 0.0;
  PressureVerdict pressure = PressureVerdict::Airborne;
  bool airborne = true;
  double x = 0.0, y = 0.0, heading = 0.0;
};

struct EpisodeLog {
  std::vector<TickRecord> ticks;
  Outcome outcome = Outcome::Timeout;
  double duration_ground = 0.0;  // s on the deck until GraspComplete
  double duration_total = 0.0;   // s, episode wall-clock
  int retries = 0;
  std::uint64_t seed = 0;
  bool fallback_grasp_verify = false;  // grasp confirmed via the dead-pressure path
};

struct EpisodeSummary {
  Outcome outcome = Outcome::Timeout;
  double duration_ground = 0.0;
  int retries = 0;
  std::uint64_t seed = 0;
};

struct BatchSummary {
  int episodes = 0;
  std::uint64_t base_seed = 0;
  double success_rate = 0.0;
  double mean_duration_ground = 0.0;  // over successful episodes
  double sd_duration_ground = 0.0;
  double mean_retries = 0.0;
  std::vector<EpisodeSummary> runs;
};

const char* outcome_name(Outcome o);

// Run one episode: descend, arbitrate the ground mission tick by tick at
// cfg.dt, retry on instability or failed grasps, finish on a GraspVerified
// tick (Success) or at cfg.timeout (Timeout). Failure is reserved for
// internal invariant violations. Identical (cfg, seed) give identical logs.
EpisodeLog run_episode(const RunConfig& cfg, std::uint64_t seed);

// Episodes at seeds base_seed, base_seed+1, ... with aggregate statistics.
BatchSummary run_batch(const RunConfig& cfg, std::uint64_t base_seed, int episodes);

// Plot exports. timeline: time,d,theta,occluded,action (ground-truth d/theta,
// one row per tick, actions form contiguous regions). trajectory:
// x,y,heading,time. Rejects empty logs; IO errors carry the path.
void write_timeline_csv(const EpisodeLog& log, const std::string& path);
void write_trajectory_csv(const EpisodeLog& log, const std::string& path);

// Writes both CSVs (timeline.csv, trajectory.csv) into an existing directory.
void export_plot_data(const EpisodeLog& log, const std::string& out_dir);

// Full-log JSON round-trip (the CLI's episode_log.json) plus summary JSON.
std::string episode_to_json_text(const EpisodeLog& log);
EpisodeLog episode_from_json_text(const std::string& text);
std::string episode_summary_json_text(const EpisodeLog& log);
std::string batch_summary_json_text(const BatchSummary& s);

}  // namespace hexgrip
