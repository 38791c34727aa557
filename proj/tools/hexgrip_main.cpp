// Command-line front end. Talks to the simulator exclusively through the C
// API in hexgrip.h; config editing for flags like --fail-sensor happens on
// the JSON document before it crosses the boundary.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hexgrip.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitRunFailed = 1;   // episode finished without Success
constexpr int kExitBadConfig = 2;   // config/CLI/IO problem

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { hexgrip_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct OwnedEpisode {
  hexgrip_episode* ptr = nullptr;
  ~OwnedEpisode() { hexgrip_episode_free(ptr); }
};

int fail(const std::string& context) {
  std::cerr << "error: " << context;
  const char* detail = hexgrip_last_error();
  if (detail && *detail) std::cerr << ": " << detail;
  std::cerr << "\n";
  return kExitBadConfig;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

// "2.0:0.4,7.5:0.3" -> deck schedule entries.
json parse_disturb_list(const std::string& arg) {
  json schedule = json::array();
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::runtime_error("--disturb expects t:mag[,t:mag...], got \"" + item + "\"");
    }
    size_t used = 0;
    const double t = std::stod(item.substr(0, colon), &used);
    const double mag = std::stod(item.substr(colon + 1));
    schedule.push_back(json{{"t", t}, {"mag", mag}});
  }
  if (schedule.empty()) throw std::runtime_error("--disturb: empty schedule");
  return schedule;
}

// Defaults, overlaid with the user's config file, terrain preset and
// injection flags; returns the final document handed to the library.
std::string assemble_config(const std::string& config_path,
                            const std::string& terrain,
                            const std::vector<std::string>& fail_sensors,
                            const std::string& disturb_arg) {
  json doc;
  if (config_path.empty()) {
    OwnedString defaults;
    if (hexgrip_default_config(&defaults.ptr) != HEXGRIP_OK) {
      throw std::runtime_error(hexgrip_last_error());
    }
    doc = json::parse(defaults.str());
  } else {
    doc = json::parse(read_file(config_path));
  }
  if (!terrain.empty()) {
    // Preset values mirror apply_terrain_preset in the library.
    if (terrain == "pontoon") {
      doc["world"]["deck"]["rate"] = 0.08;
      doc["world"]["obs_noise_d_sd"] = 0.06;
      doc["world"]["obs_noise_theta_sd"] = 0.06;
    } else if (terrain == "grass") {
      doc["world"]["deck"]["rate"] = 0.02;
      doc["world"]["obs_noise_d_sd"] = 0.05;
      doc["world"]["obs_noise_theta_sd"] = 0.05;
    } else if (terrain == "mat") {
      doc["world"]["deck"]["rate"] = 0.05;
      doc["world"]["deck"]["mag_max"] = 0.5;
      doc["world"]["obs_noise_d_sd"] = 0.05;
      doc["world"]["obs_noise_theta_sd"] = 0.05;
    } else {
      throw std::runtime_error("unknown terrain \"" + terrain +
                               "\" (expected pontoon, grass or mat)");
    }
  }
  for (const std::string& s : fail_sensors) {
    if (s == "front") {
      doc["sensors"]["ultrasonic_fail"][0] = true;
    } else if (s == "rear") {
      doc["sensors"]["ultrasonic_fail"][1] = true;
    } else if (s == "pressure") {
      doc["sensors"]["pressure_fail"] = true;
    } else {
      throw std::runtime_error("--fail-sensor expects front, rear or pressure");
    }
  }
  if (!disturb_arg.empty()) {
    doc["world"]["deck"]["schedule"] = parse_disturb_list(disturb_arg);
  }
  return doc.dump();
}

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed,
            const std::string& out_dir, const std::string& terrain,
            const std::vector<std::string>& fail_sensors,
            const std::string& disturb_arg) {
  std::string config;
  std::uint64_t effective_seed = 1;
  try {
    config = assemble_config(config_path, terrain, fail_sensors, disturb_arg);
    const json doc = json::parse(config);
    if (doc.contains("run") && doc["run"].contains("seed")) {
      effective_seed = doc["run"]["seed"].get<std::uint64_t>();
    }
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  if (seed) effective_seed = *seed;

  OwnedEpisode ep;
  if (hexgrip_episode_run(config.c_str(), effective_seed, &ep.ptr) != HEXGRIP_OK) {
    return fail("run");
  }

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) return fail("cannot create output directory " + out_dir);

  if (hexgrip_episode_write_timeline_csv(ep.ptr, (out_dir + "/timeline.csv").c_str()) !=
          HEXGRIP_OK ||
      hexgrip_episode_write_trajectory_csv(ep.ptr,
                                           (out_dir + "/trajectory.csv").c_str()) !=
          HEXGRIP_OK) {
    return fail("export");
  }
  OwnedString summary, full_log;
  if (hexgrip_episode_summary_json(ep.ptr, &summary.ptr) != HEXGRIP_OK ||
      hexgrip_episode_to_json(ep.ptr, &full_log.ptr) != HEXGRIP_OK) {
    return fail("serialize");
  }
  try {
    write_file(out_dir + "/summary.json", summary.str() + "\n");
    write_file(out_dir + "/episode_log.json", full_log.str());
  } catch (const std::exception& e) {
    return fail(e.what());
  }

  std::cout << summary.str() << "\n";
  return hexgrip_episode_outcome(ep.ptr) == HEXGRIP_OUTCOME_SUCCESS ? 0
                                                                    : kExitRunFailed;
}

int cmd_batch(const std::string& config_path, std::optional<std::uint64_t> seed,
              std::optional<int> episodes, const std::string& out_dir,
              const std::string& terrain,
              const std::vector<std::string>& fail_sensors,
              const std::string& disturb_arg) {
  std::string config;
  std::uint64_t base_seed = 1;
  int n = 1;
  try {
    config = assemble_config(config_path, terrain, fail_sensors, disturb_arg);
    const json doc = json::parse(config);
    if (doc.contains("run")) {
      if (doc["run"].contains("seed")) base_seed = doc["run"]["seed"].get<std::uint64_t>();
      if (doc["run"].contains("episodes")) n = doc["run"]["episodes"].get<int>();
    }
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  if (seed) base_seed = *seed;
  if (episodes) n = *episodes;

  OwnedString summary;
  if (hexgrip_batch_run(config.c_str(), base_seed, n, &summary.ptr) != HEXGRIP_OK) {
    return fail("batch");
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) return fail("cannot create output directory " + out_dir);
  try {
    write_file(out_dir + "/batch_summary.json", summary.str() + "\n");
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  std::cout << summary.str() << "\n";
  return 0;
}

int cmd_export(const std::string& log_path, const std::string& out_dir) {
  std::string text;
  try {
    text = read_file(log_path);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  OwnedEpisode ep;
  if (hexgrip_episode_from_json(text.c_str(), &ep.ptr) != HEXGRIP_OK) {
    return fail("parse " + log_path);
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) return fail("cannot create output directory " + out_dir);
  if (hexgrip_episode_write_timeline_csv(ep.ptr, (out_dir + "/timeline.csv").c_str()) !=
          HEXGRIP_OK ||
      hexgrip_episode_write_trajectory_csv(ep.ptr,
                                           (out_dir + "/trajectory.csv").c_str()) !=
          HEXGRIP_OK) {
    return fail("export");
  }
  return 0;
}

int cmd_dump_defaults() {
  OwnedString defaults;
  if (hexgrip_default_config(&defaults.ptr) != HEXGRIP_OK) return fail("defaults");
  std::cout << defaults.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tethered hexapod gripper mission simulator"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out", terrain, disturb_arg, log_path;
  std::vector<std::string> fail_sensors;
  std::optional<std::uint64_t> seed;
  std::optional<int> episodes;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file (defaults when omitted)");
    cmd->add_option("--seed", seed, "override run.seed");
    cmd->add_option("--out", out_dir, "output directory (default: out)");
    cmd->add_option("--terrain", terrain, "terrain preset: pontoon, grass or mat");
    cmd->add_option("--fail-sensor", fail_sensors,
                    "inject a sensor failure: front, rear or pressure (repeatable)");
    cmd->add_option("--disturb", disturb_arg,
                    "scheduled tilt impulses t:mag[,t:mag...] (t = seconds of ground contact)");
  };

  CLI::App* run = app.add_subcommand("run", "simulate one episode and export its logs");
  add_common(run);

  CLI::App* batch = app.add_subcommand("batch", "run seeded episodes and aggregate");
  add_common(batch);
  batch->add_option("--episodes", episodes, "override run.episodes");

  CLI::App* exp = app.add_subcommand("export", "re-export CSVs from a saved episode log");
  exp->add_option("--log", log_path, "episode_log.json from a previous run")->required();
  exp->add_option("--out", out_dir, "output directory (default: out)");

  app.add_subcommand("dump-defaults", "print the built-in config document");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    return cmd_run(config_path, seed, out_dir, terrain, fail_sensors, disturb_arg);
  }
  if (batch->parsed()) {
    return cmd_batch(config_path, seed, episodes, out_dir, terrain, fail_sensors,
                     disturb_arg);
  }
  if (exp->parsed()) return cmd_export(log_path, out_dir);
  return cmd_dump_defaults();
}
