#include "hexgrip/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hexgrip {

namespace {

using nlohmann::json;

void check(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

Action parse_action_key(const std::string& key, const char* where) {
  auto a = action_from_name(key);
  if (!a || *a == Action::Idle) {
    throw ConfigError(std::string(where) + ": unknown action \"" + key + "\"");
  }
  return *a;
}

// Field-presence-tolerant readers: absent keys keep the default already in
// the struct, wrong types surface as ConfigError.
template <typename T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field \"") + key + "\": " + e.what());
  }
}

void from_json_selector(const json& j, SelectorConfig& c) {
  read(j, "C_a", c.C_a);
  read(j, "C_d", c.C_d);
  read(j, "T_d", c.T_d);
  read(j, "D", c.D);
  read(j, "tilt_threshold", c.tilt_threshold);
  read(j, "stale_cap", c.stale_cap);
  read(j, "hysteresis", c.hysteresis);
  if (j.contains("g")) {
    for (auto& [key, val] : j.at("g").items()) {
      Action a = parse_action_key(key, "selector.g");
      c.g[action_index(a)] = val.get<double>();
    }
  }
  if (j.contains("W")) {
    for (auto& [key, val] : j.at("W").items()) {
      Action a = parse_action_key(key, "selector.W");
      auto row = val.get<std::vector<double>>();
      check(row.size() == kStateCount, "selector.W rows need " +
                                           std::to_string(kStateCount) + " weights");
      std::copy(row.begin(), row.end(), c.W[action_index(a)].begin());
    }
  }
}

json to_json_selector(const SelectorConfig& c) {
  json g, w;
  for (Action a : kSelectableActions) {
    g[std::string(action_name(a))] = c.g[action_index(a)];
    w[std::string(action_name(a))] = c.W[action_index(a)];
  }
  return json{{"C_a", c.C_a},
              {"C_d", c.C_d},
              {"T_d", c.T_d},
              {"D", c.D},
              {"tilt_threshold", c.tilt_threshold},
              {"stale_cap", c.stale_cap},
              {"hysteresis", c.hysteresis},
              {"g", g},
              {"W", w}};
}

void from_json_controller(const json& j, ControllerConfig& c) {
  read(j, "v_max", c.v_max);
  read(j, "omega_max", c.omega_max);
  read(j, "heading_gain", c.heading_gain);
  read(j, "grasp_duration", c.grasp_duration);
  read(j, "gait_step_period", c.gait_step_period);
}

json to_json_controller(const ControllerConfig& c) {
  return json{{"v_max", c.v_max},
              {"omega_max", c.omega_max},
              {"heading_gain", c.heading_gain},
              {"grasp_duration", c.grasp_duration},
              {"gait_step_period", c.gait_step_period}};
}

void from_json_sensors(const json& j, SensorConfig& c) {
  read(j, "ultrasonic_range", c.ultrasonic_range);
  read(j, "ultrasonic_fail", c.ultrasonic_fail);
  read(j, "detection_footprint", c.detection_footprint);
  read(j, "pressure_noise_sd", c.pressure_noise_sd);
  read(j, "tension_landed_max", c.tension_landed_max);
  read(j, "tension_grasped_min", c.tension_grasped_min);
  read(j, "tilt_noise_sd", c.tilt_noise_sd);
  read(j, "pressure_fail", c.pressure_fail);
  read(j, "fallback_verify_delay", c.fallback_verify_delay);
}

json to_json_sensors(const SensorConfig& c) {
  return json{{"ultrasonic_range", c.ultrasonic_range},
              {"ultrasonic_fail", c.ultrasonic_fail},
              {"detection_footprint", c.detection_footprint},
              {"pressure_noise_sd", c.pressure_noise_sd},
              {"tension_landed_max", c.tension_landed_max},
              {"tension_grasped_min", c.tension_grasped_min},
              {"tilt_noise_sd", c.tilt_noise_sd},
              {"pressure_fail", c.pressure_fail},
              {"fallback_verify_delay", c.fallback_verify_delay}};
}

void from_json_world(const json& j, WorldConfig& c) {
  read(j, "obs_rate", c.obs_rate);
  read(j, "obs_noise_d_sd", c.obs_noise_d_sd);
  read(j, "obs_noise_theta_sd", c.obs_noise_theta_sd);
  read(j, "occlusion_radius", c.occlusion_radius);
  read(j, "target_dims", c.target_dims);
  read(j, "target_mass", c.target_mass);
  read(j, "robot_mass", c.robot_mass);
  read(j, "hover_height", c.hover_height);
  read(j, "descent_rate", c.descent_rate);
  read(j, "start_offset", c.start_offset);
  read(j, "grasp_radius", c.grasp_radius);
  read(j, "target_present", c.target_present);
  if (j.contains("deck")) {
    const json& d = j.at("deck");
    read(d, "rate", c.deck.rate);
    read(d, "mag_min", c.deck.mag_min);
    read(d, "mag_max", c.deck.mag_max);
    read(d, "decay", c.deck.decay);
    if (d.contains("schedule")) {
      c.deck.schedule.clear();
      for (const json& item : d.at("schedule")) {
        TiltImpulse imp;
        imp.t = item.at("t").get<double>();
        imp.mag = item.at("mag").get<double>();
        c.deck.schedule.push_back(imp);
      }
    }
  }
}

json to_json_world(const WorldConfig& c) {
  json schedule = json::array();
  for (const TiltImpulse& imp : c.deck.schedule) {
    schedule.push_back(json{{"t", imp.t}, {"mag", imp.mag}});
  }
  return json{{"obs_rate", c.obs_rate},
              {"obs_noise_d_sd", c.obs_noise_d_sd},
              {"obs_noise_theta_sd", c.obs_noise_theta_sd},
              {"occlusion_radius", c.occlusion_radius},
              {"deck", json{{"rate", c.deck.rate},
                            {"mag_min", c.deck.mag_min},
                            {"mag_max", c.deck.mag_max},
                            {"decay", c.deck.decay},
                            {"schedule", schedule}}},
              {"target_dims", c.target_dims},
              {"target_mass", c.target_mass},
              {"robot_mass", c.robot_mass},
              {"hover_height", c.hover_height},
              {"descent_rate", c.descent_rate},
              {"start_offset", c.start_offset},
              {"grasp_radius", c.grasp_radius},
              {"target_present", c.target_present}};
}

}  // namespace

RunConfig default_config() { return RunConfig{}; }

void validate(const RunConfig& cfg) {
  const SelectorConfig& s = cfg.selector;
  check(s.C_a > 0.0, "selector.C_a must be > 0");
  check(s.C_d > 0.0, "selector.C_d must be > 0");
  check(s.T_d > 0.0 && s.T_d < s.D, "selector.T_d must be in (0, D)");
  check(s.D > 0.0, "selector.D must be > 0");
  check(s.tilt_threshold > 0.0, "selector.tilt_threshold must be > 0");
  check(s.stale_cap > 0.0, "selector.stale_cap must be > 0");
  check(s.hysteresis >= 1.0, "selector.hysteresis must be >= 1");
  for (Action a : kSelectableActions) {
    const int i = action_index(a);
    check(s.g[i] > 0.0, std::string("selector.g[") + std::string(action_name(a)) +
                            "] must be > 0");
    for (double w : s.W[i]) {
      check(w >= 0.0 && std::isfinite(w),
            std::string("selector.W[") + std::string(action_name(a)) +
                "] weights must be finite and >= 0");
    }
  }

  const ControllerConfig& c = cfg.controller;
  check(c.v_max > 0.0, "controller.v_max must be > 0");
  check(c.omega_max > 0.0, "controller.omega_max must be > 0");
  check(c.heading_gain > 0.0, "controller.heading_gain must be > 0");
  check(c.grasp_duration > 0.0, "controller.grasp_duration must be > 0");
  check(c.gait_step_period > 0.0, "controller.gait_step_period must be > 0");

  const SensorConfig& n = cfg.sensors;
  check(n.ultrasonic_range > 0.0, "sensors.ultrasonic_range must be > 0");
  check(n.detection_footprint > 0.0, "sensors.detection_footprint must be > 0");
  check(n.pressure_noise_sd >= 0.0, "sensors.pressure_noise_sd must be >= 0");
  check(n.tension_landed_max > 0.0, "sensors.tension_landed_max must be > 0");
  check(n.tension_grasped_min > n.tension_landed_max,
        "sensors.tension_grasped_min must exceed tension_landed_max");
  check(n.tilt_noise_sd >= 0.0, "sensors.tilt_noise_sd must be >= 0");
  check(n.fallback_verify_delay >= 0.0, "sensors.fallback_verify_delay must be >= 0");

  const WorldConfig& w = cfg.world;
  check(w.obs_rate > 0.0, "world.obs_rate must be > 0");
  check(w.obs_noise_d_sd >= 0.0, "world.obs_noise_d_sd must be >= 0");
  check(w.obs_noise_theta_sd >= 0.0, "world.obs_noise_theta_sd must be >= 0");
  check(w.occlusion_radius > 0.0, "world.occlusion_radius must be > 0");
  check(w.deck.rate >= 0.0, "world.deck.rate must be >= 0");
  check(w.deck.mag_min >= 0.0 && w.deck.mag_max >= w.deck.mag_min,
        "world.deck impulse magnitudes must satisfy 0 <= mag_min <= mag_max");
  check(w.deck.decay > 0.0, "world.deck.decay must be > 0");
  for (const TiltImpulse& imp : w.deck.schedule) {
    check(imp.t >= 0.0 && imp.mag >= 0.0,
          "world.deck.schedule entries must have t >= 0 and mag >= 0");
  }
  for (double dim : w.target_dims) {
    check(dim > 0.0, "world.target_dims must be > 0");
  }
  check(w.target_mass > 0.0, "world.target_mass must be > 0");
  check(w.robot_mass > 0.0, "world.robot_mass must be > 0");
  check(w.hover_height > 0.0, "world.hover_height must be > 0");
  check(w.descent_rate > 0.0, "world.descent_rate must be > 0");
  check(w.start_offset > 0.0, "world.start_offset must be > 0");
  check(w.grasp_radius > 0.0, "world.grasp_radius must be > 0");

  check(cfg.dt > 0.0 && cfg.dt <= 0.1, "run.dt must be in (0, 0.1]");
  check(cfg.timeout > 0.0, "run.timeout must be > 0");
  check(cfg.episodes >= 1, "run.episodes must be >= 1");
}

RunConfig config_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  RunConfig cfg;
  try {
    if (j.contains("selector")) from_json_selector(j.at("selector"), cfg.selector);
    if (j.contains("controller")) from_json_controller(j.at("controller"), cfg.controller);
    if (j.contains("sensors")) from_json_sensors(j.at("sensors"), cfg.sensors);
    if (j.contains("world")) from_json_world(j.at("world"), cfg.world);
    if (j.contains("run")) {
      const json& r = j.at("run");
      read(r, "dt", cfg.dt);
      read(r, "timeout", cfg.timeout);
      read(r, "seed", cfg.seed);
      read(r, "episodes", cfg.episodes);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config structure error: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

std::string config_to_json_text(const RunConfig& cfg, int indent) {
  json j{{"selector", to_json_selector(cfg.selector)},
         {"controller", to_json_controller(cfg.controller)},
         {"sensors", to_json_sensors(cfg.sensors)},
         {"world", to_json_world(cfg.world)},
         {"run", json{{"dt", cfg.dt},
                      {"timeout", cfg.timeout},
                      {"seed", cfg.seed},
                      {"episodes", cfg.episodes}}}};
  return j.dump(indent);
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return config_from_json_text(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void apply_terrain_preset(RunConfig& cfg, const std::string& name) {
  if (name == "pontoon") {
    cfg.world.deck.rate = 0.08;
    cfg.world.obs_noise_d_sd = 0.06;
    cfg.world.obs_noise_theta_sd = 0.06;
  } else if (name == "grass") {
    cfg.world.deck.rate = 0.02;
    cfg.world.obs_noise_d_sd = 0.05;
    cfg.world.obs_noise_theta_sd = 0.05;
  } else if (name == "mat") {
    cfg.world.deck.rate = 0.05;
    cfg.world.deck.mag_max = 0.5;
    cfg.world.obs_noise_d_sd = 0.05;
    cfg.world.obs_noise_theta_sd = 0.05;
  } else {
    throw ConfigError("unknown terrain preset: " + name +
                      " (expected pontoon, grass or mat)");
  }
}

}  // namespace hexgrip
