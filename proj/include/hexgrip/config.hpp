#pragma once

#include <stdexcept>
#include <string>

#include "hexgrip/controller.hpp"
#include "hexgrip/selector.hpp"
#include "hexgrip/sensors.hpp"
#include "hexgrip/world.hpp"

namespace hexgrip {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything one episode needs, loadable from a single JSON document with
// keys selector / controller / sensors / world / run.
struct RunConfig {
  SelectorConfig selector;
  ControllerConfig controller;
  SensorConfig sensors;
  WorldConfig world;
  double dt = 0.05;      // s, simulation tick
  double timeout = 60.0;  // s, episode cap
  std::uint64_t seed = 1;
  int episodes = 1;
};

RunConfig default_config();

// Throws ConfigError with a field-specific message on any violated bound
// (non-positive gains, T_d >= D, inverted tension bands, dt outside (0, 0.1], ...).
void validate(const RunConfig& cfg);

// JSON round-trip. Parsing accepts partial documents (missing keys keep
// defaults), rejects unknown action names in g/W, and validates the result.
RunConfig config_from_json_text(const std::string& text);
std::string config_to_json_text(const RunConfig& cfg, int indent = 2);

// Reads, parses and validates; IO failures and parse errors raise ConfigError
// with the path in the message.
RunConfig load_config_file(const std::string& path);

// Named terrain presets ("pontoon", "grass", "mat") tweaking disturbance rate
// and observation noise. Unknown names raise ConfigError.
void apply_terrain_preset(RunConfig& cfg, const std::string& name);

}  // namespace hexgrip
