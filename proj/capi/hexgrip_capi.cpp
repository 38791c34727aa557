#include "hexgrip.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

#include "hexgrip/config.hpp"
#include "hexgrip/mission.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hexgrip_status set_error(hexgrip_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

// Uniform exception-to-status funnel for every entry point.
template <typename Fn>
hexgrip_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return HEXGRIP_OK;
  } catch (const hexgrip::ConfigError& e) {
    return set_error(HEXGRIP_ERR_CONFIG, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(HEXGRIP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::logic_error& e) {
    return set_error(HEXGRIP_ERR_STATE, e.what());
  } catch (const std::runtime_error& e) {
    return set_error(HEXGRIP_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(HEXGRIP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(HEXGRIP_ERR_INTERNAL, e.what());
  }
}

hexgrip::RunConfig parse_config(const char* config_json) {
  if (config_json == nullptr || *config_json == '\0') {
    return hexgrip::default_config();
  }
  return hexgrip::config_from_json_text(config_json);
}

}  // namespace

struct hexgrip_episode {
  hexgrip::EpisodeLog log;
};

extern "C" {

const char* hexgrip_version(void) { return "0.1.0"; }

const char* hexgrip_last_error(void) { return g_last_error.c_str(); }

void hexgrip_string_free(char* s) { std::free(s); }

void hexgrip_episode_free(hexgrip_episode* ep) { delete ep; }

hexgrip_status hexgrip_default_config(char** json_out) {
  if (!json_out) return set_error(HEXGRIP_ERR_INVALID_ARGUMENT, "json_out is NULL");
  return guarded([&] {
    *json_out = dup_string(hexgrip::config_to_json_text(hexgrip::default_config()));
    if (!*json_out) throw std::bad_alloc();
  });
}

hexgrip_status hexgrip_config_validate(const char* config_json) {
  return guarded([&] { parse_config(config_json); });
}

hexgrip_status hexgrip_episode_run(const char* config_json, uint64_t seed,
                                   hexgrip_episode** out) {
  if (!out) return set_error(HEXGRIP_ERR_INVALID_ARGUMENT, "out is NULL");
  *out = nullptr;
  return guarded([&] {
    hexgrip::RunConfig cfg = parse_config(config_json);
    auto ep = std::make_unique<hexgrip_episode>();
    ep->log = hexgrip::run_episode(cfg, seed);
    *out = ep.release();
  });
}

hexgrip_status hexgrip_episode_from_json(const char* log_json,
                                         hexgrip_episode** out) {
  if (!out) return set_error(HEXGRIP_ERR_INVALID_ARGUMENT, "out is NULL");
  *out = nullptr;
  if (!log_json) return set_error(HEXGRIP_ERR_INVALID_ARGUMENT, "log_json is NULL");
  return guarded([&] {
    auto ep = std::make_unique<hexgrip_episode>();
    ep->log = hexgrip::episode_from_json_text(log_json);
    *out = ep.release();
  });
}

hexgrip_status hexgrip_episode_to_json(const hexgrip_episode* ep, char** json_out) {
  if (!ep || !json_out) {
    return set_error(HEXGRIP_ERR_INVALID_ARGUMENT, "episode/json_out is NULL");
  }
  return guarded([&] {
    *json_out = dup_string(hexgrip::episode_to_json_text(ep->log));
    if (!*json_out) throw std::bad_alloc();
  });
}

hexgrip_status hexgrip_episode_summary_json(const hexgrip_episode* ep,
                                            char** json_out) {
  if (!ep || !json_out) {
    return set_error(HEXGRIP_ERR_INVALID_ARGUMENT, "episode/json_out is NULL");
  }
  return guarded([&] {
    *json_out = dup_string(hexgrip::episode_summary_json_text(ep->log));
    if (!*json_out) throw std::bad_alloc();
  });
}

hexgrip_status hexgrip_episode_write_timeline_csv(const hexgrip_episode* ep,
                                                  const char* path) {
  if (!ep || !path) return set_error(HEXGRIP_ERR_INVALID_ARGUMENT, "episode/path is NULL");
  return guarded([&] { hexgrip::write_timeline_csv(ep->log, path); });
}

hexgrip_status hexgrip_episode_write_trajectory_csv(const hexgrip_episode* ep,
                                                    const char* path) {
  if (!ep || !path) return set_error(HEXGRIP_ERR_INVALID_ARGUMENT, "episode/path is NULL");
  return guarded([&] { hexgrip::write_trajectory_csv(ep->log, path); });
}

hexgrip_outcome hexgrip_episode_outcome(const hexgrip_episode* ep) {
  switch (ep->log.outcome) {
    case hexgrip::Outcome::Success: return HEXGRIP_OUTCOME_SUCCESS;
    case hexgrip::Outcome::Timeout: return HEXGRIP_OUTCOME_TIMEOUT;
    case hexgrip::Outcome::Failure: return HEXGRIP_OUTCOME_FAILURE;
  }
  return HEXGRIP_OUTCOME_FAILURE;
}

double hexgrip_episode_ground_duration(const hexgrip_episode* ep) {
  return ep->log.duration_ground;
}

int hexgrip_episode_retries(const hexgrip_episode* ep) { return ep->log.retries; }

size_t hexgrip_episode_tick_count(const hexgrip_episode* ep) {
  return ep->log.ticks.size();
}

hexgrip_status hexgrip_batch_run(const char* config_json, uint64_t base_seed,
                                 int episodes, char** summary_json_out) {
  if (!summary_json_out) {
    return set_error(HEXGRIP_ERR_INVALID_ARGUMENT, "summary_json_out is NULL");
  }
  if (episodes < 1) {
    return set_error(HEXGRIP_ERR_INVALID_ARGUMENT, "episodes must be >= 1");
  }
  return guarded([&] {
    hexgrip::RunConfig cfg = parse_config(config_json);
    hexgrip::BatchSummary s = hexgrip::run_batch(cfg, base_seed, episodes);
    *summary_json_out = dup_string(hexgrip::batch_summary_json_text(s));
    if (!*summary_json_out) throw std::bad_alloc();
  });
}

}  // extern "C"
