/* C API for the hexgrip mission simulator.
 *
 * Conventions: every fallible call returns hexgrip_status; HEXGRIP_OK means
 * success and anything else leaves a human-readable message retrievable via
 * hexgrip_last_error() (thread-local). Strings handed out by the library are
 * heap-allocated and must be released with hexgrip_string_free(); episode
 * handles with hexgrip_episode_free().
 */
#ifndef HEXGRIP_H
#define HEXGRIP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hexgrip_status {
  HEXGRIP_OK = 0,
  HEXGRIP_ERR_INVALID_ARGUMENT = 1,
  HEXGRIP_ERR_CONFIG = 2,
  HEXGRIP_ERR_IO = 3,
  HEXGRIP_ERR_STATE = 4,
  HEXGRIP_ERR_INTERNAL = 5,
} hexgrip_status;

typedef enum hexgrip_outcome {
  HEXGRIP_OUTCOME_SUCCESS = 0,
  HEXGRIP_OUTCOME_TIMEOUT = 1,
  HEXGRIP_OUTCOME_FAILURE = 2,
} hexgrip_outcome;

/* Opaque handle over one completed episode and its full tick log. */
typedef struct hexgrip_episode hexgrip_episode;

const char* hexgrip_version(void);

/* Most recent error message on this thread, or "" if none. Owned by the
 * library; do not free. */
const char* hexgrip_last_error(void);

void hexgrip_string_free(char* s);
void hexgrip_episode_free(hexgrip_episode* ep);

/* Built-in defaults as a JSON document (the same document `hexgrip
 * dump-defaults` prints). */
hexgrip_status hexgrip_default_config(char** json_out);

/* Parse + validate a config document without running anything. */
hexgrip_status hexgrip_config_validate(const char* config_json);

/* Run one episode under the given config (NULL or "" = defaults). */
hexgrip_status hexgrip_episode_run(const char* config_json, uint64_t seed,
                                   hexgrip_episode** out);

/* Rehydrate an episode from its JSON log (as written by
 * hexgrip_episode_to_json). */
hexgrip_status hexgrip_episode_from_json(const char* log_json,
                                         hexgrip_episode** out);

hexgrip_status hexgrip_episode_to_json(const hexgrip_episode* ep, char** json_out);
hexgrip_status hexgrip_episode_summary_json(const hexgrip_episode* ep,
                                            char** json_out);

hexgrip_status hexgrip_episode_write_timeline_csv(const hexgrip_episode* ep,
                                                  const char* path);
hexgrip_status hexgrip_episode_write_trajectory_csv(const hexgrip_episode* ep,
                                                    const char* path);

/* Scalar accessors; safe on any valid handle. */
hexgrip_outcome hexgrip_episode_outcome(const hexgrip_episode* ep);
double hexgrip_episode_ground_duration(const hexgrip_episode* ep);
int hexgrip_episode_retries(const hexgrip_episode* ep);
size_t hexgrip_episode_tick_count(const hexgrip_episode* ep);

/* Run `episodes` episodes at seeds base_seed, base_seed+1, ... and return the
 * aggregate summary as JSON. */
hexgrip_status hexgrip_batch_run(const char* config_json, uint64_t base_seed,
                                 int episodes, char** summary_json_out);

#ifdef __cplusplus
}
#endif

#endif /* HEXGRIP_H */
