/*
 * Copyright 2026 The locq authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C API of the locq runtime: locality-queue task scheduling simulator with
 * a blocked 3D Jacobi benchmark kernel and a NUMA bandwidth cost model.
 *
 * All objects are opaque handles created and destroyed by this library.
 * Functions report failure through locq_status; locq_last_error() returns a
 * thread-local human-readable detail message for the most recent failure.
 */

#ifndef LOCQ_H
#define LOCQ_H

#include <stdint.h>

#if defined(_WIN32)
#define LOCQ_API __declspec(dllexport)
#else
#define LOCQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum locq_status {
  LOCQ_OK = 0,
  LOCQ_ERR_ARGUMENT = 1, /* null handle or out-of-range argument */
  LOCQ_ERR_CONFIG = 2,   /* configuration rejected; see locq_last_error() */
  LOCQ_ERR_VERIFY = 3,   /* result diverged from the serial reference */
  LOCQ_ERR_INTERNAL = 4
} locq_status;

typedef enum locq_executor {
  LOCQ_EXEC_WS_STATIC = 0,
  LOCQ_EXEC_WS_STATIC1 = 1,
  LOCQ_EXEC_WS_DYNAMIC = 2,
  LOCQ_EXEC_TASKING = 3,
  LOCQ_EXEC_LOCALITY_QUEUES = 4
} locq_executor;

typedef enum locq_init {
  LOCQ_INIT_STATIC = 0,
  LOCQ_INIT_STATIC1 = 1,
  LOCQ_INIT_FORCE_LD0 = 2
} locq_init;

typedef enum locq_order { LOCQ_ORDER_KJI = 0, LOCQ_ORDER_JKI = 1 } locq_order;

/* Per-sweep metrics exposed by a results handle. */
typedef enum locq_metric {
  LOCQ_METRIC_WALL_MS = 0,
  LOCQ_METRIC_MEASURED_MLUPS = 1,
  LOCQ_METRIC_MODEL_MLUPS = 2,
  LOCQ_METRIC_LOCAL_FRACTION = 3,
  LOCQ_METRIC_DOMINANT_DOMAIN_FRACTION = 4,
  LOCQ_METRIC_SEED = 5
} locq_metric;

typedef struct locq_config locq_config;
typedef struct locq_results locq_results;

LOCQ_API const char* locq_version(void);
LOCQ_API const char* locq_status_name(locq_status status);

/* Thread-local message describing the most recent failure in this thread.
 * Never NULL; empty string when nothing failed yet. */
LOCQ_API const char* locq_last_error(void);

/* ---- configuration ---- */

/* Returns a config preloaded with the defaults (24^3 grid, 24x4x4 blocks,
 * 4 domains x 2 threads, static worksharing, 10 timed + 2 warmup sweeps). */
LOCQ_API locq_config* locq_config_create(void);
LOCQ_API void locq_config_destroy(locq_config* config);

LOCQ_API locq_status locq_config_set_grid(locq_config* config, uint32_t nx, uint32_t ny,
                                          uint32_t nz);
LOCQ_API locq_status locq_config_set_block(locq_config* config, uint32_t di, uint32_t dj,
                                           uint32_t dk);
LOCQ_API locq_status locq_config_set_topology(locq_config* config, uint32_t domains,
                                              uint32_t threads_per_domain);
LOCQ_API locq_status locq_config_set_executor(locq_config* config, locq_executor executor);
LOCQ_API locq_status locq_config_set_init(locq_config* config, locq_init init);
LOCQ_API locq_status locq_config_set_order(locq_config* config, locq_order order);
/* throttle = 0 disables the task-pool limit. */
LOCQ_API locq_status locq_config_set_throttle(locq_config* config, uint64_t throttle);
LOCQ_API locq_status locq_config_set_dynamic_chunk(locq_config* config, uint32_t chunk);
LOCQ_API locq_status locq_config_set_coefficients(locq_config* config, double c1, double c2);
LOCQ_API locq_status locq_config_set_sweeps(locq_config* config, uint32_t timed,
                                            uint32_t warmup);
LOCQ_API locq_status locq_config_set_seed(locq_config* config, uint64_t seed);
LOCQ_API locq_status locq_config_set_verify(locq_config* config, int enabled);
LOCQ_API locq_status locq_config_set_jitter(locq_config* config, int enabled);
LOCQ_API locq_status locq_config_set_model(locq_config* config, double domain_bandwidth,
                                           double link_bandwidth, double remote_penalty,
                                           uint32_t threads_to_saturate);
/* Switch the cost model to the parameter set calibrated against the
 * reference ccNUMA machine's task-scheduling measurements. */
LOCQ_API locq_status locq_config_use_calibrated_model(locq_config* config);

/* ---- execution ---- */

/* Runs warmup + timed sweeps. On success *out_results owns the records.
 * LOCQ_ERR_CONFIG: invalid configuration (field named in locq_last_error).
 * LOCQ_ERR_VERIFY: verification enabled and the parallel field diverged;
 * locq_last_error() names the first differing site. */
LOCQ_API locq_status locq_run(const locq_config* config, locq_results** out_results);

LOCQ_API void locq_results_destroy(locq_results* results);

/* Number of timed sweeps recorded. */
LOCQ_API uint32_t locq_results_sweep_count(const locq_results* results);

LOCQ_API locq_status locq_results_value(const locq_results* results, uint32_t sweep,
                                        locq_metric metric, double* out_value);
LOCQ_API locq_status locq_results_mean(const locq_results* results, locq_metric metric,
                                       double* out_value);
/* Sample standard deviation across timed sweeps. */
LOCQ_API locq_status locq_results_stddev(const locq_results* results, locq_metric metric,
                                         double* out_value);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LOCQ_H */
