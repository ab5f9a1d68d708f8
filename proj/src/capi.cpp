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

#include "locq.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <string>

#include "locq/bench.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

locq_status fail(locq_status status, const std::string& message) {
  set_error(message);
  return status;
}

double metric_of(const locq::SweepRecord& r, locq_metric metric) {
  switch (metric) {
    case LOCQ_METRIC_WALL_MS: return r.wall_ms;
    case LOCQ_METRIC_MEASURED_MLUPS: return r.measured_mlups;
    case LOCQ_METRIC_MODEL_MLUPS: return r.model_mlups;
    case LOCQ_METRIC_LOCAL_FRACTION: return r.local_fraction;
    case LOCQ_METRIC_DOMINANT_DOMAIN_FRACTION: return r.dominant_domain_fraction;
    case LOCQ_METRIC_SEED: return static_cast<double>(r.seed);
  }
  return std::nan("");
}

double locq::SweepRecord::* metric_field(locq_metric metric) {
  switch (metric) {
    case LOCQ_METRIC_WALL_MS: return &locq::SweepRecord::wall_ms;
    case LOCQ_METRIC_MEASURED_MLUPS: return &locq::SweepRecord::measured_mlups;
    case LOCQ_METRIC_MODEL_MLUPS: return &locq::SweepRecord::model_mlups;
    case LOCQ_METRIC_LOCAL_FRACTION: return &locq::SweepRecord::local_fraction;
    case LOCQ_METRIC_DOMINANT_DOMAIN_FRACTION:
      return &locq::SweepRecord::dominant_domain_fraction;
    default: return nullptr;
  }
}

}  // namespace

struct locq_config {
  locq::RunConfig cfg;
};

struct locq_results {
  locq::RunResult result;
};

extern "C" {

const char* locq_version(void) { return "1.0.0"; }

const char* locq_status_name(locq_status status) {
  switch (status) {
    case LOCQ_OK: return "ok";
    case LOCQ_ERR_ARGUMENT: return "invalid argument";
    case LOCQ_ERR_CONFIG: return "invalid configuration";
    case LOCQ_ERR_VERIFY: return "verification failed";
    case LOCQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* locq_last_error(void) { return g_last_error.c_str(); }

locq_config* locq_config_create(void) {
  return new (std::nothrow) locq_config{};
}

void locq_config_destroy(locq_config* config) { delete config; }

#define LOCQ_REQUIRE(cond, message) \
  do {                              \
    if (!(cond)) return fail(LOCQ_ERR_ARGUMENT, message); \
  } while (0)

locq_status locq_config_set_grid(locq_config* config, uint32_t nx, uint32_t ny, uint32_t nz) {
  LOCQ_REQUIRE(config != nullptr, "config is null");
  config->cfg.nx = nx;
  config->cfg.ny = ny;
  config->cfg.nz = nz;
  return LOCQ_OK;
}

locq_status locq_config_set_block(locq_config* config, uint32_t di, uint32_t dj, uint32_t dk) {
  LOCQ_REQUIRE(config != nullptr, "config is null");
  config->cfg.block = locq::BlockSpec{di, dj, dk};
  return LOCQ_OK;
}

locq_status locq_config_set_topology(locq_config* config, uint32_t domains,
                                     uint32_t threads_per_domain) {
  LOCQ_REQUIRE(config != nullptr, "config is null");
  config->cfg.num_domains = domains;
  config->cfg.threads_per_domain = threads_per_domain;
  return LOCQ_OK;
}

locq_status locq_config_set_executor(locq_config* config, locq_executor executor) {
  LOCQ_REQUIRE(config != nullptr, "config is null");
  switch (executor) {
    case LOCQ_EXEC_WS_STATIC: config->cfg.executor = locq::Executor::WorkshareStatic; break;
    case LOCQ_EXEC_WS_STATIC1:
      config->cfg.executor = locq::Executor::WorkshareStaticChunk1;
      break;
    case LOCQ_EXEC_WS_DYNAMIC: config->cfg.executor = locq::Executor::WorkshareDynamic; break;
    case LOCQ_EXEC_TASKING: config->cfg.executor = locq::Executor::Tasking; break;
    case LOCQ_EXEC_LOCALITY_QUEUES:
      config->cfg.executor = locq::Executor::LocalityQueues;
      break;
    default: return fail(LOCQ_ERR_ARGUMENT, "unknown executor");
  }
  return LOCQ_OK;
}

locq_status locq_config_set_init(locq_config* config, locq_init init) {
  LOCQ_REQUIRE(config != nullptr, "config is null");
  switch (init) {
    case LOCQ_INIT_STATIC: config->cfg.init = locq::InitSchedule::Static; break;
    case LOCQ_INIT_STATIC1: config->cfg.init = locq::InitSchedule::StaticChunk1; break;
    case LOCQ_INIT_FORCE_LD0: config->cfg.init = locq::InitSchedule::ForceLD0; break;
    default: return fail(LOCQ_ERR_ARGUMENT, "unknown init schedule");
  }
  return LOCQ_OK;
}

locq_status locq_config_set_order(locq_config* config, locq_order order) {
  LOCQ_REQUIRE(config != nullptr, "config is null");
  switch (order) {
    case LOCQ_ORDER_KJI: config->cfg.order = locq::SubmitOrder::KJI; break;
    case LOCQ_ORDER_JKI: config->cfg.order = locq::SubmitOrder::JKI; break;
    default: return fail(LOCQ_ERR_ARGUMENT, "unknown submit order");
  }
  return LOCQ_OK;
}

locq_status locq_config_set_throttle(locq_config* config, uint64_t throttle) {
  LOCQ_REQUIRE(config != nullptr, "config is null");
  config->cfg.throttle = throttle;
  return LOCQ_OK;
}

locq_status locq_config_set_dynamic_chunk(locq_config* config, uint32_t chunk) {
  LOCQ_REQUIRE(config != nullptr, "config is null");
  config->cfg.dynamic_chunk = chunk;
  return LOCQ_OK;
}

locq_status locq_config_set_coefficients(locq_config* config, double c1, double c2) {
  LOCQ_REQUIRE(config != nullptr, "config is null");
  config->cfg.coeff = locq::Coefficients{c1, c2};
  return LOCQ_OK;
}

locq_status locq_config_set_sweeps(locq_config* config, uint32_t timed, uint32_t warmup) {
  LOCQ_REQUIRE(config != nullptr, "config is null");
  config->cfg.sweeps = timed;
  config->cfg.warmup = warmup;
  return LOCQ_OK;
}

locq_status locq_config_set_seed(locq_config* config, uint64_t seed) {
  LOCQ_REQUIRE(config != nullptr, "config is null");
  config->cfg.seed = seed;
  return LOCQ_OK;
}

locq_status locq_config_set_verify(locq_config* config, int enabled) {
  LOCQ_REQUIRE(config != nullptr, "config is null");
  config->cfg.verify = enabled != 0;
  return LOCQ_OK;
}

locq_status locq_config_set_jitter(locq_config* config, int enabled) {
  LOCQ_REQUIRE(config != nullptr, "config is null");
  config->cfg.jitter = enabled != 0;
  return LOCQ_OK;
}

locq_status locq_config_set_model(locq_config* config, double domain_bandwidth,
                                  double link_bandwidth, double remote_penalty,
                                  uint32_t threads_to_saturate) {
  LOCQ_REQUIRE(config != nullptr, "config is null");
  config->cfg.model.domain_bandwidth = domain_bandwidth;
  config->cfg.model.link_bandwidth = link_bandwidth;
  config->cfg.model.remote_penalty = remote_penalty;
  config->cfg.model.threads_to_saturate = threads_to_saturate;
  return LOCQ_OK;
}

locq_status locq_config_use_calibrated_model(locq_config* config) {
  LOCQ_REQUIRE(config != nullptr, "config is null");
  config->cfg.model = locq::NumaParams::calibrated();
  return LOCQ_OK;
}

locq_status locq_run(const locq_config* config, locq_results** out_results) {
  LOCQ_REQUIRE(config != nullptr, "config is null");
  LOCQ_REQUIRE(out_results != nullptr, "out_results is null");
  *out_results = nullptr;
  try {
    locq::RunResult result = locq::run(config->cfg);
    *out_results = new locq_results{std::move(result)};
    return LOCQ_OK;
  } catch (const locq::ConfigError& e) {
    return fail(LOCQ_ERR_CONFIG, e.what());
  } catch (const locq::VerifyError& e) {
    return fail(LOCQ_ERR_VERIFY, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(LOCQ_ERR_CONFIG, e.what());
  } catch (const std::exception& e) {
    return fail(LOCQ_ERR_INTERNAL, e.what());
  }
}

void locq_results_destroy(locq_results* results) { delete results; }

uint32_t locq_results_sweep_count(const locq_results* results) {
  return results == nullptr ? 0 : static_cast<uint32_t>(results->result.records.size());
}

locq_status locq_results_value(const locq_results* results, uint32_t sweep,
                               locq_metric metric, double* out_value) {
  LOCQ_REQUIRE(results != nullptr, "results is null");
  LOCQ_REQUIRE(out_value != nullptr, "out_value is null");
  LOCQ_REQUIRE(sweep < results->result.records.size(), "sweep index out of range");
  LOCQ_REQUIRE(metric >= LOCQ_METRIC_WALL_MS && metric <= LOCQ_METRIC_SEED, "unknown metric");
  *out_value = metric_of(results->result.records[sweep], metric);
  return LOCQ_OK;
}

locq_status locq_results_mean(const locq_results* results, locq_metric metric,
                              double* out_value) {
  LOCQ_REQUIRE(results != nullptr, "results is null");
  LOCQ_REQUIRE(out_value != nullptr, "out_value is null");
  if (metric == LOCQ_METRIC_SEED) {
    *out_value = static_cast<double>(results->result.config.seed);
    return LOCQ_OK;
  }
  double locq::SweepRecord::* field = metric_field(metric);
  LOCQ_REQUIRE(field != nullptr, "unknown metric");
  *out_value = results->result.summarize(field).mean;
  return LOCQ_OK;
}

locq_status locq_results_stddev(const locq_results* results, locq_metric metric,
                                double* out_value) {
  LOCQ_REQUIRE(results != nullptr, "results is null");
  LOCQ_REQUIRE(out_value != nullptr, "out_value is null");
  if (metric == LOCQ_METRIC_SEED) {
    *out_value = 0.0;
    return LOCQ_OK;
  }
  double locq::SweepRecord::* field = metric_field(metric);
  LOCQ_REQUIRE(field != nullptr, "unknown metric");
  *out_value = results->result.summarize(field).stddev;
  return LOCQ_OK;
}

} /* extern "C" */
