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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "locq/costmodel.hpp"
#include "locq/grid.hpp"
#include "locq/placement.hpp"
#include "locq/stencil.hpp"
#include "locq/taskpool.hpp"

namespace locq {

enum class Executor {
  WorkshareStatic,
  WorkshareStaticChunk1,
  WorkshareDynamic,
  Tasking,
  LocalityQueues,
};

/// Everything one benchmark run needs. Validation happens in run().
struct RunConfig {
  std::uint32_t nx = 24, ny = 24, nz = 24;
  BlockSpec block{24, 4, 4};
  std::uint32_t num_domains = 4;
  std::uint32_t threads_per_domain = 2;
  InitSchedule init = InitSchedule::Static;
  Executor executor = Executor::WorkshareStatic;
  SubmitOrder order = SubmitOrder::KJI;
  std::uint64_t throttle = 257;  ///< 0 = unbounded
  std::uint32_t dynamic_chunk = 1;
  Coefficients coeff{0.25, 0.125};
  std::uint32_t sweeps = 10;
  std::uint32_t warmup = 2;
  std::uint64_t seed = 0;
  bool verify = false;
  bool jitter = false;
  NumaParams model;
};

/// Per-timed-sweep measurements and model outputs.
struct SweepRecord {
  std::uint32_t sweep = 0;
  double wall_ms = 0.0;
  double measured_mlups = 0.0;
  double model_mlups = 0.0;
  double local_fraction = 0.0;
  double dominant_domain_fraction = 0.0;  ///< NaN for queueless executors
  std::uint64_t seed = 0;
};

struct Summary {
  double mean = 0.0;
  double stddev = 0.0;  ///< sample standard deviation
};

struct RunResult {
  RunConfig config;
  std::vector<SweepRecord> records;

  Summary summarize(double SweepRecord::* field) const;
};

/// Invalid configuration; what() names the offending field.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parallel result diverged from the serial reference.
class VerifyError : public std::runtime_error {
 public:
  VerifyError(std::uint32_t i, std::uint32_t j, std::uint32_t k);
  std::uint32_t i, j, k;  ///< first differing site
};

/// Execute warmup + timed sweeps per the config; when config.verify is set,
/// replay the same sweeps through the serial reference and compare the
/// fields bit for bit.
RunResult run(const RunConfig& config);

std::string executor_name(Executor e);
std::string init_name(InitSchedule s);
std::string order_name(SubmitOrder o);

/// Stable CSV schema:
/// config_id,executor,init,order,throttle,domains,tpd,grid,block,sweep,
/// wall_ms,measured_mlups,model_mlups,local_fraction,
/// dominant_domain_fraction,seed
/// One row per timed sweep (unless suppressed) plus mean and stddev summary
/// rows per configuration.
void write_csv(std::ostream& out, std::span<const RunResult> results,
               bool per_sweep_rows = true);

/// Plain-text summary, one line per configuration.
std::string human_table(std::span<const RunResult> results);

}  // namespace locq
