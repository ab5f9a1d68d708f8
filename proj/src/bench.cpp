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

#include "locq/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include "locq/locality_queues.hpp"
#include "locq/scheduler.hpp"
#include "locq/trace_analyzer.hpp"

namespace locq {

VerifyError::VerifyError(std::uint32_t i_, std::uint32_t j_, std::uint32_t k_)
    : std::runtime_error("verification failed: first differing site (" + std::to_string(i_) +
                         "," + std::to_string(j_) + "," + std::to_string(k_) + ")"),
      i(i_),
      j(j_),
      k(k_) {}

Summary RunResult::summarize(double SweepRecord::* field) const {
  Summary s;
  if (records.empty()) return s;
  double sum = 0.0;
  for (const SweepRecord& r : records) sum += r.*field;
  s.mean = sum / static_cast<double>(records.size());
  if (records.size() > 1) {
    double sq = 0.0;
    for (const SweepRecord& r : records) {
      const double d = r.*field - s.mean;
      sq += d * d;
    }
    s.stddev = std::sqrt(sq / static_cast<double>(records.size() - 1));
  }
  return s;
}

std::string executor_name(Executor e) {
  switch (e) {
    case Executor::WorkshareStatic: return "static";
    case Executor::WorkshareStaticChunk1: return "static1";
    case Executor::WorkshareDynamic: return "dynamic";
    case Executor::Tasking: return "tasking";
    case Executor::LocalityQueues: return "locality-queues";
  }
  return "?";
}

std::string init_name(InitSchedule s) {
  switch (s) {
    case InitSchedule::Static: return "static";
    case InitSchedule::StaticChunk1: return "static1";
    case InitSchedule::ForceLD0: return "force-ld0";
  }
  return "?";
}

std::string order_name(SubmitOrder o) {
  return o == SubmitOrder::KJI ? "kji" : "jki";
}

namespace {

void validate(const RunConfig& cfg) {
  if (cfg.nx == 0 || cfg.ny == 0 || cfg.nz == 0) {
    throw ConfigError("grid: extents must be positive");
  }
  if (cfg.block.di == 0 || cfg.nx % cfg.block.di != 0) {
    throw ConfigError("block: di must divide nx");
  }
  if (cfg.block.dj == 0 || cfg.ny % cfg.block.dj != 0) {
    throw ConfigError("block: dj must divide ny");
  }
  if (cfg.block.dk == 0 || cfg.nz % cfg.block.dk != 0) {
    throw ConfigError("block: dk must divide nz");
  }
  if (cfg.num_domains == 0) throw ConfigError("domains: must be positive");
  if (cfg.threads_per_domain == 0) throw ConfigError("tpd: must be positive");
  if (cfg.dynamic_chunk == 0) throw ConfigError("chunk: must be positive");
  if (cfg.sweeps == 0) throw ConfigError("sweeps: must be positive");
  if (!std::isfinite(cfg.coeff.c1) || !std::isfinite(cfg.coeff.c2)) {
    throw ConfigError("coefficients: must be finite");
  }
  if (cfg.model.domain_bandwidth <= 0 || cfg.model.link_bandwidth <= 0) {
    throw ConfigError("model: bandwidths must be positive");
  }
  if (cfg.model.remote_penalty < 1.0) {
    throw ConfigError("model: remote_penalty must be >= 1");
  }
  if (cfg.model.threads_to_saturate == 0) {
    throw ConfigError("model: threads_to_saturate must be positive");
  }
}

ScheduleTrace dispatch(const RunConfig& cfg, Grid3D& grid, const Topology& topo,
                       const PlacementMap& placement, const ExecOptions& options) {
  TaskPoolConfig pool;
  pool.throttle = cfg.throttle == 0 ? TaskPoolConfig::kUnbounded : cfg.throttle;
  pool.submit_order = cfg.order;
  switch (cfg.executor) {
    case Executor::WorkshareStatic:
      return run_sweep_worksharing(grid, cfg.block, cfg.coeff, topo, placement,
                                   WorkshareSchedule::Static, 1, options);
    case Executor::WorkshareStaticChunk1:
      return run_sweep_worksharing(grid, cfg.block, cfg.coeff, topo, placement,
                                   WorkshareSchedule::StaticChunk1, 1, options);
    case Executor::WorkshareDynamic:
      return run_sweep_worksharing(grid, cfg.block, cfg.coeff, topo, placement,
                                   WorkshareSchedule::Dynamic, cfg.dynamic_chunk, options);
    case Executor::Tasking:
      return run_sweep_tasking(grid, cfg.block, cfg.coeff, topo, placement, pool, options);
    case Executor::LocalityQueues:
      return run_sweep_locality_queues(grid, cfg.block, cfg.coeff, topo, placement, pool,
                                       options);
  }
  throw ConfigError("executor: unknown value");
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  validate(cfg);

  const Topology topo(cfg.num_domains, cfg.threads_per_domain);
  const Decomposition dec(cfg.nx, cfg.ny, cfg.nz, cfg.block);
  const PlacementMap placement = first_touch(dec.blocks(), topo, cfg.init);

  Grid3D grid(cfg.nx, cfg.ny, cfg.nz);
  grid.fill_random(cfg.seed);
  Grid3D reference = cfg.verify ? grid : Grid3D(1, 1, 1);

  RunResult result;
  result.config = cfg;
  result.records.reserve(cfg.sweeps);

  const std::uint64_t interior = grid.num_interior_sites();
  const std::uint32_t total_sweeps = cfg.warmup + cfg.sweeps;
  for (std::uint32_t s = 0; s < total_sweeps; ++s) {
    ExecOptions options;
    options.seed = cfg.seed + s;
    options.jitter = cfg.jitter;

    const auto t0 = std::chrono::steady_clock::now();
    ScheduleTrace trace = dispatch(cfg, grid, topo, placement, options);
    const auto t1 = std::chrono::steady_clock::now();

    if (s < cfg.warmup) continue;

    const double wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const LocalityStats stats = analyze(trace, topo, placement);
    const ModelReport model = predict(trace, dec, topo, cfg.model);

    SweepRecord record;
    record.sweep = s - cfg.warmup;
    record.wall_ms = wall_ms;
    record.measured_mlups =
        wall_ms > 0.0 ? static_cast<double>(interior) / (wall_ms * 1e3) : 0.0;
    record.model_mlups = model.mlups;
    record.local_fraction = stats.local_fraction;
    record.dominant_domain_fraction =
        trace.queue_events.empty() ? std::numeric_limits<double>::quiet_NaN()
                                   : stats.mean_dominant_domain_fraction;
    record.seed = options.seed;
    result.records.push_back(record);
  }

  if (cfg.verify) {
    for (std::uint32_t s = 0; s < total_sweeps; ++s) serial_sweep(reference, cfg.coeff);
    const std::span<const double> expected = reference.front();
    const std::span<const double> actual = grid.front();
    for (std::uint32_t k = 0; k < cfg.nz; ++k) {
      for (std::uint32_t j = 0; j < cfg.ny; ++j) {
        for (std::uint32_t i = 0; i < cfg.nx; ++i) {
          const std::size_t n = grid.index(i, j, k);
          if (actual[n] != expected[n]) throw VerifyError(i, j, k);
        }
      }
    }
  }
  return result;
}

namespace {

std::string grid_string(const RunConfig& cfg) {
  return std::to_string(cfg.nx) + "x" + std::to_string(cfg.ny) + "x" + std::to_string(cfg.nz);
}

std::string block_string(const RunConfig& cfg) {
  return std::to_string(cfg.block.di) + "x" + std::to_string(cfg.block.dj) + "x" +
         std::to_string(cfg.block.dk);
}

bool has_pool(const RunConfig& cfg) {
  return cfg.executor == Executor::Tasking || cfg.executor == Executor::LocalityQueues;
}

void csv_prefix(std::ostream& out, std::size_t id, const RunConfig& cfg) {
  out << id << ',' << executor_name(cfg.executor) << ',' << init_name(cfg.init) << ',';
  if (has_pool(cfg)) {
    out << order_name(cfg.order) << ',';
    if (cfg.throttle == 0) {
      out << "unbounded,";
    } else {
      out << cfg.throttle << ',';
    }
  } else {
    out << "-,-,";
  }
  out << cfg.num_domains << ',' << cfg.threads_per_domain << ',' << grid_string(cfg) << ','
      << block_string(cfg) << ',';
}

}  // namespace

void write_csv(std::ostream& out, std::span<const RunResult> results, bool per_sweep_rows) {
  out << "config_id,executor,init,order,throttle,domains,tpd,grid,block,sweep,wall_ms,"
         "measured_mlups,model_mlups,local_fraction,dominant_domain_fraction,seed\n";
  for (std::size_t id = 0; id < results.size(); ++id) {
    const RunResult& result = results[id];
    if (per_sweep_rows) {
      for (const SweepRecord& r : result.records) {
        csv_prefix(out, id, result.config);
        out << r.sweep << ',' << r.wall_ms << ',' << r.measured_mlups << ',' << r.model_mlups
            << ',' << r.local_fraction << ',' << r.dominant_domain_fraction << ',' << r.seed
            << '\n';
      }
    }
    const Summary wall = result.summarize(&SweepRecord::wall_ms);
    const Summary measured = result.summarize(&SweepRecord::measured_mlups);
    const Summary model = result.summarize(&SweepRecord::model_mlups);
    const Summary local = result.summarize(&SweepRecord::local_fraction);
    const Summary dominant = result.summarize(&SweepRecord::dominant_domain_fraction);
    csv_prefix(out, id, result.config);
    out << "mean," << wall.mean << ',' << measured.mean << ',' << model.mean << ','
        << local.mean << ',' << dominant.mean << ',' << result.config.seed << '\n';
    csv_prefix(out, id, result.config);
    out << "stddev," << wall.stddev << ',' << measured.stddev << ',' << model.stddev << ','
        << local.stddev << ',' << dominant.stddev << ',' << result.config.seed << '\n';
  }
}

std::string human_table(std::span<const RunResult> results) {
  std::ostringstream out;
  out << "executor          init       order  throttle   measured MLUP/s     model MLUP/s   "
         "local\n";
  for (const RunResult& result : results) {
    const RunConfig& cfg = result.config;
    const Summary measured = result.summarize(&SweepRecord::measured_mlups);
    const Summary model = result.summarize(&SweepRecord::model_mlups);
    const Summary local = result.summarize(&SweepRecord::local_fraction);
    const std::string order = has_pool(cfg) ? order_name(cfg.order) : "-";
    const std::string throttle =
        !has_pool(cfg) ? "-" : (cfg.throttle == 0 ? "unbounded" : std::to_string(cfg.throttle));
    char line[256];
    std::snprintf(line, sizeof(line), "%-17s %-10s %-6s %-9s %8.1f+-%-7.1f %8.1f+-%-7.1f %6.3f\n",
                  executor_name(cfg.executor).c_str(), init_name(cfg.init).c_str(),
                  order.c_str(), throttle.c_str(), measured.mean, measured.stddev, model.mean,
                  model.stddev, local.mean);
    out << line;
  }
  return out.str();
}

}  // namespace locq
