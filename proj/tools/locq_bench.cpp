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

// Benchmark driver over the locq C API: configure a run (or the table1
// preset matrix), execute repeated sweeps, and emit machine CSV plus a
// human summary on stderr.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "locq.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

struct ConfigHandle {
  locq_config* ptr = locq_config_create();
  ~ConfigHandle() { locq_config_destroy(ptr); }
};

struct ResultsHandle {
  locq_results* ptr = nullptr;
  ~ResultsHandle() { locq_results_destroy(ptr); }
};

struct CliOptions {
  std::vector<uint32_t> grid{24};
  std::vector<uint32_t> block{24, 4, 4};
  uint32_t domains = 4;
  uint32_t tpd = 2;
  std::string exec = "worksharing";
  std::string schedule = "static";
  uint32_t chunk = 1;
  std::string init = "static";
  std::string order = "kji";
  uint64_t throttle = 257;
  double c1 = 0.25;
  double c2 = 0.125;
  uint32_t sweeps = 10;
  uint32_t warmup = 2;
  uint64_t seed = 0;
  bool jitter = false;
  bool verify = false;
  std::string out;
  std::string preset;
  double scale = 0.04;
  double model_bw = 0.0;
  double model_link_bw = 0.0;
  double model_penalty = 0.0;
  uint32_t model_saturate = 0;
  std::string model_preset = "default";
  bool summary_only = false;
};

/// One fully-resolved benchmark cell.
struct Cell {
  uint32_t nx, ny, nz;
  uint32_t di, dj, dk;
  locq_executor executor;
  locq_init init;
  locq_order order;
  std::string executor_label;
  std::string init_label;
  std::string order_label;
  bool has_pool;
};

struct CellResult {
  Cell cell;
  ResultsHandle results;
};

int usage_error(const std::string& message) {
  std::cerr << "locq-bench: " << message << "\n";
  return kExitUsage;
}

bool parse_executor(const CliOptions& opt, Cell& cell, std::string& error) {
  const std::string& exec = opt.exec;
  if (exec == "worksharing") {
    if (opt.schedule == "static") {
      cell.executor = LOCQ_EXEC_WS_STATIC;
      cell.executor_label = "static";
    } else if (opt.schedule == "static1") {
      cell.executor = LOCQ_EXEC_WS_STATIC1;
      cell.executor_label = "static1";
    } else if (opt.schedule == "dynamic") {
      cell.executor = LOCQ_EXEC_WS_DYNAMIC;
      cell.executor_label = "dynamic";
    } else {
      error = "schedule: expected static, static1 or dynamic, got '" + opt.schedule + "'";
      return false;
    }
    cell.has_pool = false;
    return true;
  }
  // Direct schedule names are accepted as shorthand.
  if (exec == "static" || exec == "static1" || exec == "dynamic") {
    cell.executor = exec == "static"    ? LOCQ_EXEC_WS_STATIC
                    : exec == "static1" ? LOCQ_EXEC_WS_STATIC1
                                        : LOCQ_EXEC_WS_DYNAMIC;
    cell.executor_label = exec;
    cell.has_pool = false;
    return true;
  }
  if (exec == "tasking") {
    cell.executor = LOCQ_EXEC_TASKING;
    cell.executor_label = "tasking";
    cell.has_pool = true;
    return true;
  }
  if (exec == "locality-queues") {
    cell.executor = LOCQ_EXEC_LOCALITY_QUEUES;
    cell.executor_label = "locality-queues";
    cell.has_pool = true;
    return true;
  }
  error = "exec: expected worksharing, tasking or locality-queues, got '" + exec + "'";
  return false;
}

bool parse_init(const std::string& name, locq_init& init, std::string& error) {
  if (name == "static") {
    init = LOCQ_INIT_STATIC;
  } else if (name == "static1") {
    init = LOCQ_INIT_STATIC1;
  } else if (name == "force-ld0") {
    init = LOCQ_INIT_FORCE_LD0;
  } else {
    error = "init: expected static, static1 or force-ld0, got '" + name + "'";
    return false;
  }
  return true;
}

bool parse_order(const std::string& name, locq_order& order, std::string& error) {
  if (name == "kji") {
    order = LOCQ_ORDER_KJI;
  } else if (name == "jki") {
    order = LOCQ_ORDER_JKI;
  } else {
    error = "order: expected kji or jki, got '" + name + "'";
    return false;
  }
  return true;
}

/// table1 preset geometry: a cube of round(600*scale) sites per side with
/// i-long blocks. When the side is a multiple of 60 the decomposition keeps
/// the reference 60x60 task structure; a multiple of 6 gives the compact
/// 6x6 smoke variant.
bool preset_geometry(double scale, Cell& cell, std::string& error) {
  const uint32_t n = static_cast<uint32_t>(600.0 * scale + 0.5);
  uint32_t b = 0;
  if (n >= 60 && n % 60 == 0) {
    b = n / 60;
  } else if (n >= 6 && n % 6 == 0) {
    b = n / 6;
  } else {
    error = "scale: 600*scale must be a positive multiple of 6";
    return false;
  }
  cell.nx = cell.ny = cell.nz = n;
  cell.di = n;
  cell.dj = cell.dk = b;
  return true;
}

std::vector<Cell> expand_cells(const CliOptions& opt, std::string& error) {
  std::vector<Cell> cells;
  if (!opt.preset.empty()) {
    if (opt.preset != "table1") {
      error = "preset: unknown preset '" + opt.preset + "'";
      return cells;
    }
    Cell geometry{};
    if (!preset_geometry(opt.scale, geometry, error)) return cells;
    const std::pair<locq_init, std::string> inits[] = {{LOCQ_INIT_STATIC, "static"},
                                                       {LOCQ_INIT_STATIC1, "static1"}};
    const std::pair<locq_executor, std::string> execs[] = {
        {LOCQ_EXEC_TASKING, "tasking"}, {LOCQ_EXEC_LOCALITY_QUEUES, "locality-queues"}};
    const std::pair<locq_order, std::string> orders[] = {{LOCQ_ORDER_KJI, "kji"},
                                                         {LOCQ_ORDER_JKI, "jki"}};
    for (const auto& [init, init_label] : inits) {
      for (const auto& [executor, exec_label] : execs) {
        for (const auto& [order, order_label] : orders) {
          Cell cell = geometry;
          cell.executor = executor;
          cell.executor_label = exec_label;
          cell.init = init;
          cell.init_label = init_label;
          cell.order = order;
          cell.order_label = order_label;
          cell.has_pool = true;
          cells.push_back(cell);
        }
      }
    }
    return cells;
  }

  Cell cell{};
  if (opt.grid.size() == 1) {
    cell.nx = cell.ny = cell.nz = opt.grid[0];
  } else if (opt.grid.size() == 3) {
    cell.nx = opt.grid[0];
    cell.ny = opt.grid[1];
    cell.nz = opt.grid[2];
  } else {
    error = "grid: expected 1 or 3 extents";
    return cells;
  }
  if (opt.block.size() != 3) {
    error = "block: expected 3 extents";
    return cells;
  }
  cell.di = opt.block[0];
  cell.dj = opt.block[1];
  cell.dk = opt.block[2];
  if (!parse_executor(opt, cell, error)) return cells;
  if (!parse_init(opt.init, cell.init, error)) return cells;
  if (!parse_order(opt.order, cell.order, error)) return cells;
  cell.init_label = opt.init;
  cell.order_label = opt.order;
  cells.push_back(cell);
  return cells;
}

locq_status run_cell(const CliOptions& opt, const Cell& cell, ResultsHandle& results) {
  ConfigHandle config;
  locq_config_set_grid(config.ptr, cell.nx, cell.ny, cell.nz);
  locq_config_set_block(config.ptr, cell.di, cell.dj, cell.dk);
  locq_config_set_topology(config.ptr, opt.domains, opt.tpd);
  locq_config_set_executor(config.ptr, cell.executor);
  locq_config_set_init(config.ptr, cell.init);
  locq_config_set_order(config.ptr, cell.order);
  locq_config_set_throttle(config.ptr, opt.throttle);
  locq_config_set_dynamic_chunk(config.ptr, opt.chunk);
  locq_config_set_coefficients(config.ptr, opt.c1, opt.c2);
  locq_config_set_sweeps(config.ptr, opt.sweeps, opt.warmup);
  locq_config_set_seed(config.ptr, opt.seed);
  locq_config_set_verify(config.ptr, opt.verify ? 1 : 0);
  locq_config_set_jitter(config.ptr, opt.jitter ? 1 : 0);

  // The table1 preset reproduces scheduling measurements, so it defaults to
  // the calibrated model parameters.
  if (opt.model_preset == "calibrated" || (!opt.preset.empty() && opt.model_preset == "default")) {
    locq_config_use_calibrated_model(config.ptr);
  } else if (opt.model_preset != "default") {
    std::cerr << "locq-bench: model-preset: expected default or calibrated\n";
    return LOCQ_ERR_CONFIG;
  }
  if (opt.model_bw > 0 || opt.model_link_bw > 0 || opt.model_penalty > 0 ||
      opt.model_saturate > 0) {
    const double bw = opt.model_bw > 0 ? opt.model_bw : 3.96e9;
    const double link = opt.model_link_bw > 0 ? opt.model_link_bw : 4.0e9;
    const double penalty = opt.model_penalty > 0 ? opt.model_penalty : 1.0;
    const uint32_t saturate = opt.model_saturate > 0 ? opt.model_saturate : 2;
    locq_config_set_model(config.ptr, bw, link, penalty, saturate);
  }
  return locq_run(config.ptr, &results.ptr);
}

void write_csv(std::ostream& out, const CliOptions& opt, const std::vector<CellResult>& rows) {
  out << "config_id,executor,init,order,throttle,domains,tpd,grid,block,sweep,wall_ms,"
         "measured_mlups,model_mlups,local_fraction,dominant_domain_fraction,seed\n";
  for (size_t id = 0; id < rows.size(); ++id) {
    const Cell& cell = rows[id].cell;
    const locq_results* res = rows[id].results.ptr;
    auto prefix = [&](std::ostream& os) {
      os << id << ',' << cell.executor_label << ',' << cell.init_label << ',';
      if (cell.has_pool) {
        os << cell.order_label << ',';
        if (opt.throttle == 0) {
          os << "unbounded,";
        } else {
          os << opt.throttle << ',';
        }
      } else {
        os << "-,-,";
      }
      os << opt.domains << ',' << opt.tpd << ',' << cell.nx << 'x' << cell.ny << 'x' << cell.nz
         << ',' << cell.di << 'x' << cell.dj << 'x' << cell.dk << ',';
    };

    const locq_metric metrics[] = {LOCQ_METRIC_WALL_MS, LOCQ_METRIC_MEASURED_MLUPS,
                                   LOCQ_METRIC_MODEL_MLUPS, LOCQ_METRIC_LOCAL_FRACTION,
                                   LOCQ_METRIC_DOMINANT_DOMAIN_FRACTION};
    if (!opt.summary_only) {
      const uint32_t sweeps = locq_results_sweep_count(res);
      for (uint32_t s = 0; s < sweeps; ++s) {
        prefix(out);
        out << s;
        for (locq_metric m : metrics) {
          double v = 0.0;
          locq_results_value(res, s, m, &v);
          out << ',' << v;
        }
        double seed = 0.0;
        locq_results_value(res, s, LOCQ_METRIC_SEED, &seed);
        out << ',' << static_cast<uint64_t>(seed) << '\n';
      }
    }
    prefix(out);
    out << "mean";
    for (locq_metric m : metrics) {
      double v = 0.0;
      locq_results_mean(res, m, &v);
      out << ',' << v;
    }
    out << ',' << opt.seed << '\n';
    if (!opt.summary_only) {
      prefix(out);
      out << "stddev";
      for (locq_metric m : metrics) {
        double v = 0.0;
        locq_results_stddev(res, m, &v);
        out << ',' << v;
      }
      out << ',' << opt.seed << '\n';
    }
  }
}

void write_human_summary(std::ostream& out, const std::vector<CellResult>& rows) {
  out << "\nexecutor          init     order  measured MLUP/s      model MLUP/s    local\n";
  for (const CellResult& row : rows) {
    double measured = 0, measured_sd = 0, model = 0, model_sd = 0, local = 0;
    locq_results_mean(row.results.ptr, LOCQ_METRIC_MEASURED_MLUPS, &measured);
    locq_results_stddev(row.results.ptr, LOCQ_METRIC_MEASURED_MLUPS, &measured_sd);
    locq_results_mean(row.results.ptr, LOCQ_METRIC_MODEL_MLUPS, &model);
    locq_results_stddev(row.results.ptr, LOCQ_METRIC_MODEL_MLUPS, &model_sd);
    locq_results_mean(row.results.ptr, LOCQ_METRIC_LOCAL_FRACTION, &local);
    char line[256];
    std::snprintf(line, sizeof(line), "%-17s %-8s %-6s %9.1f +- %-8.1f %9.1f +- %-7.1f %6.3f\n",
                  row.cell.executor_label.c_str(), row.cell.init_label.c_str(),
                  row.cell.has_pool ? row.cell.order_label.c_str() : "-", measured, measured_sd,
                  model, model_sd, local);
    out << line;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CliOptions opt;
  CLI::App app{"locq-bench: blocked 3D Jacobi sweeps under loop worksharing, throttled "
               "tasking, and locality-queue scheduling, with a NUMA bandwidth model"};
  app.set_config("--config", "", "read options from a key=value file (flags win)");
  app.add_option("--grid", opt.grid, "grid extents: N (cube) or NX NY NZ")
      ->expected(1, 3);
  app.add_option("--block", opt.block, "block extents: DI DJ DK")->expected(3);
  app.add_option("--domains", opt.domains, "number of locality domains");
  app.add_option("--tpd", opt.tpd, "threads per locality domain");
  app.add_option("--exec", opt.exec, "executor: worksharing, tasking or locality-queues");
  app.add_option("--schedule", opt.schedule,
                 "worksharing schedule: static, static1 or dynamic");
  app.add_option("--chunk", opt.chunk, "dynamic schedule chunk size");
  app.add_option("--init", opt.init, "first-touch schedule: static, static1 or force-ld0");
  app.add_option("--order", opt.order, "task submit order: kji or jki");
  app.add_option("--throttle", opt.throttle, "task pool limit (0 = unbounded)");
  app.add_option("--c1", opt.c1, "center coefficient");
  app.add_option("--c2", opt.c2, "neighbor coefficient");
  app.add_option("--sweeps", opt.sweeps, "timed sweeps per configuration");
  app.add_option("--warmup", opt.warmup, "untimed warmup sweeps");
  app.add_option("--seed", opt.seed, "base RNG seed");
  app.add_flag("--jitter", opt.jitter, "seeded scheduling jitter for run-to-run variation");
  app.add_flag("--verify", opt.verify, "compare the result field against the serial reference");
  app.add_option("--out", opt.out, "CSV output path (default: stdout)");
  app.add_option("--preset", opt.preset, "preset: table1 (2 inits x 2 orders x 2 executors)");
  app.add_option("--scale", opt.scale, "table1 preset scale factor for the 600^3 reference");
  app.add_option("--model-bw", opt.model_bw, "model: per-domain bus bandwidth [bytes/s]");
  app.add_option("--model-link-bw", opt.model_link_bw, "model: inter-domain link bandwidth");
  app.add_option("--model-penalty", opt.model_penalty, "model: remote service-time factor");
  app.add_option("--model-saturate", opt.model_saturate, "model: threads to saturate a bus");
  app.add_option("--model-preset", opt.model_preset, "model parameters: default or calibrated");
  app.add_flag("--summary-only", opt.summary_only, "emit only per-config mean CSV rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "locq-bench: " << e.what() << "\n";
    return kExitUsage;
  }

  // Default thread count override: split LOCQ_THREADS over the domains.
  if (const char* env = std::getenv("LOCQ_THREADS");
      env != nullptr && app.count("--tpd") == 0) {
    const unsigned long threads = std::strtoul(env, nullptr, 10);
    if (threads == 0 || threads % opt.domains != 0) {
      return usage_error("LOCQ_THREADS: must be a positive multiple of --domains");
    }
    opt.tpd = static_cast<uint32_t>(threads / opt.domains);
  }
  if (!opt.preset.empty() && app.count("--summary-only") == 0) {
    opt.summary_only = true;
  }

  std::string error;
  std::vector<Cell> cells = expand_cells(opt, error);
  if (cells.empty()) return usage_error(error);

  std::vector<CellResult> rows(cells.size());
  for (size_t i = 0; i < cells.size(); ++i) {
    rows[i].cell = cells[i];
    const locq_status status = run_cell(opt, cells[i], rows[i].results);
    if (status == LOCQ_ERR_VERIFY) {
      std::cerr << "locq-bench: " << locq_last_error() << "\n";
      return kExitVerifyFailed;
    }
    if (status != LOCQ_OK) {
      return usage_error(std::string(locq_status_name(status)) + ": " + locq_last_error());
    }
  }

  if (opt.out.empty()) {
    write_csv(std::cout, opt, rows);
  } else {
    std::ofstream file(opt.out);
    if (!file) return usage_error("out: cannot open '" + opt.out + "'");
    write_csv(file, opt, rows);
  }
  write_human_summary(std::cerr, rows);
  return 0;
}
