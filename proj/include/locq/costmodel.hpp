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
#include <string>
#include <vector>

#include "locq/grid.hpp"
#include "locq/placement.hpp"
#include "locq/trace.hpp"

namespace locq {

/// Bandwidth/contention parameters of the modeled ccNUMA node.
struct NumaParams {
  /// Sustainable bandwidth of one locality domain's memory bus, bytes/s.
  /// Default calibrated so an 8-thread all-local run lands near 660 MLUP/s
  /// on the 4-domain, 2-threads-per-domain reference machine.
  double domain_bandwidth = 3.96e9;

  /// Multiplicative service-time factor for a task served from a non-home
  /// domain. 1.0 leaves contention to carry the whole effect.
  double remote_penalty = 1.0;

  /// Inter-domain link capacity per direction, bytes/s.
  double link_bandwidth = 4.0e9;

  /// Threads needed to saturate one bus; a single thread can draw at most
  /// domain_bandwidth / threads_to_saturate.
  std::uint32_t threads_to_saturate = 2;

  /// Parameter set fitted against the reference machine's published task
  /// scheduling measurements; adds a remote-access cost on top of
  /// contention so mostly-remote schedules fall below mostly-local ones.
  static NumaParams calibrated();
};

/// Model output for one trace.
struct ModelReport {
  double mlups = 0.0;            ///< predicted million site updates per second
  double local_fraction = 0.0;   ///< executing-domain == home-domain share
  double makespan_seconds = 0.0;
  std::vector<double> per_domain_utilization;  ///< bus-busy fraction per domain
};

/// Replay a complete trace through a fair-share bandwidth model: each block
/// execution draws block-size * 24 bytes from its home domain's bus, split
/// equally among concurrent demanders and capped per thread; a non-local
/// execution also crosses the link between the executing and home domains
/// and runs remote_penalty times slower. Threads replay their events in
/// trace order; the prediction is total sites / makespan.
ModelReport predict(const ScheduleTrace& trace, const Decomposition& dec,
                    const Topology& topo, const NumaParams& params);

/// A labeled bundle of traces of the same configuration; predictions are
/// averaged over the bundle.
struct ConfigTraces {
  std::string label;
  std::vector<ScheduleTrace> traces;
};

struct RankedConfig {
  std::string label;
  double mlups = 0.0;
};

/// Predict every configuration with shared parameters and rank by predicted
/// throughput, best first.
std::vector<RankedConfig> compare_configs(const std::vector<ConfigTraces>& configs,
                                          const Decomposition& dec, const Topology& topo,
                                          const NumaParams& params);

}  // namespace locq
