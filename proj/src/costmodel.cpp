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

#include "locq/costmodel.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "locq/stencil.hpp"

namespace locq {

NumaParams NumaParams::calibrated() {
  NumaParams p;
  p.domain_bandwidth = 3.96e9;
  p.link_bandwidth = 4.0e9;
  p.remote_penalty = 1.6;
  p.threads_to_saturate = 2;
  return p;
}

namespace {

void check_complete(const ScheduleTrace& trace, const Decomposition& dec) {
  if (trace.events.size() != dec.num_blocks()) {
    throw std::invalid_argument("predict: trace is incomplete");
  }
  std::vector<std::uint8_t> seen(dec.num_blocks(), 0);
  for (const ExecEvent& e : trace.events) {
    if (!dec.contains(e.block)) {
      throw std::invalid_argument("predict: trace contains a block outside the decomposition");
    }
    std::uint8_t& flag = seen[dec.linear_index(e.block)];
    if (flag != 0) {
      throw std::invalid_argument("predict: trace executes a block twice");
    }
    flag = 1;
  }
}

struct Job {
  std::uint32_t home = 0;
  std::uint32_t exec_domain = 0;
  bool remote = false;
};

}  // namespace

ModelReport predict(const ScheduleTrace& trace, const Decomposition& dec,
                    const Topology& topo, const NumaParams& params) {
  check_complete(trace, dec);

  const std::uint32_t domains = topo.num_domains();
  const std::uint32_t threads = trace.num_threads;
  const double block_bytes =
      static_cast<double>(dec.spec().sites()) * TrafficCounter::kBytesPerUpdate;
  const double thread_cap = params.domain_bandwidth / params.threads_to_saturate;

  if (threads != topo.total_threads()) {
    throw std::invalid_argument("predict: trace thread count does not match the topology");
  }

  // Per-thread job sequences in trace order.
  std::vector<std::vector<Job>> jobs(threads);
  std::uint64_t local_events = 0;
  for (const ExecEvent& e : trace.events) {
    if (e.thread >= threads || e.home >= domains) {
      throw std::invalid_argument("predict: event thread or home domain out of range");
    }
    const std::uint32_t exec_domain = topo.domain_of_thread(e.thread);
    const bool remote = exec_domain != e.home;
    if (!remote) ++local_events;
    jobs[e.thread].push_back(Job{e.home, exec_domain, remote});
  }

  std::vector<std::size_t> cursor(threads, 0);
  std::vector<double> remaining(threads, 0.0);
  std::vector<std::uint8_t> active(threads, 0);
  for (std::uint32_t t = 0; t < threads; ++t) {
    if (!jobs[t].empty()) {
      active[t] = 1;
      remaining[t] = block_bytes;
    }
  }

  std::vector<double> bytes_from_domain(domains, 0.0);
  std::vector<std::uint32_t> bus_load(domains, 0);
  std::vector<std::uint32_t> link_load(std::size_t{domains} * domains, 0);
  std::vector<double> rate(threads, 0.0);

  double now = 0.0;
  std::uint32_t num_active = 0;
  for (std::uint32_t t = 0; t < threads; ++t) num_active += active[t];

  while (num_active > 0) {
    // Fair split: each active job gets an equal share of its home bus and,
    // when remote, of the directed link it crosses; a single thread never
    // draws more than the per-thread cap.
    std::fill(bus_load.begin(), bus_load.end(), 0u);
    std::fill(link_load.begin(), link_load.end(), 0u);
    for (std::uint32_t t = 0; t < threads; ++t) {
      if (!active[t]) continue;
      const Job& job = jobs[t][cursor[t]];
      ++bus_load[job.home];
      if (job.remote) ++link_load[std::size_t{job.exec_domain} * domains + job.home];
    }

    double dt = std::numeric_limits<double>::infinity();
    for (std::uint32_t t = 0; t < threads; ++t) {
      if (!active[t]) continue;
      const Job& job = jobs[t][cursor[t]];
      double r = std::min(thread_cap, params.domain_bandwidth / bus_load[job.home]);
      if (job.remote) {
        const std::uint32_t on_link = link_load[std::size_t{job.exec_domain} * domains + job.home];
        r = std::min(r, params.link_bandwidth / on_link);
        r /= params.remote_penalty;
      }
      rate[t] = r;
      dt = std::min(dt, remaining[t] / r);
    }

    now += dt;
    for (std::uint32_t t = 0; t < threads; ++t) {
      if (!active[t]) continue;
      const Job& job = jobs[t][cursor[t]];
      const double transferred = rate[t] * dt;
      bytes_from_domain[job.home] += transferred;
      remaining[t] -= transferred;
      if (remaining[t] <= block_bytes * 1e-12) {
        if (++cursor[t] < jobs[t].size()) {
          remaining[t] = block_bytes;
        } else {
          active[t] = 0;
          --num_active;
        }
      }
    }
  }

  ModelReport report;
  report.makespan_seconds = now;
  const double total_sites =
      static_cast<double>(trace.events.size()) * static_cast<double>(dec.spec().sites());
  report.mlups = total_sites / now / 1e6;
  report.local_fraction =
      trace.events.empty()
          ? 0.0
          : static_cast<double>(local_events) / static_cast<double>(trace.events.size());
  report.per_domain_utilization.resize(domains);
  for (std::uint32_t d = 0; d < domains; ++d) {
    report.per_domain_utilization[d] = bytes_from_domain[d] / (params.domain_bandwidth * now);
  }
  return report;
}

std::vector<RankedConfig> compare_configs(const std::vector<ConfigTraces>& configs,
                                          const Decomposition& dec, const Topology& topo,
                                          const NumaParams& params) {
  std::vector<RankedConfig> ranking;
  ranking.reserve(configs.size());
  for (const ConfigTraces& config : configs) {
    if (config.traces.empty()) {
      throw std::invalid_argument("compare_configs: configuration without traces: " +
                                  config.label);
    }
    double sum = 0.0;
    for (const ScheduleTrace& trace : config.traces) {
      sum += predict(trace, dec, topo, params).mlups;
    }
    ranking.push_back(RankedConfig{config.label, sum / static_cast<double>(config.traces.size())});
  }
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const RankedConfig& a, const RankedConfig& b) { return a.mlups > b.mlups; });
  return ranking;
}

}  // namespace locq
