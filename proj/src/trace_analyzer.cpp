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

#include "locq/trace_analyzer.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace locq {

LocalityStats analyze(const ScheduleTrace& trace, const Topology& topo,
                      const PlacementMap& placement) {
  if (trace.events.size() != placement.num_blocks()) {
    throw std::invalid_argument("analyze: trace is incomplete");
  }

  LocalityStats stats;
  stats.total_events = trace.events.size();
  stats.per_domain_served.assign(topo.num_domains(), 0);

  std::vector<std::uint8_t> seen(placement.num_blocks(), 0);
  const auto linear = [&](const BlockIndex& b) {
    return b.ib + std::uint64_t{placement.num_i_blocks()} *
                      (b.jb + std::uint64_t{placement.num_j_blocks()} * b.kb);
  };

  std::uint64_t local = 0;
  for (const ExecEvent& e : trace.events) {
    if (e.block.ib >= placement.num_i_blocks() || e.block.jb >= placement.num_j_blocks() ||
        e.block.kb >= placement.num_k_blocks()) {
      throw std::invalid_argument("analyze: block outside the decomposition");
    }
    std::uint8_t& flag = seen[linear(e.block)];
    if (flag != 0) {
      throw std::invalid_argument("analyze: block executed twice");
    }
    flag = 1;

    const std::uint32_t served = e.served_from.value_or(e.home);
    if (served >= topo.num_domains()) {
      throw std::invalid_argument("analyze: serving domain out of range");
    }
    ++stats.per_domain_served[served];
    if (topo.domain_of_thread(e.thread) == e.home) ++local;
  }
  stats.local_fraction =
      static_cast<double>(local) / static_cast<double>(trace.events.size());

  // Replay queue events into per-domain occupancy; one snapshot per event.
  std::vector<std::uint64_t> counts(topo.num_domains(), 0);
  std::uint64_t total = 0;
  std::uint32_t distinct = 0;
  stats.occupancy_snapshots.reserve(trace.queue_events.size());
  double dominant_sum = 0.0;
  std::uint64_t dominant_samples = 0;
  for (const QueueEvent& qe : trace.queue_events) {
    if (qe.home >= topo.num_domains()) {
      throw std::invalid_argument("analyze: queue event domain out of range");
    }
    std::uint64_t& c = counts[qe.home];
    if (qe.kind == QueueEventKind::Enqueue) {
      if (c == 0) ++distinct;
      ++c;
      ++total;
    } else {
      if (c == 0) {
        throw std::invalid_argument("analyze: dequeue from an empty queue");
      }
      --c;
      --total;
      if (c == 0) --distinct;
    }
    OccupancySnapshot snap;
    snap.seq = qe.seq;
    snap.total = total;
    snap.max_count = total == 0 ? 0 : *std::max_element(counts.begin(), counts.end());
    snap.distinct_domains = distinct;
    stats.occupancy_snapshots.push_back(snap);
    if (total > 0) {
      dominant_sum += snap.dominant_fraction();
      ++dominant_samples;
    }
  }
  stats.mean_dominant_domain_fraction =
      dominant_samples == 0 ? 0.0 : dominant_sum / static_cast<double>(dominant_samples);
  return stats;
}

}  // namespace locq
