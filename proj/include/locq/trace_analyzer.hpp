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
#include <vector>

#include "locq/placement.hpp"
#include "locq/trace.hpp"

namespace locq {

/// Pool/queue occupancy right after one enqueue or dequeue event.
struct OccupancySnapshot {
  std::uint64_t seq = 0;
  std::uint64_t total = 0;             ///< blocks queued across all domains
  std::uint64_t max_count = 0;         ///< largest single-domain share
  std::uint32_t distinct_domains = 0;  ///< domains with at least one queued block

  double dominant_fraction() const {
    return total == 0 ? 0.0 : static_cast<double>(max_count) / static_cast<double>(total);
  }
};

/// Locality and occupancy statistics distilled from one trace.
struct LocalityStats {
  /// Share of block executions where the executing thread's domain equals
  /// the block's home domain.
  double local_fraction = 0.0;

  /// Executions grouped by serving domain (home domain when the executor
  /// has no queues). Sums to the decomposition size.
  std::vector<std::uint64_t> per_domain_served;

  /// One snapshot per enqueue/dequeue event, in event order.
  std::vector<OccupancySnapshot> occupancy_snapshots;

  /// Mean dominant share over all snapshots with at least one queued block;
  /// 0 when the trace has no queue events.
  double mean_dominant_domain_fraction = 0.0;

  std::uint64_t total_events = 0;
};

/// Compute the stats for a complete trace. Throws if the trace's block
/// multiset does not match the placement's decomposition exactly.
LocalityStats analyze(const ScheduleTrace& trace, const Topology& topo,
                      const PlacementMap& placement);

}  // namespace locq
