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

#include "locq/exec_options.hpp"
#include "locq/grid.hpp"
#include "locq/placement.hpp"
#include "locq/stencil.hpp"
#include "locq/trace.hpp"

namespace locq {

/// Nesting order of the task submission loop. KJI is the plain blocked loop
/// nest (kb outermost); JKI transposes it so consecutive submissions cycle
/// through kb-layers and with them through locality domains.
enum class SubmitOrder { KJI, JKI };

/// Throttled single-producer task pool configuration.
struct TaskPoolConfig {
  /// Maximum number of unprocessed tasks in the pool. Once the limit is
  /// reached the submitting thread serves tasks itself until occupancy
  /// drops below it. kUnbounded disables throttling.
  std::uint64_t throttle = 257;
  SubmitOrder submit_order = SubmitOrder::KJI;

  static constexpr std::uint64_t kUnbounded = UINT64_MAX;
};

/// Blocks in the chosen submission order.
std::vector<BlockIndex> submit_order_blocks(const Decomposition& dec, SubmitOrder order);

/// Execute one sweep with single-producer tasking: one thread submits block
/// tasks into a bounded global FIFO, all threads consume the oldest task.
/// Swaps buffers after the barrier.
ScheduleTrace run_sweep_tasking(Grid3D& grid, const BlockSpec& spec,
                                const Coefficients& coeff, const Topology& topo,
                                const PlacementMap& placement, const TaskPoolConfig& cfg,
                                const ExecOptions& options = {},
                                TrafficCounter* counter = nullptr);

}  // namespace locq
