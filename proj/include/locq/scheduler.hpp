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

#include "locq/exec_options.hpp"
#include "locq/grid.hpp"
#include "locq/placement.hpp"
#include "locq/stencil.hpp"
#include "locq/trace.hpp"

namespace locq {

/// Loop worksharing schedules over the outer kb loop.
enum class WorkshareSchedule { Static, StaticChunk1, Dynamic };

/// Execute one sweep with loop worksharing over kb-layers, then swap
/// buffers. Static and StaticChunk1 assign layers with the same ownership
/// rules the first-touch pass uses; Dynamic hands the next `chunk` unclaimed
/// layers to whichever thread asks first.
ScheduleTrace run_sweep_worksharing(Grid3D& grid, const BlockSpec& spec,
                                    const Coefficients& coeff, const Topology& topo,
                                    const PlacementMap& placement,
                                    WorkshareSchedule schedule, std::uint32_t chunk = 1,
                                    const ExecOptions& options = {},
                                    TrafficCounter* counter = nullptr);

}  // namespace locq
