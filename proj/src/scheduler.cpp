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

#include "locq/scheduler.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

#include "detail.hpp"

namespace locq {

namespace {

/// Run every block of one kb-layer in the loop nest's jb/ib order.
template <typename PerBlock>
void run_layer(std::uint32_t kb, const PlacementMap& placement, PerBlock&& per_block) {
  for (std::uint32_t jb = 0; jb < placement.num_j_blocks(); ++jb) {
    for (std::uint32_t ib = 0; ib < placement.num_i_blocks(); ++ib) {
      per_block(BlockIndex{ib, jb, kb});
    }
  }
}

}  // namespace

ScheduleTrace run_sweep_worksharing(Grid3D& grid, const BlockSpec& spec,
                                    const Coefficients& coeff, const Topology& topo,
                                    const PlacementMap& placement,
                                    WorkshareSchedule schedule, std::uint32_t chunk,
                                    const ExecOptions& options, TrafficCounter* counter) {
  if (chunk == 0) {
    throw std::invalid_argument("run_sweep_worksharing: chunk must be >= 1");
  }
  const std::uint32_t threads = topo.total_threads();
  const std::uint32_t layers = placement.num_k_blocks();

  TraceRecorder recorder(threads);
  std::atomic<std::uint64_t> next_layer{0};

  auto worker = [&](std::uint32_t t) {
    detail::Pacer pacer(options, t);
    auto execute = [&](std::uint32_t kb) {
      run_layer(kb, placement, [&](const BlockIndex& block) {
        jacobi_sweep_block(grid, block, spec, coeff, counter);
        recorder.record_exec(t, block, std::nullopt, placement.home(block));
        pacer.yield_after_block();
      });
    };

    switch (schedule) {
      case WorkshareSchedule::Static: {
        const auto [begin, end] = static_chunk_range(layers, threads, t);
        for (std::uint32_t kb = begin; kb < end; ++kb) {
          pacer.pause_before_grab();
          execute(kb);
        }
        break;
      }
      case WorkshareSchedule::StaticChunk1: {
        for (std::uint32_t kb = t; kb < layers; kb += threads) {
          pacer.pause_before_grab();
          execute(kb);
        }
        break;
      }
      case WorkshareSchedule::Dynamic: {
        for (;;) {
          pacer.pause_before_grab();
          const std::uint64_t kb0 = next_layer.fetch_add(chunk, std::memory_order_relaxed);
          if (kb0 >= layers) break;
          const std::uint64_t kb1 = std::min<std::uint64_t>(kb0 + chunk, layers);
          for (std::uint64_t kb = kb0; kb < kb1; ++kb) {
            execute(static_cast<std::uint32_t>(kb));
          }
        }
        break;
      }
    }
  };

  {
    std::vector<std::jthread> team;
    team.reserve(threads);
    for (std::uint32_t t = 0; t < threads; ++t) team.emplace_back(worker, t);
  }  // full barrier: all workers joined

  grid.swap_buffers();
  return recorder.finish();
}

}  // namespace locq
