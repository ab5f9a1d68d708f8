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

#include "locq/taskpool.hpp"

#include <cassert>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "detail.hpp"

namespace locq {

std::vector<BlockIndex> submit_order_blocks(const Decomposition& dec, SubmitOrder order) {
  std::vector<BlockIndex> out;
  out.reserve(dec.num_blocks());
  if (order == SubmitOrder::KJI) {
    return dec.blocks();
  }
  for (std::uint32_t jb = 0; jb < dec.num_j_blocks(); ++jb) {
    for (std::uint32_t kb = 0; kb < dec.num_k_blocks(); ++kb) {
      for (std::uint32_t ib = 0; ib < dec.num_i_blocks(); ++ib) {
        out.push_back(BlockIndex{ib, jb, kb});
      }
    }
  }
  return out;
}

namespace {

/// Mutex-protected global FIFO of pending block tasks, capped at the
/// throttle limit by the producer's serve-when-full rule.
struct BlockPool {
  std::mutex mutex;
  std::condition_variable not_empty;
  std::deque<BlockIndex> fifo;
  bool all_submitted = false;
};

}  // namespace

ScheduleTrace run_sweep_tasking(Grid3D& grid, const BlockSpec& spec,
                                const Coefficients& coeff, const Topology& topo,
                                const PlacementMap& placement, const TaskPoolConfig& cfg,
                                const ExecOptions& options, TrafficCounter* counter) {
  if (cfg.throttle == 0) {
    throw std::invalid_argument("run_sweep_tasking: throttle must be >= 1");
  }
  const std::uint32_t threads = topo.total_threads();
  TraceRecorder recorder(threads);
  BlockPool pool;

  Decomposition dec(grid.nx(), grid.ny(), grid.nz(), spec);
  const std::vector<BlockIndex> submit = submit_order_blocks(dec, cfg.submit_order);

  auto execute = [&](std::uint32_t t, const BlockIndex& block, detail::Pacer& pacer) {
    jacobi_sweep_block(grid, block, spec, coeff, counter);
    recorder.record_exec(t, block, std::nullopt, placement.home(block));
    pacer.yield_after_block();
  };

  // Consume until the pool is drained and no more submissions can arrive.
  auto consume_loop = [&](std::uint32_t t, detail::Pacer& pacer) {
    for (;;) {
      pacer.pause_before_grab();
      BlockIndex block;
      {
        std::unique_lock lock(pool.mutex);
        pool.not_empty.wait(lock, [&] { return !pool.fifo.empty() || pool.all_submitted; });
        if (pool.fifo.empty()) return;
        block = pool.fifo.front();
        pool.fifo.pop_front();
        recorder.record_queue(t, QueueEventKind::Dequeue, placement.home(block), block);
      }
      execute(t, block, pacer);
    }
  };

  auto producer = [&](std::uint32_t t) {
    detail::Pacer pacer(options, t);
    for (const BlockIndex& block : submit) {
      pacer.pause_before_grab();
      std::unique_lock lock(pool.mutex);
      // At the limit the submitting thread serves tasks until occupancy
      // drops below it, then resumes submitting.
      while (pool.fifo.size() >= cfg.throttle) {
        const BlockIndex oldest = pool.fifo.front();
        pool.fifo.pop_front();
        recorder.record_queue(t, QueueEventKind::Dequeue, placement.home(oldest), oldest);
        lock.unlock();
        execute(t, oldest, pacer);
        lock.lock();
      }
      pool.fifo.push_back(block);
      recorder.record_queue(t, QueueEventKind::Enqueue, placement.home(block), block);
      assert(pool.fifo.size() <= cfg.throttle);
      lock.unlock();
      pool.not_empty.notify_one();
    }
    {
      std::lock_guard lock(pool.mutex);
      pool.all_submitted = true;
    }
    pool.not_empty.notify_all();
    consume_loop(t, pacer);
  };

  auto consumer = [&](std::uint32_t t) {
    detail::Pacer pacer(options, t);
    consume_loop(t, pacer);
  };

  {
    std::vector<std::jthread> team;
    team.reserve(threads);
    team.emplace_back(producer, 0u);
    for (std::uint32_t t = 1; t < threads; ++t) team.emplace_back(consumer, t);
  }

  grid.swap_buffers();
  return recorder.finish();
}

}  // namespace locq
