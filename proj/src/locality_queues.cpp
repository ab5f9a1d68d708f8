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

#include "locq/locality_queues.hpp"

#include <condition_variable>
#include <stdexcept>
#include <thread>

#include "detail.hpp"

namespace locq {

LocalityQueues::LocalityQueues(const Topology& topo) {
  slots_.reserve(topo.num_domains());
  for (std::uint32_t d = 0; d < topo.num_domains(); ++d) {
    slots_.push_back(std::make_unique<Slot>());
  }
  ld_of_thread_.resize(topo.total_threads());
  for (std::uint32_t t = 0; t < topo.total_threads(); ++t) {
    ld_of_thread_[t] = topo.domain_of_thread(t);
  }
}

void LocalityQueues::enqueue(const BlockIndex& block, std::uint32_t home,
                             std::uint32_t thread) {
  if (home >= slots_.size()) {
    throw std::out_of_range("LocalityQueues::enqueue: home domain out of range");
  }
  Slot& slot = *slots_[home];
  std::lock_guard lock(slot.mutex);
  slot.queue.push_back(block);
  enqueued_.fetch_add(1, std::memory_order_relaxed);
  if (recorder_ != nullptr) {
    recorder_->record_queue(thread, QueueEventKind::Enqueue, home, block);
  }
}

std::optional<BlockIndex> LocalityQueues::try_pop(std::uint32_t domain,
                                                  std::uint32_t thread) {
  Slot& slot = *slots_[domain];
  std::lock_guard lock(slot.mutex);
  if (slot.queue.empty()) return std::nullopt;
  BlockIndex block = slot.queue.front();
  slot.queue.pop_front();
  dequeued_.fetch_add(1, std::memory_order_relaxed);
  if (recorder_ != nullptr) {
    recorder_->record_queue(thread, QueueEventKind::Dequeue, domain, block);
  }
  return block;
}

std::optional<LocalityQueues::Served> LocalityQueues::dequeue_with_fallback(
    std::uint32_t thread, std::uint64_t spin_budget) {
  const std::uint32_t home = ld_of_thread_[thread];
  const std::uint32_t domains = num_domains();
  std::uint32_t ld = home;
  std::uint64_t cycles = 0;
  for (;;) {
    if (std::optional<BlockIndex> block = try_pop(ld, thread)) {
      return Served{*block, ld};
    }
    ld = (ld + 1) % domains;
    if (ld == home) {
      // One full scan found nothing; back off briefly so spinning threads
      // do not starve the producer on an oversubscribed host.
      ++cycles;
      if (spin_budget != 0 && cycles >= spin_budget) return std::nullopt;
      std::this_thread::yield();
    }
  }
}

std::uint64_t LocalityQueues::size(std::uint32_t domain) const {
  const Slot& slot = *slots_[domain];
  std::lock_guard lock(slot.mutex);
  return slot.queue.size();
}

namespace {

/// Counted pool of anonymous task tokens; one token per enqueued block.
struct TokenPool {
  std::mutex mutex;
  std::condition_variable not_empty;
  std::uint64_t tokens = 0;
  bool all_submitted = false;
};

}  // namespace

ScheduleTrace run_sweep_locality_queues(Grid3D& grid, const BlockSpec& spec,
                                        const Coefficients& coeff, const Topology& topo,
                                        const PlacementMap& placement,
                                        const TaskPoolConfig& cfg,
                                        const ExecOptions& options,
                                        TrafficCounter* counter) {
  if (cfg.throttle == 0) {
    throw std::invalid_argument("run_sweep_locality_queues: throttle must be >= 1");
  }
  const std::uint32_t threads = topo.total_threads();
  TraceRecorder recorder(threads);
  LocalityQueues queues(topo);
  queues.set_recorder(&recorder);
  TokenPool pool;

  Decomposition dec(grid.nx(), grid.ny(), grid.nz(), spec);
  const std::vector<BlockIndex> submit = submit_order_blocks(dec, cfg.submit_order);

  // One anonymous task: take whatever block the fallback scan yields and
  // sweep it. Tasks are deliberately not bound to the block that triggered
  // their submission.
  auto process_block_from_queue = [&](std::uint32_t t, detail::Pacer& pacer) {
    std::optional<LocalityQueues::Served> served =
        queues.dequeue_with_fallback(t, options.fallback_spin_budget);
    if (!served) {
      throw std::runtime_error("locality queues: dequeue spin budget exhausted");
    }
    jacobi_sweep_block(grid, served->block, spec, coeff, counter);
    recorder.record_exec(t, served->block, served->served_from,
                         placement.home(served->block));
    pacer.yield_after_block();
  };

  auto consume_loop = [&](std::uint32_t t, detail::Pacer& pacer) {
    for (;;) {
      pacer.pause_before_grab();
      {
        std::unique_lock lock(pool.mutex);
        pool.not_empty.wait(lock, [&] { return pool.tokens > 0 || pool.all_submitted; });
        if (pool.tokens == 0) return;
        --pool.tokens;
      }
      process_block_from_queue(t, pacer);
    }
  };

  auto producer = [&](std::uint32_t t) {
    detail::Pacer pacer(options, t);
    for (const BlockIndex& block : submit) {
      pacer.pause_before_grab();
      queues.enqueue(block, placement.home(block), t);
      std::unique_lock lock(pool.mutex);
      while (pool.tokens >= cfg.throttle) {
        --pool.tokens;
        lock.unlock();
        process_block_from_queue(t, pacer);
        lock.lock();
      }
      ++pool.tokens;
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

  queues.set_recorder(nullptr);
  grid.swap_buffers();
  return recorder.finish();
}

}  // namespace locq
