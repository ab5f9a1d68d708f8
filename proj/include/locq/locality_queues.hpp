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
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "locq/exec_options.hpp"
#include "locq/grid.hpp"
#include "locq/placement.hpp"
#include "locq/stencil.hpp"
#include "locq/taskpool.hpp"
#include "locq/trace.hpp"

namespace locq {

/// One FIFO work queue per locality domain, each behind its own lock, plus
/// the thread-to-domain map. Blocks are enqueued by home domain; dequeue
/// prefers the caller's local queue and falls back to a cyclic scan of the
/// others, so load balancing wins over strict access locality.
class LocalityQueues {
 public:
  explicit LocalityQueues(const Topology& topo);

  std::uint32_t num_domains() const { return static_cast<std::uint32_t>(slots_.size()); }
  std::uint32_t domain_of_thread(std::uint32_t thread) const {
    return ld_of_thread_[thread];
  }

  /// Append a block to its home-domain queue. Thread-safe. When a recorder
  /// is attached the enqueue event is logged under the queue lock, so event
  /// order equals queue order.
  void enqueue(const BlockIndex& block, std::uint32_t home, std::uint32_t thread = 0);

  struct Served {
    BlockIndex block;
    std::uint32_t served_from;
  };

  /// Pop the oldest block of the first non-empty queue in a cyclic scan
  /// starting at the caller's home domain, spinning until a block shows up.
  /// `spin_budget` bounds the wait in full scan cycles (0 = unbounded);
  /// returns nullopt only when the budget runs out.
  std::optional<Served> dequeue_with_fallback(std::uint32_t thread,
                                              std::uint64_t spin_budget = 0);

  /// Single non-blocking probe of one queue.
  std::optional<BlockIndex> try_pop(std::uint32_t domain, std::uint32_t thread = 0);

  std::uint64_t size(std::uint32_t domain) const;
  std::uint64_t total_enqueued() const { return enqueued_.load(std::memory_order_relaxed); }
  std::uint64_t total_dequeued() const { return dequeued_.load(std::memory_order_relaxed); }

  void set_recorder(TraceRecorder* recorder) { recorder_ = recorder; }

 private:
  struct Slot {
    mutable std::mutex mutex;
    std::deque<BlockIndex> queue;
  };

  std::vector<std::unique_ptr<Slot>> slots_;
  std::vector<std::uint32_t> ld_of_thread_;
  std::atomic<std::uint64_t> enqueued_{0};
  std::atomic<std::uint64_t> dequeued_{0};
  TraceRecorder* recorder_ = nullptr;
};

/// Execute one sweep with the locality-queue scheme: the producer enqueues
/// each block to its home queue and submits one anonymous task into the same
/// throttled pool discipline as plain tasking; every task dequeues whatever
/// block the fallback scan yields. A task may well process a block enqueued
/// for a later submission; the submitted-task count always equals the queued
/// block count, so nothing is lost or processed twice.
ScheduleTrace run_sweep_locality_queues(Grid3D& grid, const BlockSpec& spec,
                                        const Coefficients& coeff, const Topology& topo,
                                        const PlacementMap& placement,
                                        const TaskPoolConfig& cfg,
                                        const ExecOptions& options = {},
                                        TrafficCounter* counter = nullptr);

}  // namespace locq
