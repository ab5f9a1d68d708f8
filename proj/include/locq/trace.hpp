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

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "locq/grid.hpp"

namespace locq {

/// One block execution: which thread ran which block, the queue (domain) it
/// was served from when a queueing executor was used, and the block's home.
struct ExecEvent {
  std::uint64_t seq = 0;
  std::uint32_t thread = 0;
  BlockIndex block;
  std::optional<std::uint32_t> served_from;  ///< empty for loop worksharing
  std::uint32_t home = 0;
};

enum class QueueEventKind : std::uint8_t { Enqueue, Dequeue };

/// Pool/queue occupancy change. `home` is the block's home domain: for the
/// locality-queue executor this identifies the queue, for the plain task
/// pool it tags the pool entry so snapshots can be grouped by home.
struct QueueEvent {
  std::uint64_t seq = 0;
  QueueEventKind kind = QueueEventKind::Enqueue;
  std::uint32_t thread = 0;
  std::uint32_t home = 0;
  BlockIndex block;
};

/// Ordered record of one sweep. Sequence numbers come from a single global
/// counter shared by both event streams, so merging by seq yields a total
/// order consistent with each thread's program order.
struct ScheduleTrace {
  std::uint32_t num_threads = 0;
  std::vector<ExecEvent> events;
  std::vector<QueueEvent> queue_events;
};

/// Builds a ScheduleTrace from per-thread buffers; threads record without
/// touching shared state except the atomic sequence counter. finish() merges
/// and sorts once the team has joined.
class TraceRecorder {
 public:
  explicit TraceRecorder(std::uint32_t num_threads);

  void record_exec(std::uint32_t thread, const BlockIndex& block,
                   std::optional<std::uint32_t> served_from, std::uint32_t home);
  void record_queue(std::uint32_t thread, QueueEventKind kind, std::uint32_t home,
                    const BlockIndex& block);

  ScheduleTrace finish();

 private:
  std::uint32_t num_threads_;
  std::atomic<std::uint64_t> seq_{0};
  struct PerThread {
    std::vector<ExecEvent> exec;
    std::vector<QueueEvent> queue;
  };
  std::vector<PerThread> per_thread_;
};

}  // namespace locq
