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

#include "locq/trace.hpp"

#include <algorithm>
#include <stdexcept>

namespace locq {

TraceRecorder::TraceRecorder(std::uint32_t num_threads)
    : num_threads_(num_threads), per_thread_(num_threads) {
  if (num_threads == 0) {
    throw std::invalid_argument("TraceRecorder: need at least one thread");
  }
}

void TraceRecorder::record_exec(std::uint32_t thread, const BlockIndex& block,
                                std::optional<std::uint32_t> served_from,
                                std::uint32_t home) {
  const std::uint64_t seq = seq_.fetch_add(1, std::memory_order_relaxed);
  per_thread_[thread].exec.push_back(ExecEvent{seq, thread, block, served_from, home});
}

void TraceRecorder::record_queue(std::uint32_t thread, QueueEventKind kind,
                                 std::uint32_t home, const BlockIndex& block) {
  const std::uint64_t seq = seq_.fetch_add(1, std::memory_order_relaxed);
  per_thread_[thread].queue.push_back(QueueEvent{seq, kind, thread, home, block});
}

ScheduleTrace TraceRecorder::finish() {
  ScheduleTrace trace;
  trace.num_threads = num_threads_;
  for (PerThread& pt : per_thread_) {
    trace.events.insert(trace.events.end(), pt.exec.begin(), pt.exec.end());
    trace.queue_events.insert(trace.queue_events.end(), pt.queue.begin(), pt.queue.end());
    pt.exec.clear();
    pt.queue.clear();
  }
  std::sort(trace.events.begin(), trace.events.end(),
            [](const ExecEvent& a, const ExecEvent& b) { return a.seq < b.seq; });
  std::sort(trace.queue_events.begin(), trace.queue_events.end(),
            [](const QueueEvent& a, const QueueEvent& b) { return a.seq < b.seq; });
  return trace;
}

}  // namespace locq
