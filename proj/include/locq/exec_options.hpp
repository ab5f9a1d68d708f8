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

namespace locq {

/// Knobs shared by every parallel executor.
struct ExecOptions {
  /// Mixed into per-thread RNG state; distinct seeds give distinct
  /// interleavings when jitter is on.
  std::uint64_t seed = 0;

  /// Insert a short random busy pause before each work grab. Emulates the
  /// run-to-run variation of dynamic schedules on real machines and keeps
  /// seeded runs statistically independent.
  bool jitter = false;
  std::uint32_t jitter_max_spin = 4096;

  /// Yield after each block so an oversubscribed host rotates the simulated
  /// hardware threads at block granularity instead of OS time-slice
  /// granularity.
  bool cooperative_yield = true;

  /// Spin budget (full scan cycles over all queues) for the bounded-wait
  /// dequeue fallback. 0 means unbounded.
  std::uint64_t fallback_spin_budget = 0;
};

}  // namespace locq
