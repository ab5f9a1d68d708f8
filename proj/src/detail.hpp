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
#include <thread>

#include "locq/exec_options.hpp"

namespace locq::detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Stateless hash of (seed, n) onto [0,1).
inline double uniform_hash(std::uint64_t seed, std::uint64_t n) {
  std::uint64_t s = seed ^ (n * 0x9E3779B97F4A7C15ULL);
  return static_cast<double>(splitmix64(s) >> 11) * 0x1.0p-53;
}

/// Per-thread pacing: optional seeded busy pause before each work grab and
/// an optional yield after each block, so oversubscribed hosts interleave
/// the simulated threads at block granularity.
class Pacer {
 public:
  Pacer(const ExecOptions& options, std::uint32_t thread)
      : jitter_(options.jitter),
        yield_(options.cooperative_yield),
        max_spin_(options.jitter_max_spin),
        state_(options.seed * 0x9E3779B97F4A7C15ULL + thread + 1) {}

  void pause_before_grab() {
    if (!jitter_) return;
    const std::uint32_t spins = static_cast<std::uint32_t>(splitmix64(state_) % (max_spin_ + 1));
    for (volatile std::uint32_t n = 0; n < spins; ++n) {
    }
  }

  void yield_after_block() {
    if (yield_) std::this_thread::yield();
  }

 private:
  bool jitter_;
  bool yield_;
  std::uint32_t max_spin_;
  std::uint64_t state_;
};

}  // namespace locq::detail
