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

#include "locq/grid.hpp"

namespace locq {

/// Constant stencil coefficients: center weight c1, neighbor weight c2.
/// With c1 + 6*c2 = 1 a uniform field is a fixed point of the sweep.
struct Coefficients {
  double c1 = 1.0;
  double c2 = 0.0;
};

/// Counts lattice site updates (LUPs) and derives main-memory traffic.
/// At large problem sizes each update moves one 8-byte load, one store and
/// one read-for-ownership line fill, i.e. 24 bytes for 8 flops.
class TrafficCounter {
 public:
  static constexpr std::uint32_t kBytesPerUpdate = 24;
  static constexpr std::uint32_t kFlopsPerUpdate = 8;

  void add_updates(std::uint64_t n) { lups_.fetch_add(n, std::memory_order_relaxed); }

  std::uint64_t lups() const { return lups_.load(std::memory_order_relaxed); }
  std::uint64_t bytes_main_memory() const { return lups() * kBytesPerUpdate; }

  void reset() { lups_.store(0, std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> lups_{0};
};

/// One site update from the front buffer. The six neighbor contributions are
/// summed left to right in a fixed order (i-1, i+1, j-1, j+1, k-1, k+1) so
/// the result is bit-identical no matter which thread or schedule runs it.
inline double update_site(const Grid3D& grid, std::uint32_t i, std::uint32_t j,
                          std::uint32_t k, const Coefficients& c) {
  const std::span<const double> f = grid.front();
  const std::size_t idx = grid.index(i, j, k);
  const std::size_t sx = 1;
  const std::size_t sy = grid.nx();
  const std::size_t sz = std::size_t{grid.nx()} * grid.ny();
  const double neighbors = f[idx - sx] + f[idx + sx] + f[idx - sy] + f[idx + sy] +
                           f[idx - sz] + f[idx + sz];
  return c.c1 * f[idx] + c.c2 * neighbors;
}

/// Update every interior site of one block, writing the back buffer.
/// Boundary sites are Dirichlet-fixed and skipped. Safe to call concurrently
/// for distinct blocks of the same sweep.
void jacobi_sweep_block(Grid3D& grid, const BlockIndex& idx, const BlockSpec& spec,
                        const Coefficients& c, TrafficCounter* counter = nullptr);

/// Single-threaded reference sweep over the whole grid, including the buffer
/// swap. Ground truth for every parallel execution path.
void serial_sweep(Grid3D& grid, const Coefficients& c, TrafficCounter* counter = nullptr);

}  // namespace locq
