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

#include "locq/stencil.hpp"

#include <algorithm>

namespace locq {

void jacobi_sweep_block(Grid3D& grid, const BlockIndex& idx, const BlockSpec& spec,
                        const Coefficients& c, TrafficCounter* counter) {
  const SiteRange r = block_site_range(idx, spec);

  // Clamp to the interior; boundary sites are Dirichlet-fixed.
  const std::uint32_t i0 = std::max(r.i0, 1u);
  const std::uint32_t j0 = std::max(r.j0, 1u);
  const std::uint32_t k0 = std::max(r.k0, 1u);
  const std::uint32_t i1 = std::min<std::uint64_t>(r.i1, std::uint64_t{grid.nx()} - 2);
  const std::uint32_t j1 = std::min<std::uint64_t>(r.j1, std::uint64_t{grid.ny()} - 2);
  const std::uint32_t k1 = std::min<std::uint64_t>(r.k1, std::uint64_t{grid.nz()} - 2);
  if (grid.nx() < 3 || grid.ny() < 3 || grid.nz() < 3) return;
  if (i0 > i1 || j0 > j1 || k0 > k1) return;

  std::span<double> back = grid.back();
  std::uint64_t updates = 0;
  for (std::uint32_t k = k0; k <= k1; ++k) {
    for (std::uint32_t j = j0; j <= j1; ++j) {
      for (std::uint32_t i = i0; i <= i1; ++i) {
        back[grid.index(i, j, k)] = update_site(grid, i, j, k, c);
      }
      updates += i1 - i0 + 1;
    }
  }
  if (counter != nullptr) counter->add_updates(updates);
}

void serial_sweep(Grid3D& grid, const Coefficients& c, TrafficCounter* counter) {
  std::span<double> back = grid.back();
  std::uint64_t updates = 0;
  if (grid.nx() >= 3 && grid.ny() >= 3 && grid.nz() >= 3) {
    for (std::uint32_t k = 1; k + 1 < grid.nz(); ++k) {
      for (std::uint32_t j = 1; j + 1 < grid.ny(); ++j) {
        for (std::uint32_t i = 1; i + 1 < grid.nx(); ++i) {
          back[grid.index(i, j, k)] = update_site(grid, i, j, k, c);
        }
        updates += grid.nx() - 2;
      }
    }
  }
  if (counter != nullptr) counter->add_updates(updates);
  grid.swap_buffers();
}

}  // namespace locq
