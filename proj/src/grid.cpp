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

#include "locq/grid.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "detail.hpp"

namespace locq {

SiteRange block_site_range(const BlockIndex& idx, const BlockSpec& spec) {
  SiteRange r;
  r.i0 = idx.ib * spec.di;
  r.i1 = r.i0 + spec.di - 1;
  r.j0 = idx.jb * spec.dj;
  r.j1 = r.j0 + spec.dj - 1;
  r.k0 = idx.kb * spec.dk;
  r.k1 = r.k0 + spec.dk - 1;
  return r;
}

Grid3D::Grid3D(std::uint32_t nx, std::uint32_t ny, std::uint32_t nz)
    : nx_(nx), ny_(ny), nz_(nz) {
  if (nx == 0 || ny == 0 || nz == 0) {
    throw std::invalid_argument("Grid3D: extents must be positive");
  }
  const std::size_t n = std::size_t{nx} * ny * nz;
  front_.assign(n, 0.0);
  back_.assign(n, 0.0);
}

std::uint64_t Grid3D::num_interior_sites() const {
  if (nx_ < 3 || ny_ < 3 || nz_ < 3) return 0;
  return std::uint64_t{nx_ - 2} * (ny_ - 2) * (nz_ - 2);
}

void Grid3D::swap_buffers() {
  front_.swap(back_);
  ++generation_;
}

void Grid3D::fill(double value) {
  front_.assign(front_.size(), value);
  back_.assign(back_.size(), value);
}

void Grid3D::fill_random(std::uint64_t seed) {
  for (std::size_t n = 0; n < front_.size(); ++n) {
    front_[n] = detail::uniform_hash(seed, n);
    back_[n] = front_[n];
  }
}

namespace {

void check_divides(std::uint32_t extent, std::uint32_t block, char dim) {
  if (block == 0 || extent % block != 0) {
    throw std::invalid_argument(std::string("Decomposition: block extent d") + dim + "=" +
                                std::to_string(block) + " does not divide grid extent n" +
                                dim + "=" + std::to_string(extent));
  }
}

}  // namespace

Decomposition::Decomposition(std::uint32_t nx, std::uint32_t ny, std::uint32_t nz,
                             BlockSpec spec)
    : spec_(spec) {
  check_divides(nx, spec.di, 'x');
  check_divides(ny, spec.dj, 'y');
  check_divides(nz, spec.dk, 'z');
  nbi_ = nx / spec.di;
  nbj_ = ny / spec.dj;
  nbk_ = nz / spec.dk;
}

std::vector<BlockIndex> Decomposition::blocks() const {
  std::vector<BlockIndex> out;
  out.reserve(num_blocks());
  for (std::uint32_t kb = 0; kb < nbk_; ++kb) {
    for (std::uint32_t jb = 0; jb < nbj_; ++jb) {
      for (std::uint32_t ib = 0; ib < nbi_; ++ib) {
        out.push_back(BlockIndex{ib, jb, kb});
      }
    }
  }
  return out;
}

std::vector<BlockIndex> decompose(std::uint32_t nx, std::uint32_t ny, std::uint32_t nz,
                                  const BlockSpec& spec) {
  return Decomposition(nx, ny, nz, spec).blocks();
}

}  // namespace locq
