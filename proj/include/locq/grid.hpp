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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace locq {

/// Coordinates of one tile in the block decomposition.
struct BlockIndex {
  std::uint32_t ib = 0;
  std::uint32_t jb = 0;
  std::uint32_t kb = 0;

  friend bool operator==(const BlockIndex&, const BlockIndex&) = default;
};

/// Tile extents per dimension (i is the fast index).
struct BlockSpec {
  std::uint32_t di = 1;
  std::uint32_t dj = 1;
  std::uint32_t dk = 1;

  std::uint64_t sites() const {
    return std::uint64_t{di} * dj * dk;
  }

  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

/// Inclusive site bounds covered by one block.
struct SiteRange {
  std::uint32_t i0, i1;
  std::uint32_t j0, j1;
  std::uint32_t k0, k1;
};

/// Site bounds of a block; pure arithmetic, caller guarantees the index is
/// inside the decomposition.
SiteRange block_site_range(const BlockIndex& idx, const BlockSpec& spec);

/// Double-buffered 3D scalar field. Linear layout is i + nx*(j + ny*k),
/// so i is the fastest-varying index. The front buffer holds the current
/// time step, the back buffer receives the next one; swap_buffers() flips
/// the roles and bumps the sweep generation.
class Grid3D {
 public:
  Grid3D(std::uint32_t nx, std::uint32_t ny, std::uint32_t nz);

  std::uint32_t nx() const { return nx_; }
  std::uint32_t ny() const { return ny_; }
  std::uint32_t nz() const { return nz_; }
  std::uint64_t num_sites() const { return front_.size(); }

  /// Sites not on any grid face; these are the only ones a sweep updates.
  std::uint64_t num_interior_sites() const;

  std::size_t index(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return i + std::size_t{nx_} * (j + std::size_t{ny_} * k);
  }

  bool is_interior(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return i > 0 && i + 1 < nx_ && j > 0 && j + 1 < ny_ && k > 0 && k + 1 < nz_;
  }

  std::span<const double> front() const { return front_; }
  std::span<double> front() { return front_; }
  std::span<const double> back() const { return back_; }
  std::span<double> back() { return back_; }

  double front_at(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return front_[index(i, j, k)];
  }

  /// Swap buffer roles at the end of a completed sweep.
  void swap_buffers();

  std::uint64_t generation() const { return generation_; }

  void fill(double value);

  /// Deterministic pseudo-random fill in [0,1), a pure function of
  /// (seed, site index). Both buffers get the same contents so boundary
  /// values stay fixed across sweeps.
  void fill_random(std::uint64_t seed);

 private:
  std::uint32_t nx_, ny_, nz_;
  std::vector<double> front_;
  std::vector<double> back_;
  std::uint64_t generation_ = 0;
};

/// A validated blocking of a grid. Construction rejects block extents that
/// do not divide the grid extents, naming the offending dimension.
class Decomposition {
 public:
  Decomposition(std::uint32_t nx, std::uint32_t ny, std::uint32_t nz, BlockSpec spec);

  const BlockSpec& spec() const { return spec_; }
  std::uint32_t num_i_blocks() const { return nbi_; }
  std::uint32_t num_j_blocks() const { return nbj_; }
  std::uint32_t num_k_blocks() const { return nbk_; }
  std::uint64_t num_blocks() const { return std::uint64_t{nbi_} * nbj_ * nbk_; }

  /// All blocks in kji order: kb outermost, jb, then ib innermost.
  std::vector<BlockIndex> blocks() const;

  bool contains(const BlockIndex& idx) const {
    return idx.ib < nbi_ && idx.jb < nbj_ && idx.kb < nbk_;
  }

  std::uint64_t linear_index(const BlockIndex& idx) const {
    return idx.ib + std::uint64_t{nbi_} * (idx.jb + std::uint64_t{nbj_} * idx.kb);
  }

 private:
  BlockSpec spec_;
  std::uint32_t nbi_, nbj_, nbk_;
};

/// Convenience wrapper: validate and enumerate in one call.
std::vector<BlockIndex> decompose(std::uint32_t nx, std::uint32_t ny, std::uint32_t nz,
                                  const BlockSpec& spec);

}  // namespace locq
