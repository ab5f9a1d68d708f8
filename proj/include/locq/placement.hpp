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
#include <span>
#include <vector>

#include "locq/grid.hpp"

namespace locq {

/// Simulated machine shape: a fixed number of locality domains (one memory
/// bus each) and a fixed number of threads per domain. Threads fill domains
/// compactly: thread t lives in domain t / threads_per_domain.
class Topology {
 public:
  Topology(std::uint32_t num_domains, std::uint32_t threads_per_domain);

  std::uint32_t num_domains() const { return num_domains_; }
  std::uint32_t threads_per_domain() const { return threads_per_domain_; }
  std::uint32_t total_threads() const { return num_domains_ * threads_per_domain_; }

  std::uint32_t domain_of_thread(std::uint32_t thread) const {
    return thread / threads_per_domain_;
  }

 private:
  std::uint32_t num_domains_;
  std::uint32_t threads_per_domain_;
};

/// Loop schedule used for the simulated first-touch initialization pass.
enum class InitSchedule {
  Static,        ///< contiguous near-equal chunks of kb-layers per thread
  StaticChunk1,  ///< round robin: layer b goes to thread b mod T
  ForceLD0,      ///< every block homed in domain 0
};

/// Block-granularity home-domain assignment. Immutable once built.
class PlacementMap {
 public:
  PlacementMap(std::uint32_t nbi, std::uint32_t nbj, std::uint32_t nbk,
               std::vector<std::uint32_t> home_by_layer);

  std::uint32_t home(const BlockIndex& idx) const { return home_by_layer_[idx.kb]; }

  std::uint32_t num_i_blocks() const { return nbi_; }
  std::uint32_t num_j_blocks() const { return nbj_; }
  std::uint32_t num_k_blocks() const { return nbk_; }
  std::uint64_t num_blocks() const { return std::uint64_t{nbi_} * nbj_ * nbk_; }

  /// Home domain of every block sharing the given kb-layer.
  std::uint32_t layer_home(std::uint32_t kb) const { return home_by_layer_[kb]; }

 private:
  std::uint32_t nbi_, nbj_, nbk_;
  std::vector<std::uint32_t> home_by_layer_;
};

/// Layer range [begin, end) owned by one thread under a static schedule.
/// Boundaries are floor(t * num_items / num_threads), i.e. chunk sizes are
/// as equal as possible with the remainder spread across the team.
std::pair<std::uint32_t, std::uint32_t> static_chunk_range(std::uint32_t num_items,
                                                           std::uint32_t num_threads,
                                                           std::uint32_t thread);

/// Inverse of static_chunk_range: which thread owns the given item.
std::uint32_t static_chunk_owner(std::uint32_t num_items, std::uint32_t num_threads,
                                 std::uint32_t item);

/// Simulate parallel first-touch initialization at block granularity.
/// The initialization loop is workshared over the outer kb loop, so all
/// blocks of one kb-layer land in the home domain of the owning thread.
/// `blocks` must be the decomposition enumerated in initialization order.
PlacementMap first_touch(std::span<const BlockIndex> blocks, const Topology& topo,
                         InitSchedule schedule);

}  // namespace locq
