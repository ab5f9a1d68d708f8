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

#include "locq/placement.hpp"

#include <stdexcept>
#include <string>

namespace locq {

Topology::Topology(std::uint32_t num_domains, std::uint32_t threads_per_domain)
    : num_domains_(num_domains), threads_per_domain_(threads_per_domain) {
  if (num_domains == 0 || threads_per_domain == 0) {
    throw std::invalid_argument("Topology: domains and threads per domain must be positive");
  }
}

PlacementMap::PlacementMap(std::uint32_t nbi, std::uint32_t nbj, std::uint32_t nbk,
                           std::vector<std::uint32_t> home_by_layer)
    : nbi_(nbi), nbj_(nbj), nbk_(nbk), home_by_layer_(std::move(home_by_layer)) {
  if (home_by_layer_.size() != nbk_) {
    throw std::invalid_argument("PlacementMap: one home per kb-layer required");
  }
}

std::pair<std::uint32_t, std::uint32_t> static_chunk_range(std::uint32_t num_items,
                                                           std::uint32_t num_threads,
                                                           std::uint32_t thread) {
  const std::uint64_t begin = std::uint64_t{thread} * num_items / num_threads;
  const std::uint64_t end = (std::uint64_t{thread} + 1) * num_items / num_threads;
  return {static_cast<std::uint32_t>(begin), static_cast<std::uint32_t>(end)};
}

std::uint32_t static_chunk_owner(std::uint32_t num_items, std::uint32_t num_threads,
                                 std::uint32_t item) {
  // Smallest t with (t+1)*num_items/num_threads > item.
  const std::uint32_t owner = static_cast<std::uint32_t>(
      ((std::uint64_t{item} + 1) * num_threads - 1) / num_items);
  return owner;
}

PlacementMap first_touch(std::span<const BlockIndex> blocks, const Topology& topo,
                         InitSchedule schedule) {
  if (blocks.empty()) {
    throw std::invalid_argument("first_touch: empty block list");
  }

  std::uint32_t nbi = 0, nbj = 0, nbk = 0;
  for (const BlockIndex& b : blocks) {
    nbi = std::max(nbi, b.ib + 1);
    nbj = std::max(nbj, b.jb + 1);
    nbk = std::max(nbk, b.kb + 1);
  }
  if (std::uint64_t{nbi} * nbj * nbk != blocks.size()) {
    throw std::invalid_argument("first_touch: block list is not a full decomposition");
  }

  const std::uint32_t threads = topo.total_threads();
  std::vector<std::uint32_t> home(nbk, 0);
  switch (schedule) {
    case InitSchedule::Static:
      for (std::uint32_t kb = 0; kb < nbk; ++kb) {
        home[kb] = topo.domain_of_thread(static_chunk_owner(nbk, threads, kb));
      }
      break;
    case InitSchedule::StaticChunk1:
      for (std::uint32_t kb = 0; kb < nbk; ++kb) {
        home[kb] = topo.domain_of_thread(kb % threads);
      }
      break;
    case InitSchedule::ForceLD0:
      break;  // all zero
  }
  return PlacementMap(nbi, nbj, nbk, std::move(home));
}

}  // namespace locq
