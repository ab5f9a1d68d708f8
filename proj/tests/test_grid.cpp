#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "locq/grid.hpp"

using namespace locq;

namespace {

// Independent enumeration oracle: a literal triple loop, kept free of the
// Decomposition implementation.
std::vector<BlockIndex> nested_loop_blocks(std::uint32_t nbi, std::uint32_t nbj,
                                           std::uint32_t nbk) {
  std::vector<BlockIndex> out;
  for (std::uint32_t kb = 0; kb < nbk; ++kb)
    for (std::uint32_t jb = 0; jb < nbj; ++jb)
      for (std::uint32_t ib = 0; ib < nbi; ++ib) out.push_back(BlockIndex{ib, jb, kb});
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("grid");

TEST_CASE("decompose: reference 600^3 blocking yields 3600 blocks, 60 per layer") {
  const Decomposition dec(600, 600, 600, BlockSpec{600, 10, 10});
  CHECK(dec.num_i_blocks() == 1);
  CHECK(dec.num_j_blocks() == 60);
  CHECK(dec.num_k_blocks() == 60);
  const auto blocks = dec.blocks();
  REQUIRE(blocks.size() == 3600);
  // One ib-jb layer comprises 60 blocks; the first layer is enumerated first.
  for (std::size_t n = 0; n < 60; ++n) {
    CHECK(blocks[n].kb == 0);
    CHECK(blocks[n].jb == n);
  }
  CHECK(blocks[60].kb == 1);
}

TEST_CASE("decompose: whole-grid block") {
  const auto blocks = decompose(10, 10, 10, BlockSpec{10, 10, 10});
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0] == BlockIndex{0, 0, 0});
}

TEST_CASE("decompose: enumeration order matches the nested-loop oracle") {
  const auto blocks = decompose(24, 24, 24, BlockSpec{24, 4, 4});
  REQUIRE(blocks.size() == 36);
  CHECK(blocks == nested_loop_blocks(1, 6, 6));

  const auto blocks2 = decompose(24, 24, 24, BlockSpec{8, 12, 6});
  CHECK(blocks2 == nested_loop_blocks(3, 2, 4));
}

TEST_CASE("decompose: non-divisible extents are rejected naming the dimension") {
  CHECK_THROWS_WITH_AS(Decomposition(25, 24, 24, BlockSpec{24, 4, 4}),
                       doctest::Contains("nx"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(Decomposition(24, 25, 24, BlockSpec{24, 4, 4}),
                       doctest::Contains("ny"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(Decomposition(24, 24, 25, BlockSpec{24, 4, 4}),
                       doctest::Contains("nz"), std::invalid_argument);
  CHECK_THROWS_AS(Decomposition(24, 24, 24, BlockSpec{0, 4, 4}), std::invalid_argument);
}

TEST_CASE("block_site_range: origin and offset blocks") {
  const BlockSpec spec{600, 10, 10};
  const SiteRange origin = block_site_range(BlockIndex{0, 0, 0}, spec);
  CHECK(origin.i0 == 0);
  CHECK(origin.i1 == 599);
  CHECK(origin.j0 == 0);
  CHECK(origin.j1 == 9);
  CHECK(origin.k0 == 0);
  CHECK(origin.k1 == 9);

  const SiteRange off = block_site_range(BlockIndex{0, 2, 3}, spec);
  CHECK(off.i0 == 0);
  CHECK(off.i1 == 599);
  CHECK(off.j0 == 20);
  CHECK(off.j1 == 29);
  CHECK(off.k0 == 30);
  CHECK(off.k1 == 39);
}

TEST_CASE("block_site_range: blocks tile the grid exactly once") {
  const std::uint32_t n = 24;
  const BlockSpec spec{24, 4, 4};
  std::vector<std::uint32_t> hits(n * n * n, 0);
  for (const BlockIndex& b : decompose(n, n, n, spec)) {
    const SiteRange r = block_site_range(b, spec);
    for (std::uint32_t k = r.k0; k <= r.k1; ++k)
      for (std::uint32_t j = r.j0; j <= r.j1; ++j)
        for (std::uint32_t i = r.i0; i <= r.i1; ++i)
          ++hits[i + n * (j + std::size_t{n} * k)];
  }
  CHECK(hits.size() == 13824);
  for (std::uint32_t h : hits) REQUIRE(h == 1);
}

TEST_CASE("tiling holds for assorted specs") {
  struct Case {
    std::uint32_t nx, ny, nz;
    BlockSpec spec;
  };
  const Case cases[] = {
      {12, 8, 6, BlockSpec{4, 2, 3}},
      {10, 10, 10, BlockSpec{10, 10, 10}},
      {16, 16, 16, BlockSpec{16, 1, 4}},
      {6, 30, 18, BlockSpec{2, 5, 6}},
  };
  for (const Case& c : cases) {
    CAPTURE(c.nx);
    std::vector<std::uint8_t> hit(std::size_t{c.nx} * c.ny * c.nz, 0);
    std::uint64_t covered = 0;
    for (const BlockIndex& b : decompose(c.nx, c.ny, c.nz, c.spec)) {
      const SiteRange r = block_site_range(b, c.spec);
      for (std::uint32_t k = r.k0; k <= r.k1; ++k)
        for (std::uint32_t j = r.j0; j <= r.j1; ++j)
          for (std::uint32_t i = r.i0; i <= r.i1; ++i) {
            std::uint8_t& h = hit[i + std::size_t{c.nx} * (j + std::size_t{c.ny} * k)];
            REQUIRE(h == 0);
            h = 1;
            ++covered;
          }
    }
    CHECK(covered == std::uint64_t{c.nx} * c.ny * c.nz);
  }
}

TEST_CASE("linear index round-trip") {
  const Grid3D grid(5, 7, 3);
  std::set<std::size_t> seen;
  for (std::uint32_t k = 0; k < 3; ++k)
    for (std::uint32_t j = 0; j < 7; ++j)
      for (std::uint32_t i = 0; i < 5; ++i) {
        const std::size_t n = grid.index(i, j, k);
        REQUIRE(n < grid.num_sites());
        // delinearize with the documented layout: i fastest
        CHECK(n % 5 == i);
        CHECK((n / 5) % 7 == j);
        CHECK(n / 35 == k);
        seen.insert(n);
      }
  CHECK(seen.size() == grid.num_sites());
}

TEST_CASE("swap_buffers flips roles and bumps the generation") {
  Grid3D grid(4, 4, 4);
  grid.fill(1.0);
  grid.back()[grid.index(1, 1, 1)] = 7.0;
  CHECK(grid.generation() == 0);
  grid.swap_buffers();
  CHECK(grid.generation() == 1);
  CHECK(grid.front_at(1, 1, 1) == 7.0);
}

TEST_CASE("fill_random is reproducible and buffers start identical") {
  Grid3D a(6, 6, 6);
  Grid3D b(6, 6, 6);
  a.fill_random(42);
  b.fill_random(42);
  for (std::size_t n = 0; n < a.num_sites(); ++n) {
    REQUIRE(a.front()[n] == b.front()[n]);
    REQUIRE(a.front()[n] == a.back()[n]);
    REQUIRE(a.front()[n] >= 0.0);
    REQUIRE(a.front()[n] < 1.0);
  }
  b.fill_random(43);
  CHECK(a.front()[0] != b.front()[0]);
}

TEST_SUITE_END();
