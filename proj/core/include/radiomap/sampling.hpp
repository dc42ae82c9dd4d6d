// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_SAMPLING_HPP
#define RADIOMAP_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "radiomap/scenario.hpp"

namespace radiomap {

// Training / inference block split. b1 trains, b2 is evaluated.
struct BlockSplit {
    std::vector<BlockIndex> b1;
    std::vector<BlockIndex> b2;
};

// Seeded random split over blocks with at least one free grid. b1 receives
// round(fraction * count) blocks.
BlockSplit make_block_split(const UrbanScenario& sc, double b1_fraction, std::uint64_t seed);

// Seeded permutation of the free grids of block b. Fixed per (seed, block), so
// prefixes of different rates are nested subsets of each other.
std::vector<GridIndex> block_free_grid_permutation(const UrbanScenario& sc, BlockIndex b,
                                                   std::uint64_t seed);

// First ceil(rate * free_count) grids of the block permutation.
std::vector<GridIndex> sampled_grids(const UrbanScenario& sc, BlockIndex b, double rate,
                                     std::uint64_t seed);

// Whole-area observation mask (rows*cols flags) at the given per-block rate.
std::vector<std::uint8_t> observation_mask(const UrbanScenario& sc, double rate,
                                           std::uint64_t seed);

}  // namespace radiomap

#endif  // RADIOMAP_SAMPLING_HPP
