// SPDX-License-Identifier: Apache-2.0
#include "radiomap/sampling.hpp"

#include <cmath>

#include "radiomap/error.hpp"
#include "radiomap/rng.hpp"

namespace radiomap {

BlockSplit make_block_split(const UrbanScenario& sc, double b1_fraction, std::uint64_t seed) {
    if (b1_fraction <= 0.0 || b1_fraction >= 1.0)
        throw DataError("b1 fraction must lie strictly between 0 and 1");
    std::vector<BlockIndex> blocks = blocks_with_free_grids(sc);
    if (blocks.size() < 2) throw DataError("need at least two non-empty blocks to split");
    Rng rng(mix_seed(seed, "split"));
    rng.shuffle(blocks);
    const std::size_t n1 = static_cast<std::size_t>(
        std::llround(b1_fraction * static_cast<double>(blocks.size())));
    BlockSplit split;
    split.b1.assign(blocks.begin(), blocks.begin() + std::max<std::size_t>(1, n1));
    split.b2.assign(blocks.begin() + split.b1.size(), blocks.end());
    if (split.b2.empty()) {
        split.b2.push_back(split.b1.back());
        split.b1.pop_back();
    }
    return split;
}

std::vector<GridIndex> block_free_grid_permutation(const UrbanScenario& sc, BlockIndex b,
                                                   std::uint64_t seed) {
    std::vector<GridIndex> grids;
    for (const GridIndex& g : sc.block_grids(b))
        if (!sc.building(g)) grids.push_back(g);
    Rng rng(mix_seed(seed, "block-perm", static_cast<std::uint64_t>(b.row) << 20 |
                                             static_cast<std::uint64_t>(b.col)));
    rng.shuffle(grids);
    return grids;
}

std::vector<GridIndex> sampled_grids(const UrbanScenario& sc, BlockIndex b, double rate,
                                     std::uint64_t seed) {
    if (rate < 0.0 || rate > 1.0) throw DataError("sampling rate must be in [0,1]");
    std::vector<GridIndex> perm = block_free_grid_permutation(sc, b, seed);
    const std::size_t n =
        static_cast<std::size_t>(std::ceil(rate * static_cast<double>(perm.size())));
    perm.resize(std::min(n, perm.size()));
    return perm;
}

std::vector<std::uint8_t> observation_mask(const UrbanScenario& sc, double rate,
                                           std::uint64_t seed) {
    std::vector<std::uint8_t> mask(sc.grid_count(), 0);
    for (const BlockIndex& b : blocks_with_free_grids(sc))
        for (const GridIndex& g : sampled_grids(sc, b, rate, seed))
            mask[sc.cell_index(g)] = 1;
    return mask;
}

}  // namespace radiomap
