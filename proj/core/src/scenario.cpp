// SPDX-License-Identifier: Apache-2.0
#include "radiomap/scenario.hpp"

#include <cmath>
#include <string>

#include "radiomap/error.hpp"

namespace radiomap {

namespace {

bool is_multiple(double value, double unit) {
    if (unit <= 0.0) return false;
    const double q = value / unit;
    return std::abs(q - std::round(q)) < 1e-9 && std::round(q) >= 1.0;
}

}  // namespace

std::vector<GridIndex> UrbanScenario::block_grids(BlockIndex b) const {
    if (!block_in_bounds(b))
        throw DataError("block (" + std::to_string(b.row) + "," + std::to_string(b.col) +
                        ") outside the block partition");
    const int side = grids_per_block_side();
    std::vector<GridIndex> out;
    out.reserve(static_cast<std::size_t>(side) * side);
    const int r0 = b.row * side;
    const int c0 = b.col * side;
    for (int r = r0; r < r0 + side; ++r)
        for (int c = c0; c < c0 + side; ++c) out.push_back(GridIndex{r, c});
    return out;
}

std::size_t UrbanScenario::free_grid_count(BlockIndex b) const {
    std::size_t n = 0;
    for (const GridIndex& g : block_grids(b))
        if (!building(g)) ++n;
    return n;
}

int UrbanScenario::freq_index(double f_mhz) const {
    for (std::size_t k = 0; k < frequencies_mhz.size(); ++k)
        if (frequencies_mhz[k] == f_mhz) return static_cast<int>(k);
    return -1;
}

void UrbanScenario::validate() const {
    if (grid_size_m <= 0.0) throw DataError("grid_size_m must be positive");
    if (block_size_m <= 0.0) throw DataError("block_size_m must be positive");
    if (!is_multiple(width_m, grid_size_m))
        throw DataError("width_m (" + std::to_string(width_m) +
                        ") is not a positive multiple of grid_size_m");
    if (!is_multiple(height_m, grid_size_m))
        throw DataError("height_m (" + std::to_string(height_m) +
                        ") is not a positive multiple of grid_size_m");
    if (!is_multiple(width_m, block_size_m))
        throw DataError("width_m (" + std::to_string(width_m) +
                        ") is not a positive multiple of block_size_m");
    if (!is_multiple(height_m, block_size_m))
        throw DataError("height_m (" + std::to_string(height_m) +
                        ") is not a positive multiple of block_size_m");
    if (!is_multiple(block_size_m, grid_size_m))
        throw DataError("block_size_m is not a multiple of grid_size_m");
    if (occupancy.size() != grid_count())
        throw DataError("occupancy has " + std::to_string(occupancy.size()) +
                        " cells, expected " + std::to_string(grid_count()));

    if (frequencies_mhz.empty()) throw DataError("frequencies_mhz is empty");
    for (std::size_t k = 0; k < frequencies_mhz.size(); ++k) {
        if (frequencies_mhz[k] <= 0.0)
            throw DataError("frequencies_mhz must be positive");
        if (k > 0 && frequencies_mhz[k] <= frequencies_mhz[k - 1])
            throw DataError("frequencies_mhz must be strictly increasing");
    }

    for (std::size_t m = 0; m < transmitters.size(); ++m) {
        const TransmitterSpec& tx = transmitters[m];
        const std::string label = "transmitter " + std::to_string(m);
        if (!in_bounds(GridIndex{tx.row, tx.col}))
            throw DataError(label + " lies outside the area");
        if (building(tx.row, tx.col))
            throw DataError(label + " lies on a building grid");
        if (tx.tx_power_dbm.size() != frequencies_mhz.size())
            throw DataError(label + " has " + std::to_string(tx.tx_power_dbm.size()) +
                            " power entries, expected " +
                            std::to_string(frequencies_mhz.size()));
    }
}

std::vector<BlockIndex> blocks_with_free_grids(const UrbanScenario& sc) {
    std::vector<BlockIndex> out;
    for (int br = 0; br < sc.block_rows(); ++br)
        for (int bc = 0; bc < sc.block_cols(); ++bc) {
            const BlockIndex b{br, bc};
            if (sc.free_grid_count(b) > 0) out.push_back(b);
        }
    return out;
}

}  // namespace radiomap
