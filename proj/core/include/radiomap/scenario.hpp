// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_SCENARIO_HPP
#define RADIOMAP_SCENARIO_HPP

#include <cstdint>
#include <vector>

#include "radiomap/grid.hpp"

namespace radiomap {

struct TransmitterSpec {
    int row = 0;
    int col = 0;
    // One entry per scenario frequency (a single entry is broadcast at load time).
    std::vector<double> tx_power_dbm;
};

// Urban grid geometry: occupancy raster, transmitters, frequency plan and the
// block partition. Rows grow southward from the northwest corner.
class UrbanScenario {
public:
    double width_m = 0.0;   // east-west extent
    double height_m = 0.0;  // north-south extent
    double grid_size_m = 5.0;
    double block_size_m = 200.0;
    std::vector<std::uint8_t> occupancy;  // rows*cols, 1 = building
    std::vector<TransmitterSpec> transmitters;
    std::vector<double> frequencies_mhz;  // strictly increasing

    int rows() const { return static_cast<int>(height_m / grid_size_m + 0.5); }
    int cols() const { return static_cast<int>(width_m / grid_size_m + 0.5); }
    std::size_t grid_count() const { return static_cast<std::size_t>(rows()) * cols(); }

    bool in_bounds(GridIndex g) const {
        return g.row >= 0 && g.row < rows() && g.col >= 0 && g.col < cols();
    }
    std::size_t cell_index(GridIndex g) const {
        return static_cast<std::size_t>(g.row) * cols() + g.col;
    }
    bool building(GridIndex g) const { return occupancy[cell_index(g)] != 0; }
    bool building(int row, int col) const { return building(GridIndex{row, col}); }

    // Grid-center position in global meters (x eastward, y southward).
    Vec2 center_m(GridIndex g) const {
        return Vec2{(g.col + 0.5) * grid_size_m, (g.row + 0.5) * grid_size_m};
    }

    int grids_per_block_side() const {
        return static_cast<int>(block_size_m / grid_size_m + 0.5);
    }
    int block_rows() const { return static_cast<int>(height_m / block_size_m + 0.5); }
    int block_cols() const { return static_cast<int>(width_m / block_size_m + 0.5); }
    int block_count() const { return block_rows() * block_cols(); }
    bool block_in_bounds(BlockIndex b) const {
        return b.row >= 0 && b.row < block_rows() && b.col >= 0 && b.col < block_cols();
    }
    BlockIndex block_of(GridIndex g) const {
        const int side = grids_per_block_side();
        return BlockIndex{g.row / side, g.col / side};
    }

    // Row-major list of the (block_size/grid_size)^2 grids of block b.
    std::vector<GridIndex> block_grids(BlockIndex b) const;

    // Count of non-building grids in block b.
    std::size_t free_grid_count(BlockIndex b) const;

    int freq_index(double f_mhz) const;  // -1 when absent

    // Throws DataError naming the offending field when an invariant is violated.
    void validate() const;
};

// Blocks containing at least one non-building grid, row-major order.
std::vector<BlockIndex> blocks_with_free_grids(const UrbanScenario& sc);

}  // namespace radiomap

#endif  // RADIOMAP_SCENARIO_HPP
