// SPDX-License-Identifier: Apache-2.0
#include "radiomap/synthetic.hpp"

#include <algorithm>
#include <cmath>

#include "radiomap/error.hpp"
#include "radiomap/rng.hpp"

namespace radiomap {

std::vector<std::uint8_t> random_occupancy(int rows, int cols, double density,
                                           std::uint64_t seed, BuildingStyle style) {
    if (rows <= 0 || cols <= 0) throw DataError("occupancy dimensions must be positive");
    if (density < 0.0 || density >= 1.0) throw DataError("building density must be in [0,1)");
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(rows) * cols, 0);
    Rng rng(mix_seed(seed, "occupancy"));

    if (style == BuildingStyle::Scatter) {
        for (auto& c : cells) c = rng.uniform() < density ? 1 : 0;
        return cells;
    }

    // Rectangles of 2..8 grids per side until the density target is met.
    const std::size_t target = static_cast<std::size_t>(density * rows * cols);
    std::size_t filled = 0;
    int attempts = 0;
    const int max_attempts = 50 * rows;  // bail out on pathological densities
    while (filled < target && attempts < max_attempts) {
        ++attempts;
        const int h = 2 + static_cast<int>(rng.bounded(7));
        const int w = 2 + static_cast<int>(rng.bounded(7));
        if (h >= rows || w >= cols) continue;
        const int r0 = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(rows - h)));
        const int c0 = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(cols - w)));
        for (int r = r0; r < r0 + h; ++r)
            for (int c = c0; c < c0 + w; ++c) {
                auto& cell = cells[static_cast<std::size_t>(r) * cols + c];
                if (!cell) {
                    cell = 1;
                    ++filled;
                }
            }
    }
    return cells;
}

UrbanScenario make_synthetic_scenario(double width_m, double height_m, double grid_size_m,
                                      double block_size_m, std::vector<double> frequencies_mhz,
                                      int transmitter_count, double tx_power_dbm,
                                      double building_density, std::uint64_t seed,
                                      BuildingStyle style) {
    UrbanScenario sc;
    sc.width_m = width_m;
    sc.height_m = height_m;
    sc.grid_size_m = grid_size_m;
    sc.block_size_m = block_size_m;
    sc.frequencies_mhz = std::move(frequencies_mhz);
    sc.occupancy = random_occupancy(static_cast<int>(height_m / grid_size_m + 0.5),
                                    static_cast<int>(width_m / grid_size_m + 0.5),
                                    building_density, seed, style);

    // Spread transmitters on a coarse ring around the area center, jittered,
    // then clear buildings around each site.
    Rng rng(mix_seed(seed, "transmitters"));
    const int rows = sc.rows(), cols = sc.cols();
    for (int m = 0; m < transmitter_count; ++m) {
        const double angle = 2.0 * 3.14159265358979323846 * (m + 0.25) / transmitter_count;
        int r = static_cast<int>(rows * (0.5 + 0.3 * std::sin(angle)));
        int c = static_cast<int>(cols * (0.5 + 0.3 * std::cos(angle)));
        r = std::clamp(r + static_cast<int>(rng.bounded(5)) - 2, 0, rows - 1);
        c = std::clamp(c + static_cast<int>(rng.bounded(5)) - 2, 0, cols - 1);
        sc.occupancy[sc.cell_index(GridIndex{r, c})] = 0;
        TransmitterSpec tx;
        tx.row = r;
        tx.col = c;
        tx.tx_power_dbm.assign(sc.frequencies_mhz.size(), tx_power_dbm);
        sc.transmitters.push_back(std::move(tx));
    }

    sc.validate();
    return sc;
}

}  // namespace radiomap
