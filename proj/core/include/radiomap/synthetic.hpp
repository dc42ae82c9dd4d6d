// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_SYNTHETIC_HPP
#define RADIOMAP_SYNTHETIC_HPP

#include <cstdint>
#include <vector>

#include "radiomap/scenario.hpp"

namespace radiomap {

enum class BuildingStyle {
    Scatter,  // per-cell Bernoulli(density)
    Blocks,   // random axis-aligned rectangles until density is reached
};

// Seeded random occupancy raster with roughly the requested building density.
std::vector<std::uint8_t> random_occupancy(int rows, int cols, double density,
                                           std::uint64_t seed,
                                           BuildingStyle style = BuildingStyle::Blocks);

// Assemble a validated scenario over a random map. Transmitter cells are
// cleared of buildings; positions are spread over the area deterministically.
UrbanScenario make_synthetic_scenario(double width_m, double height_m, double grid_size_m,
                                      double block_size_m, std::vector<double> frequencies_mhz,
                                      int transmitter_count, double tx_power_dbm,
                                      double building_density, std::uint64_t seed,
                                      BuildingStyle style = BuildingStyle::Blocks);

}  // namespace radiomap

#endif  // RADIOMAP_SYNTHETIC_HPP
