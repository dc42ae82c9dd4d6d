// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_SCENARIO_IO_HPP
#define RADIOMAP_SCENARIO_IO_HPP

#include <filesystem>
#include <vector>

#include "radiomap/kvconfig.hpp"
#include "radiomap/scenario.hpp"

namespace radiomap {

// Occupancy raster: one character per grid, `.` free, `#` building, rows
// newline-separated, row-major from the northwest corner.
struct OccupancyMap {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> cells;
};

OccupancyMap load_map_file(const std::filesystem::path& path);
void save_map_file(const OccupancyMap& map, const std::filesystem::path& path);

// Build a scenario from the [area], [map], [frequencies] and [transmitters]
// sections of an already-parsed config. Map paths resolve relative to the
// config file's directory. Validates all scenario invariants.
UrbanScenario scenario_from_config(const KvConfig& cfg);

// Parse + validate a scenario file.
UrbanScenario load_scenario(const std::filesystem::path& path);

}  // namespace radiomap

#endif  // RADIOMAP_SCENARIO_IO_HPP
