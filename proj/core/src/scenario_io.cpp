// SPDX-License-Identifier: Apache-2.0
#include "radiomap/scenario_io.hpp"

#include <fstream>
#include <string>

#include "radiomap/error.hpp"

namespace radiomap {

OccupancyMap load_map_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open map file");
    OccupancyMap map;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (map.cols == 0) map.cols = static_cast<int>(line.size());
        if (static_cast<int>(line.size()) != map.cols)
            throw ParseError(path.string(), lineno,
                             "row has " + std::to_string(line.size()) + " cells, expected " +
                                 std::to_string(map.cols));
        for (char c : line) {
            if (c == '.')
                map.cells.push_back(0);
            else if (c == '#')
                map.cells.push_back(1);
            else
                throw ParseError(path.string(), lineno,
                                 std::string("unknown map character `") + c + "`");
        }
        ++map.rows;
    }
    if (map.rows == 0) throw ParseError(path.string(), lineno, "map file is empty");
    return map;
}

void save_map_file(const OccupancyMap& map, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write map file " + path.string());
    for (int r = 0; r < map.rows; ++r) {
        for (int c = 0; c < map.cols; ++c)
            out.put(map.cells[static_cast<std::size_t>(r) * map.cols + c] ? '#' : '.');
        out.put('\n');
    }
}

UrbanScenario scenario_from_config(const KvConfig& cfg) {
    UrbanScenario sc;
    sc.width_m = cfg.get_double("area", "width_m");
    sc.height_m = cfg.get_double("area", "height_m");
    sc.grid_size_m = cfg.get_double_or("area", "grid_size_m", 5.0);
    sc.block_size_m = cfg.get_double_or("area", "block_size_m", 200.0);

    sc.frequencies_mhz = cfg.get_doubles("frequencies", "mhz");

    const std::string map_ref = cfg.get_string("map", "file");
    std::filesystem::path map_path(map_ref);
    if (map_path.is_relative()) {
        std::filesystem::path base(cfg.source_name());
        if (base.has_parent_path()) map_path = base.parent_path() / map_path;
    }
    OccupancyMap map = load_map_file(map_path);
    sc.occupancy = std::move(map.cells);
    if (map.rows != sc.rows() || map.cols != sc.cols())
        throw DataError("map file is " + std::to_string(map.rows) + "x" +
                        std::to_string(map.cols) + " grids, area expects " +
                        std::to_string(sc.rows()) + "x" + std::to_string(sc.cols()));

    const std::size_t k = sc.frequencies_mhz.size();
    for (const auto& e : cfg.entries("transmitters", "tx")) {
        auto vals = KvConfig::parse_doubles(e.value, cfg.source_name(), e.line);
        if (vals.size() != 3 && vals.size() != 2 + k)
            throw ParseError(cfg.source_name(), e.line,
                             "tx expects `row col power...` with 1 or " + std::to_string(k) +
                                 " power entries");
        TransmitterSpec tx;
        tx.row = static_cast<int>(vals[0]);
        tx.col = static_cast<int>(vals[1]);
        tx.tx_power_dbm.assign(vals.begin() + 2, vals.end());
        if (tx.tx_power_dbm.size() == 1) tx.tx_power_dbm.assign(k, tx.tx_power_dbm[0]);
        sc.transmitters.push_back(std::move(tx));
    }

    sc.validate();
    return sc;
}

UrbanScenario load_scenario(const std::filesystem::path& path) {
    return scenario_from_config(KvConfig::parse_file(path));
}

}  // namespace radiomap
