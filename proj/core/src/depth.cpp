// SPDX-License-Identifier: Apache-2.0
#include "radiomap/depth.hpp"

#include <cmath>
#include <limits>

#include "radiomap/error.hpp"
#include "radiomap/geometry.hpp"

namespace radiomap {

DepthMap::DepthMap(int rows, int cols, double f_mhz)
    : rows_(rows), cols_(cols), f_mhz_(f_mhz),
      values_(static_cast<std::size_t>(rows) * cols,
              std::numeric_limits<double>::quiet_NaN()) {}

std::vector<double> los_sum_to_transmitters(const UrbanScenario& sc) {
    std::vector<double> sums(sc.grid_count(), 0.0);
    for (const TransmitterSpec& tx : sc.transmitters) {
        const GridIndex tg{tx.row, tx.col};
        for (int r = 0; r < sc.rows(); ++r)
            for (int c = 0; c < sc.cols(); ++c) {
                const GridIndex g{r, c};
                if (sc.building(g)) continue;
                sums[sc.cell_index(g)] += los_fraction(sc, g, tg);
            }
    }
    return sums;
}

DepthMap radio_depth_map(const UrbanScenario& sc, const DepthParams& p, double f_mhz) {
    return radio_depth_map(sc, p, f_mhz, los_sum_to_transmitters(sc));
}

DepthMap radio_depth_map(const UrbanScenario& sc, const DepthParams& p, double f_mhz,
                         const std::vector<double>& los_sums) {
    if (f_mhz <= 0.0) throw DataError("radio_depth_map: frequency must be positive");
    if (p.beta <= 0.0) throw DataError("radio_depth_map: beta must be positive");
    if (los_sums.size() != sc.grid_count())
        throw DataError("radio_depth_map: los_sums size mismatch");
    DepthMap d(sc.rows(), sc.cols(), f_mhz);
    const double scale = p.beta * std::log10(f_mhz);
    for (int r = 0; r < sc.rows(); ++r)
        for (int c = 0; c < sc.cols(); ++c) {
            const GridIndex g{r, c};
            if (sc.building(g)) continue;
            d.set(g, scale * los_sums[sc.cell_index(g)]);
        }
    return d;
}

DepthMap radio_depth_exact(const UrbanScenario& sc, const DepthParams& p, double f_mhz,
                           int transmitter) {
    if (f_mhz <= 0.0) throw DataError("radio_depth_exact: frequency must be positive");
    if (transmitter < 0 || transmitter >= static_cast<int>(sc.transmitters.size()))
        throw DataError("radio_depth_exact: transmitter index out of range");
    const TransmitterSpec& tx = sc.transmitters[static_cast<std::size_t>(transmitter)];
    const GridIndex tg{tx.row, tx.col};
    const Vec2 tp = sc.center_m(tg);
    const double dist_floor = 0.5 * sc.grid_size_m;

    DepthMap d(sc.rows(), sc.cols(), f_mhz);
    const double freq_term = p.beta * std::log10(f_mhz);
    for (int r = 0; r < sc.rows(); ++r)
        for (int c = 0; c < sc.cols(); ++c) {
            const GridIndex g{r, c};
            if (sc.building(g)) continue;
            const Vec2 gp = sc.center_m(g);
            const double dist = std::max(std::hypot(gp.x - tp.x, gp.y - tp.y), dist_floor);
            const double t = los_fraction(sc, g, tg);
            d.set(g, t * (p.c - p.alpha * std::log10(dist) - freq_term));
        }
    return d;
}

}  // namespace radiomap
