// SPDX-License-Identifier: Apache-2.0
#include "radiomap/features.hpp"

#include <algorithm>
#include <cmath>

#include "radiomap/error.hpp"

namespace radiomap {

ChannelBounds::ChannelBounds(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo >= hi)
        throw DataError("degenerate normalization bounds [" + std::to_string(lo_) + ", " +
                        std::to_string(hi_) + "]");
}

FeatureScaler FeatureScaler::for_scenario(const UrbanScenario& sc, ChannelBounds rss_bounds) {
    FeatureScaler s;
    s.rss = rss_bounds;
    const double half = 0.5 * sc.grid_size_m;
    s.x = ChannelBounds(half, sc.width_m - half);
    s.y = ChannelBounds(half, sc.height_m - half);
    if (sc.frequencies_mhz.size() >= 2)
        s.freq = ChannelBounds(sc.frequencies_mhz.front(), sc.frequencies_mhz.back());
    else
        // Single-band scenario: unit span keeps the channel defined (norm 0).
        s.freq = ChannelBounds(sc.frequencies_mhz.front(), sc.frequencies_mhz.front() + 1.0);
    return s;
}

neural::Tensor assemble_features(std::span<const RadioNode> nodes, double f_obv_mhz,
                                 double f_target_mhz, const FeatureScaler& scaler) {
    neural::Tensor x = neural::Tensor::zeros(nodes.size(), kFeatureDim);
    const double fo = scaler.freq.normalize(f_obv_mhz);
    const double ft = scaler.freq.normalize(f_target_mhz);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const RadioNode& n = nodes[i];
        double rss = 0.0;  // unobserved nodes carry 0
        if (n.observed_rss_dbm)
            rss = std::clamp(scaler.rss.normalize(*n.observed_rss_dbm), 0.0, 1.0);
        x.at(i, 0) = rss;
        x.at(i, 1) = scaler.x.normalize(n.position_m.x);
        x.at(i, 2) = scaler.y.normalize(n.position_m.y);
        x.at(i, 3) = fo;
        x.at(i, 4) = ft;
    }
    return x;
}

}  // namespace radiomap
