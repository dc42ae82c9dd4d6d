// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_FEATURES_HPP
#define RADIOMAP_FEATURES_HPP

#include <span>

#include "radiomap/graph.hpp"
#include "radiomap/neural/tensor.hpp"
#include "radiomap/scenario.hpp"

namespace radiomap {

// Min-max bounds of one feature channel. Throws on non-finite or lo >= hi.
struct ChannelBounds {
    double lo = 0.0;
    double hi = 1.0;

    ChannelBounds() = default;
    ChannelBounds(double lo_, double hi_);

    double normalize(double v) const { return (v - lo) / (hi - lo); }
    double denormalize(double u) const { return lo + u * (hi - lo); }
};

// Normalization bounds for all input channels. Position bounds span the grid
// centers of the whole area; frequency bounds span the scenario's frequency
// range (unit span when there is a single frequency); RSS bounds must come
// from measurements available in the training blocks only.
struct FeatureScaler {
    ChannelBounds rss;
    ChannelBounds x;
    ChannelBounds y;
    ChannelBounds freq;

    static FeatureScaler for_scenario(const UrbanScenario& sc, ChannelBounds rss_bounds);
};

// Node features, one row per node:
//   [rss_norm, x_norm, y_norm, f_obv_norm, f_target_norm]
// The RSS channel is 0 at unobserved nodes and clamped to [0,1] at observed
// ones; the remaining channels are exact min-max normalizations.
neural::Tensor assemble_features(std::span<const RadioNode> nodes, double f_obv_mhz,
                                 double f_target_mhz, const FeatureScaler& scaler);

constexpr std::size_t kFeatureDim = 5;

}  // namespace radiomap

#endif  // RADIOMAP_FEATURES_HPP
