// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_METRICS_HPP
#define RADIOMAP_METRICS_HPP

#include <span>
#include <vector>

#include "radiomap/grid.hpp"

namespace radiomap {

struct BlockRmse {
    BlockIndex block;
    double rmse_db = 0.0;
    std::size_t node_count = 0;
};

// Root mean squared error over paired values; throws on empty or mismatched input.
double rmse(std::span<const double> pred, std::span<const double> truth);

BlockRmse rmse_block(BlockIndex b, std::span<const double> pred, std::span<const double> truth);

// Area aggregation: sqrt of the mean of squared block RMSEs.
double rmse_area(std::span<const BlockRmse> blocks);
double rmse_area(std::span<const double> block_rmses);

struct Histogram {
    double first_edge = 0.0;  // lower edge of counts[0]
    double bin_width = 0.0;
    std::vector<std::size_t> counts;

    std::size_t total() const;
};

// Fixed-width bins anchored at floor(min/width)*width. Empty input gives
// empty bins.
Histogram histogram(std::span<const double> values, double bin_width);

}  // namespace radiomap

#endif  // RADIOMAP_METRICS_HPP
