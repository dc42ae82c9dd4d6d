// SPDX-License-Identifier: Apache-2.0
#include "radiomap/metrics.hpp"

#include <cmath>

#include "radiomap/error.hpp"

namespace radiomap {

double rmse(std::span<const double> pred, std::span<const double> truth) {
    if (pred.size() != truth.size()) throw DataError("rmse: length mismatch");
    if (pred.empty()) throw DataError("rmse: empty input");
    double sum = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        const double e = truth[i] - pred[i];
        sum += e * e;
    }
    return std::sqrt(sum / static_cast<double>(pred.size()));
}

BlockRmse rmse_block(BlockIndex b, std::span<const double> pred,
                     std::span<const double> truth) {
    return BlockRmse{b, rmse(pred, truth), pred.size()};
}

double rmse_area(std::span<const double> block_rmses) {
    if (block_rmses.empty()) throw DataError("rmse_area: no blocks");
    double sum = 0.0;
    for (double r : block_rmses) sum += r * r;
    return std::sqrt(sum / static_cast<double>(block_rmses.size()));
}

double rmse_area(std::span<const BlockRmse> blocks) {
    std::vector<double> values;
    values.reserve(blocks.size());
    for (const BlockRmse& b : blocks) values.push_back(b.rmse_db);
    return rmse_area(std::span<const double>(values));
}

std::size_t Histogram::total() const {
    std::size_t n = 0;
    for (std::size_t c : counts) n += c;
    return n;
}

Histogram histogram(std::span<const double> values, double bin_width) {
    if (bin_width <= 0.0) throw DataError("histogram: bin width must be positive");
    Histogram h;
    h.bin_width = bin_width;
    if (values.empty()) return h;
    double lo = values[0], hi = values[0];
    for (double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const long first = static_cast<long>(std::floor(lo / bin_width));
    const long last = static_cast<long>(std::floor(hi / bin_width));
    h.first_edge = static_cast<double>(first) * bin_width;
    h.counts.assign(static_cast<std::size_t>(last - first + 1), 0);
    for (double v : values) {
        long bin = static_cast<long>(std::floor(v / bin_width)) - first;
        bin = std::min<long>(std::max<long>(bin, 0),
                             static_cast<long>(h.counts.size()) - 1);
        ++h.counts[static_cast<std::size_t>(bin)];
    }
    return h;
}

}  // namespace radiomap
