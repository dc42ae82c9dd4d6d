// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_NEURAL_LOSS_HPP
#define RADIOMAP_NEURAL_LOSS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "radiomap/error.hpp"

namespace radiomap::neural {

// Masked mean squared error: (1/N) * sum_n mask_n * (truth_n - pred_n)^2,
// N = total node count (masked and unmasked alike).
inline double masked_mse_loss(std::span<const double> pred, std::span<const double> truth,
                              std::span<const std::uint8_t> mask) {
    if (pred.size() != truth.size() || pred.size() != mask.size())
        throw DataError("masked_mse_loss: length mismatch");
    if (pred.empty()) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (!mask[i]) continue;
        const double e = truth[i] - pred[i];
        sum += e * e;
    }
    return sum / static_cast<double>(pred.size());
}

// dL/dpred: exactly zero at unmasked nodes.
inline std::vector<double> masked_mse_grad(std::span<const double> pred,
                                           std::span<const double> truth,
                                           std::span<const std::uint8_t> mask) {
    if (pred.size() != truth.size() || pred.size() != mask.size())
        throw DataError("masked_mse_grad: length mismatch");
    std::vector<double> g(pred.size(), 0.0);
    const double scale = 2.0 / static_cast<double>(pred.size());
    for (std::size_t i = 0; i < pred.size(); ++i)
        if (mask[i]) g[i] = scale * (pred[i] - truth[i]);
    return g;
}

}  // namespace radiomap::neural

#endif  // RADIOMAP_NEURAL_LOSS_HPP
