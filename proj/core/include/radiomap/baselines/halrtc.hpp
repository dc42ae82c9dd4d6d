// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_BASELINES_HALRTC_HPP
#define RADIOMAP_BASELINES_HALRTC_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace radiomap::baselines {

// Dense rows x cols x bands tensor with an observation mask.
struct MaskedTensor {
    int rows = 0;
    int cols = 0;
    int bands = 0;
    std::vector<double> values;          // row-major, band fastest
    std::vector<std::uint8_t> observed;  // same layout

    std::size_t index(int r, int c, int k) const {
        return (static_cast<std::size_t>(r) * cols + c) * bands + k;
    }
    std::size_t size() const { return static_cast<std::size_t>(rows) * cols * bands; }
};

struct HalrtcOptions {
    double rho = 1e-6;          // initial ADMM penalty
    int iterations = 1500;
    double rho_growth = 1.05;   // inexact-ALM escalation per iteration
    double rho_max = 1e8;
    std::array<double, 3> mode_weights = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    bool track_objective = true;
};

struct HalrtcResult {
    MaskedTensor completed;               // observed entries preserved exactly
    std::vector<double> objective_trace;  // sum of weighted unfolding nuclear norms
};

// High-accuracy low-rank tensor completion: ADMM over the three mode
// unfoldings' nuclear norms subject to agreement with the observed entries.
HalrtcResult halrtc(const MaskedTensor& input, const HalrtcOptions& opts);

// Paper-protocol convenience wrapper (rho, iteration count).
HalrtcResult halrtc(const MaskedTensor& input, double rho, int iterations);

}  // namespace radiomap::baselines

#endif  // RADIOMAP_BASELINES_HALRTC_HPP
