// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_DEPTH_HPP
#define RADIOMAP_DEPTH_HPP

#include <vector>

#include "radiomap/grid.hpp"
#include "radiomap/scenario.hpp"

namespace radiomap {

// Radio-depth and depth-based edge parameters.
struct DepthParams {
    double beta = 10.0;    // frequency-decay weight of the depth term
    double c0 = 0.0;       // constant absorbed by the approximate form (diagnostic only)
    double c = 0.0;        // constant fading of the exact form
    double alpha = 0.0;    // distance-decay weight of the exact form
    double d_th_m = 15.0;  // edge distance threshold
    double delta = 3.0;    // edge depth-difference threshold (default 1 x M for M=3)
};

// Per-grid radio depth at one frequency. Building cells hold NaN.
class DepthMap {
public:
    DepthMap() = default;
    DepthMap(int rows, int cols, double f_mhz);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double frequency_mhz() const { return f_mhz_; }
    double at(GridIndex g) const { return values_[static_cast<std::size_t>(g.row) * cols_ + g.col]; }
    void set(GridIndex g, double v) { values_[static_cast<std::size_t>(g.row) * cols_ + g.col] = v; }
    const std::vector<double>& raw() const { return values_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    double f_mhz_ = 0.0;
    std::vector<double> values_;
};

// Sum over transmitters of the line-of-sight fraction, per free grid.
// The expensive part of depth computation; reusable across frequencies.
std::vector<double> los_sum_to_transmitters(const UrbanScenario& sc);

// Approximate multi-transmitter depth: D(n) = sum_m beta * T(n,m) * log10(f).
DepthMap radio_depth_map(const UrbanScenario& sc, const DepthParams& p, double f_mhz);
DepthMap radio_depth_map(const UrbanScenario& sc, const DepthParams& p, double f_mhz,
                         const std::vector<double>& los_sums);

// Exact single-transmitter depth: D(n) = T * (C - alpha*log10(d) - beta*log10(f)).
// Distance floors at half a grid on the transmitter's own cell.
DepthMap radio_depth_exact(const UrbanScenario& sc, const DepthParams& p, double f_mhz,
                           int transmitter);

}  // namespace radiomap

#endif  // RADIOMAP_DEPTH_HPP
