// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_BASELINES_IDW_HPP
#define RADIOMAP_BASELINES_IDW_HPP

#include <span>

namespace radiomap::baselines {

// One spatial-spectral observation.
struct Sample3D {
    double x_m = 0.0;
    double y_m = 0.0;
    double f_mhz = 0.0;
    double rss_dbm = 0.0;
};

// Inverse-distance weighting over the joint (x, y, lambda*f) space:
// weights dist^-p with dist^2 = dx^2 + dy^2 + (lambda*df)^2. A query that
// coincides with a sample returns that sample's value exactly.
double idw3d(std::span<const Sample3D> samples, double x_m, double y_m, double f_mhz,
             double power, double freq_scale_m_per_mhz);

}  // namespace radiomap::baselines

#endif  // RADIOMAP_BASELINES_IDW_HPP
