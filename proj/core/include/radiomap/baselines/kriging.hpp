// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_BASELINES_KRIGING_HPP
#define RADIOMAP_BASELINES_KRIGING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "radiomap/grid.hpp"
#include "radiomap/radiomap_tensor.hpp"
#include "radiomap/scenario.hpp"

namespace radiomap::baselines {

// Large-scale trend plus exponential variogram of the shadow-fading residuals.
// Trend: rss ~ intercept - dist_slope*10*log10(d_nearest_tx) - freq_slope*log10(f).
struct KrigingModel {
    double intercept = 0.0;
    double dist_slope = 0.0;
    double freq_slope = 0.0;
    double nugget = 0.0;
    double sill = 0.0;
    double range_m = 1.0;

    double trend(double dist_nearest_tx_m, double f_mhz) const;
    // Exponential covariance of residuals; exact at lag 0 (returns sill).
    double covariance(double lag_m) const;
};

struct TrendPoint {
    double x_m = 0.0;
    double y_m = 0.0;
    double f_mhz = 0.0;
    double rss_dbm = 0.0;
};

// Least-squares trend fit plus variogram fit on the residuals. Pairs for the
// empirical variogram are subsampled deterministically under `seed`.
KrigingModel kriging_fit(std::span<const TrendPoint> data, const UrbanScenario& sc,
                         std::uint64_t seed = 0);

struct ResidualSample {
    double x_m = 0.0;
    double y_m = 0.0;
    double residual_db = 0.0;
};

// Ordinary-kriging weights for one query; weights sum to 1. Throws DataError
// on a singular system.
std::vector<double> ordinary_kriging_weights(const KrigingModel& model,
                                             std::span<const ResidualSample> samples,
                                             double x_m, double y_m);

struct KrigingPrediction {
    std::vector<double> values_dbm;
    bool trend_only = false;  // set when the kriging system was singular
};

// Trend at f_target plus ordinary-kriging interpolation of the residuals
// (observed at f_obv). Falls back to trend-only when the system is singular.
KrigingPrediction kriging_predict(const KrigingModel& model, const UrbanScenario& sc,
                                  std::span<const ResidualSample> samples,
                                  std::span<const GridIndex> queries, double f_target_mhz);

// Distance from a grid center to the nearest transmitter, floored at half a grid.
double nearest_transmitter_distance_m(const UrbanScenario& sc, GridIndex g);

}  // namespace radiomap::baselines

#endif  // RADIOMAP_BASELINES_KRIGING_HPP
