// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_PROPAGATION_HPP
#define RADIOMAP_PROPAGATION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "radiomap/radiomap_tensor.hpp"
#include "radiomap/scenario.hpp"

namespace radiomap {

// Log-distance / log-frequency path loss parameters.
struct PropagationParams {
    double const_loss_db = 30.0;  // L_c
    double freq_fading = 20.0;    // eta_f, multiplies log10(f)
    double dist_fading = 2.0;     // eta_d, multiplies 10*log10(d)
};

// Synthetic ground-truth generator knobs (wall penetration + correlated shadowing).
struct GeneratorParams {
    double wall_loss_db_per_m = 1.5;
    double shadow_sigma_db = 3.0;
    double shadow_corr_m = 40.0;
    std::uint64_t seed = 0;
};

// RSS of one transmitter at frequency f_mhz and distance d_m:
//   P - L_c - eta_f*log10(f) - 10*eta_d*log10(d)
// Throws DataError on non-positive frequency or distance.
double path_rss(double tx_power_dbm, const PropagationParams& p, double f_mhz, double d_m);

// Literal arithmetic sum of per-transmitter dBm values. Throws on empty input.
double total_rss(std::span<const double> per_transmitter_dbm);

// Zero-mean unit-variance Gaussian field with exponential spatial correlation
// (separable first-order filter along rows then columns), scaled by sigma_db.
std::vector<double> correlated_shadow_field(int rows, int cols, double grid_size_m,
                                            double corr_m, double sigma_db,
                                            std::uint64_t seed);

// Ground truth over every (free grid, frequency): per-transmitter path RSS with
// a wall-penetration penalty wall_loss * (occluded length), summed per Eq. of
// total_rss, plus one shadowing field per frequency. Deterministic under seed.
RadiomapTensor generate_ground_truth(const UrbanScenario& sc, const PropagationParams& prop,
                                     const GeneratorParams& gen);

}  // namespace radiomap

#endif  // RADIOMAP_PROPAGATION_HPP
