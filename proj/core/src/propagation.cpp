// SPDX-License-Identifier: Apache-2.0
#include "radiomap/propagation.hpp"

#include <cmath>

#include "radiomap/error.hpp"
#include "radiomap/geometry.hpp"
#include "radiomap/rng.hpp"

namespace radiomap {

double path_rss(double tx_power_dbm, const PropagationParams& p, double f_mhz, double d_m) {
    if (f_mhz <= 0.0) throw DataError("path_rss: frequency must be positive");
    if (d_m <= 0.0) throw DataError("path_rss: distance must be positive");
    return tx_power_dbm - p.const_loss_db - p.freq_fading * std::log10(f_mhz) -
           10.0 * p.dist_fading * std::log10(d_m);
}

double total_rss(std::span<const double> per_transmitter_dbm) {
    if (per_transmitter_dbm.empty()) throw DataError("total_rss: empty transmitter list");
    double sum = 0.0;
    for (double v : per_transmitter_dbm) sum += v;
    return sum;
}

std::vector<double> correlated_shadow_field(int rows, int cols, double grid_size_m,
                                            double corr_m, double sigma_db,
                                            std::uint64_t seed) {
    std::vector<double> f(static_cast<std::size_t>(rows) * cols);
    Rng rng(seed);
    for (auto& v : f) v = rng.gaussian();

    if (corr_m > 0.0) {
        const double r = std::exp(-grid_size_m / corr_m);
        const double s = std::sqrt(1.0 - r * r);  // keeps unit variance
        for (int i = 0; i < rows; ++i) {
            double* row = f.data() + static_cast<std::size_t>(i) * cols;
            for (int j = 1; j < cols; ++j) row[j] = r * row[j - 1] + s * row[j];
        }
        for (int j = 0; j < cols; ++j)
            for (int i = 1; i < rows; ++i) {
                const std::size_t idx = static_cast<std::size_t>(i) * cols + j;
                f[idx] = r * f[idx - cols] + s * f[idx];
            }
    }
    for (auto& v : f) v *= sigma_db;
    return f;
}

RadiomapTensor generate_ground_truth(const UrbanScenario& sc, const PropagationParams& prop,
                                     const GeneratorParams& gen) {
    sc.validate();
    RadiomapTensor t = RadiomapTensor::empty_like(sc);
    const int rows = sc.rows(), cols = sc.cols();
    const std::size_t m_count = sc.transmitters.size();
    const int k_count = t.band_count();

    // Per-transmitter geometry is frequency independent; compute it once.
    std::vector<std::vector<double>> los(m_count), dist(m_count);
    for (std::size_t m = 0; m < m_count; ++m) {
        los[m].assign(sc.grid_count(), 0.0);
        dist[m].assign(sc.grid_count(), 0.0);
        const TransmitterSpec& tx = sc.transmitters[m];
        const GridIndex tg{tx.row, tx.col};
        const Vec2 tp = sc.center_m(tg);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                const GridIndex g{r, c};
                if (sc.building(g)) continue;
                const std::size_t i = sc.cell_index(g);
                los[m][i] = los_fraction(sc, g, tg);
                const Vec2 p = sc.center_m(g);
                dist[m][i] = std::hypot(p.x - tp.x, p.y - tp.y);
            }
    }

    const double dist_floor = 0.5 * sc.grid_size_m;
    std::vector<double> per_tx(m_count);
    for (int k = 0; k < k_count; ++k) {
        const double f = sc.frequencies_mhz[static_cast<std::size_t>(k)];
        const std::vector<double> shadow =
            correlated_shadow_field(rows, cols, sc.grid_size_m, gen.shadow_corr_m,
                                    gen.shadow_sigma_db,
                                    mix_seed(gen.seed, "shadow", static_cast<std::uint64_t>(k)));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                const GridIndex g{r, c};
                if (sc.building(g)) continue;
                const std::size_t i = sc.cell_index(g);
                for (std::size_t m = 0; m < m_count; ++m) {
                    const double d = dist[m][i];
                    const double occluded_m = (1.0 - los[m][i]) * d;
                    per_tx[m] =
                        path_rss(sc.transmitters[m].tx_power_dbm[static_cast<std::size_t>(k)],
                                 prop, f, std::max(d, dist_floor)) -
                        gen.wall_loss_db_per_m * occluded_m;
                }
                t.set(r, c, k, total_rss(per_tx) + shadow[i]);
            }
    }
    return t;
}

}  // namespace radiomap
