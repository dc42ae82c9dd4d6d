// SPDX-License-Identifier: Apache-2.0
#include "radiomap/baselines/idw.hpp"

#include <cmath>

#include "radiomap/error.hpp"

namespace radiomap::baselines {

double idw3d(std::span<const Sample3D> samples, double x_m, double y_m, double f_mhz,
             double power, double freq_scale_m_per_mhz) {
    if (samples.empty()) throw DataError("idw3d: empty sample set");
    if (power <= 0.0) throw DataError("idw3d: power must be positive");

    double num = 0.0, den = 0.0;
    for (const Sample3D& s : samples) {
        const double dx = s.x_m - x_m;
        const double dy = s.y_m - y_m;
        const double df = freq_scale_m_per_mhz * (s.f_mhz - f_mhz);
        const double d2 = dx * dx + dy * dy + df * df;
        if (d2 < 1e-18) return s.rss_dbm;  // exact hit
        const double w = std::pow(d2, -0.5 * power);
        num += w * s.rss_dbm;
        den += w;
    }
    return num / den;
}

}  // namespace radiomap::baselines
