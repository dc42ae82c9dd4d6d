// SPDX-License-Identifier: Apache-2.0
#include "radiomap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "radiomap/error.hpp"

namespace radiomap {

namespace {

void check_bounds(const UrbanScenario& sc, GridIndex g, const char* name) {
    if (!sc.in_bounds(g))
        throw DataError(std::string(name) + " (" + std::to_string(g.row) + "," +
                        std::to_string(g.col) + ") is outside the grid");
}

// Parameter values in (0,1) where the segment crosses integer gridlines of one axis.
void axis_crossings(double a0, double a1, std::vector<double>& ts) {
    const double lo = std::min(a0, a1);
    const double hi = std::max(a0, a1);
    const double d = a1 - a0;
    for (int k = static_cast<int>(std::floor(lo)) + 1; k <= static_cast<int>(std::ceil(hi)) - 1;
         ++k) {
        const double t = (k - a0) / d;
        if (t > 0.0 && t < 1.0) ts.push_back(t);
    }
}

}  // namespace

void for_each_segment_span(const UrbanScenario& sc, GridIndex p, GridIndex q,
                           const std::function<void(GridIndex, double, double)>& fn) {
    check_bounds(sc, p, "p");
    check_bounds(sc, q, "q");
    if (p == q) {
        fn(p, 0.0, 1.0);
        return;
    }
    // Grid-unit coordinates, centers at (col + 0.5, row + 0.5).
    const double x0 = p.col + 0.5, y0 = p.row + 0.5;
    const double x1 = q.col + 0.5, y1 = q.row + 0.5;
    const double dx = x1 - x0, dy = y1 - y0;

    std::vector<double> ts;
    ts.reserve(static_cast<std::size_t>(std::abs(dx) + std::abs(dy)) + 4);
    ts.push_back(0.0);
    ts.push_back(1.0);
    if (dx != 0.0) axis_crossings(x0, x1, ts);
    if (dy != 0.0) axis_crossings(y0, y1, ts);
    std::sort(ts.begin(), ts.end());

    const int rows = sc.rows(), cols = sc.cols();
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        const double t0 = ts[i], t1 = ts[i + 1];
        if (t1 - t0 <= 0.0) continue;
        const double tm = 0.5 * (t0 + t1);
        int cx = static_cast<int>(std::floor(x0 + tm * dx));
        int cy = static_cast<int>(std::floor(y0 + tm * dy));
        cx = std::clamp(cx, 0, cols - 1);
        cy = std::clamp(cy, 0, rows - 1);
        fn(GridIndex{cy, cx}, t0, t1);
    }
}

double los_fraction(const UrbanScenario& sc, GridIndex p, GridIndex q) {
    check_bounds(sc, p, "p");
    check_bounds(sc, q, "q");
    if (q < p) std::swap(p, q);  // canonical order makes symmetry exact
    double blocked = 0.0;
    for_each_segment_span(sc, p, q, [&](GridIndex cell, double t0, double t1) {
        if (sc.building(cell)) blocked += t1 - t0;
    });
    return 1.0 - blocked;
}

bool obstruction_exists(const UrbanScenario& sc, GridIndex p, GridIndex q) {
    return los_fraction(sc, p, q) < 1.0 - 1e-12;
}

bool collinear_with_transmitter(const UrbanScenario& sc, GridIndex p, GridIndex q,
                                int transmitter, double tol_grids) {
    check_bounds(sc, p, "p");
    check_bounds(sc, q, "q");
    if (transmitter < 0 || transmitter >= static_cast<int>(sc.transmitters.size()))
        throw DataError("transmitter index " + std::to_string(transmitter) + " out of range");
    if (tol_grids < 0.0) throw DataError("collinearity tolerance must be non-negative");

    const TransmitterSpec& tx = sc.transmitters[static_cast<std::size_t>(transmitter)];
    const double ax = p.col - tx.col, ay = p.row - tx.row;
    const double bx = q.col - tx.col, by = q.row - tx.row;
    const double na = std::hypot(ax, ay), nb = std::hypot(bx, by);
    if (na == 0.0 || nb == 0.0) return true;  // a node on the transmitter cell
    if (ax * bx + ay * by < 0.0) return false;  // opposite rays

    const double cross = std::abs(ax * by - ay * bx);
    return std::min(cross / nb, cross / na) <= tol_grids;
}

}  // namespace radiomap
