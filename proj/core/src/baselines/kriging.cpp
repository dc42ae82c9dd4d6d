// SPDX-License-Identifier: Apache-2.0
#include "radiomap/baselines/kriging.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "radiomap/error.hpp"
#include "radiomap/rng.hpp"

namespace radiomap::baselines {

double KrigingModel::trend(double dist_nearest_tx_m, double f_mhz) const {
    return intercept - dist_slope * 10.0 * std::log10(dist_nearest_tx_m) -
           freq_slope * std::log10(f_mhz);
}

double KrigingModel::covariance(double lag_m) const {
    if (lag_m == 0.0) return sill;
    return (sill - nugget) * std::exp(-lag_m / range_m);
}

double nearest_transmitter_distance_m(const UrbanScenario& sc, GridIndex g) {
    const Vec2 p = sc.center_m(g);
    double best = std::numeric_limits<double>::infinity();
    for (const TransmitterSpec& tx : sc.transmitters) {
        const Vec2 t = sc.center_m(GridIndex{tx.row, tx.col});
        best = std::min(best, std::hypot(p.x - t.x, p.y - t.y));
    }
    return std::max(best, 0.5 * sc.grid_size_m);
}

namespace {

double nearest_tx_distance(const UrbanScenario& sc, double x_m, double y_m) {
    double best = std::numeric_limits<double>::infinity();
    for (const TransmitterSpec& tx : sc.transmitters) {
        const Vec2 t = sc.center_m(GridIndex{tx.row, tx.col});
        best = std::min(best, std::hypot(x_m - t.x, y_m - t.y));
    }
    return std::max(best, 0.5 * sc.grid_size_m);
}

// Exponential variogram gamma(h) = n + (s-n)(1 - exp(-h/r)), fitted to binned
// empirical semivariances by range grid search + constrained linear LS.
void fit_variogram(const std::vector<std::pair<double, double>>& lag_semivar,
                   KrigingModel& model, double max_lag) {
    if (lag_semivar.empty()) {
        model.nugget = model.sill = 0.0;
        model.range_m = std::max(max_lag, 1.0);
        return;
    }
    double best_sse = std::numeric_limits<double>::infinity();
    double best_n = 0.0, best_s = 0.0, best_r = std::max(max_lag / 4.0, 1.0);
    for (int ri = 1; ri <= 40; ++ri) {
        const double r = max_lag * ri / 40.0;
        // LS over (nugget, partial sill) for gamma = n + p*(1 - exp(-h/r))
        double a11 = 0, a12 = 0, a22 = 0, b1 = 0, b2 = 0;
        for (const auto& [h, g] : lag_semivar) {
            const double e = 1.0 - std::exp(-h / r);
            a11 += 1.0;
            a12 += e;
            a22 += e * e;
            b1 += g;
            b2 += g * e;
        }
        const double det = a11 * a22 - a12 * a12;
        double n, p;
        if (std::abs(det) < 1e-12) {
            n = 0.0;
            p = a22 > 0.0 ? b2 / a22 : 0.0;
        } else {
            n = (b1 * a22 - b2 * a12) / det;
            p = (a11 * b2 - a12 * b1) / det;
        }
        n = std::max(n, 0.0);
        p = std::max(p, 0.0);
        double sse = 0.0;
        for (const auto& [h, g] : lag_semivar) {
            const double e = n + p * (1.0 - std::exp(-h / r)) - g;
            sse += e * e;
        }
        if (sse < best_sse) {
            best_sse = sse;
            best_n = n;
            best_s = n + p;
            best_r = r;
        }
    }
    model.nugget = best_n;
    model.sill = best_s;
    model.range_m = best_r;
}

}  // namespace

KrigingModel kriging_fit(std::span<const TrendPoint> data, const UrbanScenario& sc,
                         std::uint64_t seed) {
    if (data.size() < 3) throw DataError("kriging_fit: need at least 3 data points");

    Eigen::MatrixXd a(static_cast<Eigen::Index>(data.size()), 3);
    Eigen::VectorXd b(static_cast<Eigen::Index>(data.size()));
    for (std::size_t i = 0; i < data.size(); ++i) {
        const TrendPoint& p = data[i];
        a(static_cast<Eigen::Index>(i), 0) = 1.0;
        a(static_cast<Eigen::Index>(i), 1) =
            -10.0 * std::log10(nearest_tx_distance(sc, p.x_m, p.y_m));
        a(static_cast<Eigen::Index>(i), 2) = -std::log10(p.f_mhz);
        b(static_cast<Eigen::Index>(i)) = p.rss_dbm;
    }
    const Eigen::MatrixXd ata = a.transpose() * a;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(ata);
    if (!lu.isInvertible()) throw DataError("kriging_fit: rank-deficient design matrix");
    const Eigen::VectorXd coef = lu.solve(a.transpose() * b);

    KrigingModel model;
    model.intercept = coef(0);
    model.dist_slope = coef(1);
    model.freq_slope = coef(2);

    // Residuals and binned empirical semivariances over a pair subsample.
    std::vector<double> rx(data.size()), ry(data.size()), res(data.size());
    double max_res = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        rx[i] = data[i].x_m;
        ry[i] = data[i].y_m;
        res[i] = data[i].rss_dbm -
                 model.trend(nearest_tx_distance(sc, data[i].x_m, data[i].y_m), data[i].f_mhz);
        max_res = std::max(max_res, std::abs(res[i]));
    }
    if (max_res < 1e-12) {
        model.nugget = model.sill = 0.0;
        model.range_m = std::max(sc.block_size_m, 1.0);
        return model;
    }

    const double max_lag = 0.5 * std::hypot(sc.width_m, sc.height_m);
    const int bin_count = 15;
    const double bin_w = max_lag / bin_count;
    std::vector<double> bin_sum(static_cast<std::size_t>(bin_count), 0.0);
    std::vector<double> bin_h(static_cast<std::size_t>(bin_count), 0.0);
    std::vector<std::size_t> bin_n(static_cast<std::size_t>(bin_count), 0);

    const std::size_t max_pairs = 200000;
    Rng rng(mix_seed(seed, "variogram"));
    const std::size_t total_pairs = data.size() * (data.size() - 1) / 2;
    const std::size_t draw = std::min(max_pairs, total_pairs);
    for (std::size_t t = 0; t < draw; ++t) {
        const std::size_t i = static_cast<std::size_t>(rng.bounded(data.size()));
        std::size_t j = static_cast<std::size_t>(rng.bounded(data.size() - 1));
        if (j >= i) ++j;
        const double h = std::hypot(rx[i] - rx[j], ry[i] - ry[j]);
        if (h <= 0.0 || h >= max_lag) continue;
        const int bin = static_cast<int>(h / bin_w);
        const double d = res[i] - res[j];
        bin_sum[static_cast<std::size_t>(bin)] += 0.5 * d * d;
        bin_h[static_cast<std::size_t>(bin)] += h;
        ++bin_n[static_cast<std::size_t>(bin)];
    }
    std::vector<std::pair<double, double>> lag_semivar;
    for (int bin = 0; bin < bin_count; ++bin) {
        const std::size_t cnt = bin_n[static_cast<std::size_t>(bin)];
        if (cnt == 0) continue;
        lag_semivar.emplace_back(bin_h[static_cast<std::size_t>(bin)] / cnt,
                                 bin_sum[static_cast<std::size_t>(bin)] / cnt);
    }
    fit_variogram(lag_semivar, model, max_lag);
    return model;
}

std::vector<double> ordinary_kriging_weights(const KrigingModel& model,
                                             std::span<const ResidualSample> samples,
                                             double x_m, double y_m) {
    const Eigen::Index n = static_cast<Eigen::Index>(samples.size());
    if (n == 0) throw DataError("ordinary_kriging_weights: no samples");
    Eigen::MatrixXd k(n + 1, n + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double h = std::hypot(samples[i].x_m - samples[j].x_m,
                                        samples[i].y_m - samples[j].y_m);
            k(i, j) = model.covariance(h);
        }
        k(i, n) = 1.0;
        k(n, i) = 1.0;
    }
    k(n, n) = 0.0;
    Eigen::VectorXd rhs(n + 1);
    for (Eigen::Index i = 0; i < n; ++i)
        rhs(i) = model.covariance(std::hypot(samples[i].x_m - x_m, samples[i].y_m - y_m));
    rhs(n) = 1.0;

    Eigen::FullPivLU<Eigen::MatrixXd> lu(k);
    if (!lu.isInvertible()) throw DataError("ordinary kriging system is singular");
    const Eigen::VectorXd sol = lu.solve(rhs);
    std::vector<double> w(samples.size());
    for (Eigen::Index i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = sol(i);
    return w;
}

KrigingPrediction kriging_predict(const KrigingModel& model, const UrbanScenario& sc,
                                  std::span<const ResidualSample> samples,
                                  std::span<const GridIndex> queries, double f_target_mhz) {
    KrigingPrediction out;
    out.values_dbm.reserve(queries.size());

    // Factor the kriging system once; reuse across queries.
    bool have_lu = false;
    Eigen::FullPivLU<Eigen::MatrixXd> lu;
    const Eigen::Index n = static_cast<Eigen::Index>(samples.size());
    if (n > 0 && model.sill > 0.0) {
        Eigen::MatrixXd k(n + 1, n + 1);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j)
                k(i, j) = model.covariance(std::hypot(samples[i].x_m - samples[j].x_m,
                                                      samples[i].y_m - samples[j].y_m));
            k(i, n) = 1.0;
            k(n, i) = 1.0;
        }
        k(n, n) = 0.0;
        lu.compute(k);
        have_lu = lu.isInvertible();
    }
    out.trend_only = !have_lu;

    Eigen::VectorXd rhs(n + 1);
    for (const GridIndex& g : queries) {
        const Vec2 p = sc.center_m(g);
        double value = model.trend(nearest_transmitter_distance_m(sc, g), f_target_mhz);
        if (have_lu) {
            for (Eigen::Index i = 0; i < n; ++i)
                rhs(i) = model.covariance(
                    std::hypot(samples[i].x_m - p.x, samples[i].y_m - p.y));
            rhs(n) = 1.0;
            const Eigen::VectorXd sol = lu.solve(rhs);
            double interp = 0.0;
            for (Eigen::Index i = 0; i < n; ++i)
                interp += sol(i) * samples[static_cast<std::size_t>(i)].residual_db;
            value += interp;
        }
        out.values_dbm.push_back(value);
    }
    return out;
}

}  // namespace radiomap::baselines
