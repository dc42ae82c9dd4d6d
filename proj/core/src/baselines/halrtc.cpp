// SPDX-License-Identifier: Apache-2.0
#include "radiomap/baselines/halrtc.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "radiomap/error.hpp"

namespace radiomap::baselines {

namespace {

using Matrix = Eigen::MatrixXd;

// Mode-i unfolding of the (rows, cols, bands) tensor, layout band-fastest.
Matrix unfold(const std::vector<double>& t, int rows, int cols, int bands, int mode) {
    const int dims[3] = {rows, cols, bands};
    Matrix m(dims[mode], static_cast<Eigen::Index>(t.size()) / dims[mode]);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            for (int k = 0; k < bands; ++k) {
                const double v = t[(static_cast<std::size_t>(r) * cols + c) * bands + k];
                switch (mode) {
                    case 0: m(r, static_cast<Eigen::Index>(c) * bands + k) = v; break;
                    case 1: m(c, static_cast<Eigen::Index>(r) * bands + k) = v; break;
                    default: m(k, static_cast<Eigen::Index>(r) * cols + c) = v; break;
                }
            }
    return m;
}

void fold_into(const Matrix& m, std::vector<double>& t, int rows, int cols, int bands,
               int mode) {
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            for (int k = 0; k < bands; ++k) {
                double v;
                switch (mode) {
                    case 0: v = m(r, static_cast<Eigen::Index>(c) * bands + k); break;
                    case 1: v = m(c, static_cast<Eigen::Index>(r) * bands + k); break;
                    default: v = m(k, static_cast<Eigen::Index>(r) * cols + c); break;
                }
                t[(static_cast<std::size_t>(r) * cols + c) * bands + k] = v;
            }
}

// Singular value thresholding: U max(S - tau, 0) V^T.
Matrix svt(const Matrix& m, double tau) {
    Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::VectorXd s = svd.singularValues();
    for (Eigen::Index i = 0; i < s.size(); ++i) s[i] = std::max(s[i] - tau, 0.0);
    return svd.matrixU() * s.asDiagonal() * svd.matrixV().transpose();
}

double nuclear_norm(const Matrix& m) {
    Eigen::BDCSVD<Matrix> svd(m);
    return svd.singularValues().sum();
}

}  // namespace

HalrtcResult halrtc(const MaskedTensor& input, const HalrtcOptions& opts) {
    if (input.rows <= 0 || input.cols <= 0 || input.bands <= 0)
        throw DataError("halrtc: tensor dimensions must be positive");
    if (input.values.size() != input.size() || input.observed.size() != input.size())
        throw DataError("halrtc: value/mask sizes do not match the dimensions");
    if (opts.rho <= 0.0) throw DataError("halrtc: rho must be positive");
    std::size_t observed_count = 0;
    for (auto o : input.observed) observed_count += o != 0;
    if (observed_count == 0) throw DataError("halrtc: empty observation mask");

    const int rows = input.rows, cols = input.cols, bands = input.bands;
    const std::size_t n = input.size();

    HalrtcResult result;
    result.completed = input;
    std::vector<double>& x = result.completed.values;
    for (std::size_t i = 0; i < n; ++i)
        if (!input.observed[i]) x[i] = 0.0;

    if (observed_count == n) {
        if (opts.track_objective) {
            double obj = 0.0;
            for (int mode = 0; mode < 3; ++mode)
                obj += opts.mode_weights[static_cast<std::size_t>(mode)] *
                       nuclear_norm(unfold(x, rows, cols, bands, mode));
            result.objective_trace.push_back(obj);
        }
        return result;
    }

    std::array<std::vector<double>, 3> m_tensors, y_tensors;
    for (auto& t : m_tensors) t.assign(n, 0.0);
    for (auto& t : y_tensors) t.assign(n, 0.0);
    std::vector<double> buffer(n);

    double rho = opts.rho;
    for (int iter = 0; iter < opts.iterations; ++iter) {
        // M_i = fold( SVT_{w_i/rho}( unfold(X + Y_i/rho) ) )
        for (int mode = 0; mode < 3; ++mode) {
            std::vector<double>& y = y_tensors[static_cast<std::size_t>(mode)];
            for (std::size_t i = 0; i < n; ++i) buffer[i] = x[i] + y[i] / rho;
            const Matrix shrunk =
                svt(unfold(buffer, rows, cols, bands, mode),
                    opts.mode_weights[static_cast<std::size_t>(mode)] / rho);
            fold_into(shrunk, m_tensors[static_cast<std::size_t>(mode)], rows, cols, bands,
                      mode);
        }
        // X = mean_i(M_i - Y_i/rho) off the mask; observed entries pinned.
        for (std::size_t i = 0; i < n; ++i) {
            if (input.observed[i]) continue;
            double acc = 0.0;
            for (int mode = 0; mode < 3; ++mode)
                acc += m_tensors[static_cast<std::size_t>(mode)][i] -
                       y_tensors[static_cast<std::size_t>(mode)][i] / rho;
            x[i] = acc / 3.0;
        }
        // Y_i update and penalty escalation.
        for (int mode = 0; mode < 3; ++mode) {
            std::vector<double>& y = y_tensors[static_cast<std::size_t>(mode)];
            const std::vector<double>& m = m_tensors[static_cast<std::size_t>(mode)];
            for (std::size_t i = 0; i < n; ++i) y[i] -= rho * (m[i] - x[i]);
        }
        rho = std::min(rho * opts.rho_growth, opts.rho_max);

        if (opts.track_objective) {
            double obj = 0.0;
            for (int mode = 0; mode < 3; ++mode)
                obj += opts.mode_weights[static_cast<std::size_t>(mode)] *
                       nuclear_norm(unfold(x, rows, cols, bands, mode));
            result.objective_trace.push_back(obj);
        }
    }
    return result;
}

HalrtcResult halrtc(const MaskedTensor& input, double rho, int iterations) {
    HalrtcOptions opts;
    opts.rho = rho;
    opts.iterations = iterations;
    return halrtc(input, opts);
}

}  // namespace radiomap::baselines
