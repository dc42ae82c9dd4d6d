// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_NEURAL_TENSOR_HPP
#define RADIOMAP_NEURAL_TENSOR_HPP

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "radiomap/error.hpp"

namespace radiomap::neural {

// Dense row-major 64-bit tensor. The network only needs rank <= 2.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    Tensor() = default;
    Tensor(std::initializer_list<std::size_t> s) : shape(s) {
        data.assign(element_count(), 0.0);
    }

    static Tensor zeros(std::size_t r, std::size_t c) { return Tensor{r, c}; }
    static Tensor zeros_like(const Tensor& t) {
        Tensor out;
        out.shape = t.shape;
        out.data.assign(t.data.size(), 0.0);
        return out;
    }

    std::size_t element_count() const {
        std::size_t n = 1;
        for (std::size_t d : shape) n *= d;
        return shape.empty() ? 0 : n;
    }
    std::size_t rows() const { return shape.empty() ? 0 : shape[0]; }
    std::size_t cols() const { return shape.size() < 2 ? 1 : shape[1]; }

    double& at(std::size_t i, std::size_t j) { return data[i * cols() + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols() + j]; }

    void fill(double v) { std::fill(data.begin(), data.end(), v); }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }
};

// C = A (r x k) * B (k x c)
inline Tensor matmul(const Tensor& a, const Tensor& b) {
    if (a.cols() != b.rows()) throw DataError("matmul: inner dimensions differ");
    Tensor c = Tensor::zeros(a.rows(), b.cols());
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < k; ++p) {
            const double av = a.data[i * k + p];
            if (av == 0.0) continue;
            const double* brow = b.data.data() + p * m;
            double* crow = c.data.data() + i * m;
            for (std::size_t j = 0; j < m; ++j) crow[j] += av * brow[j];
        }
    return c;
}

// C = A^T (k x r)^T... i.e. A (r x k), result (k x c) = A^T * B (r x c)
inline Tensor matmul_tn(const Tensor& a, const Tensor& b) {
    if (a.rows() != b.rows()) throw DataError("matmul_tn: outer dimensions differ");
    Tensor c = Tensor::zeros(a.cols(), b.cols());
    const std::size_t r = a.rows(), k = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t p = 0; p < k; ++p) {
            const double av = a.data[i * k + p];
            if (av == 0.0) continue;
            const double* brow = b.data.data() + i * m;
            double* crow = c.data.data() + p * m;
            for (std::size_t j = 0; j < m; ++j) crow[j] += av * brow[j];
        }
    return c;
}

// C = A (r x k) * B^T (c x k)^T, result (r x c)
inline Tensor matmul_nt(const Tensor& a, const Tensor& b) {
    if (a.cols() != b.cols()) throw DataError("matmul_nt: inner dimensions differ");
    Tensor c = Tensor::zeros(a.rows(), b.rows());
    const std::size_t n = a.rows(), k = a.cols(), m = b.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const double* arow = a.data.data() + i * k;
            const double* brow = b.data.data() + j * k;
            double s = 0.0;
            for (std::size_t p = 0; p < k; ++p) s += arow[p] * brow[p];
            c.data[i * m + j] = s;
        }
    return c;
}

}  // namespace radiomap::neural

#endif  // RADIOMAP_NEURAL_TENSOR_HPP
