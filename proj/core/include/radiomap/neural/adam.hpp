// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_NEURAL_ADAM_HPP
#define RADIOMAP_NEURAL_ADAM_HPP

#include <cmath>
#include <vector>

#include "radiomap/neural/tensor.hpp"

namespace radiomap::neural {

// Adam with bias correction. Moment tensors are allocated on the first step.
struct AdamState {
    double lr = 0.001;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    long step = 0;
    std::vector<Tensor> m;
    std::vector<Tensor> v;
};

inline void adam_step(AdamState& st, const std::vector<Tensor*>& params,
                      const std::vector<Tensor*>& grads) {
    if (params.size() != grads.size()) throw DataError("adam: parameter/gradient count mismatch");
    if (st.beta1 <= 0.0 || st.beta1 >= 1.0 || st.beta2 <= 0.0 || st.beta2 >= 1.0)
        throw DataError("adam: betas must be in (0,1)");
    if (st.m.empty()) {
        for (const Tensor* p : params) {
            st.m.push_back(Tensor::zeros_like(*p));
            st.v.push_back(Tensor::zeros_like(*p));
        }
    }
    ++st.step;
    const double c1 = 1.0 - std::pow(st.beta1, static_cast<double>(st.step));
    const double c2 = 1.0 - std::pow(st.beta2, static_cast<double>(st.step));
    for (std::size_t t = 0; t < params.size(); ++t) {
        Tensor& p = *params[t];
        const Tensor& g = *grads[t];
        if (!p.same_shape(g) || !p.same_shape(st.m[t]))
            throw DataError("adam: tensor shape mismatch");
        for (std::size_t i = 0; i < p.data.size(); ++i) {
            double& m = st.m[t].data[i];
            double& v = st.v[t].data[i];
            m = st.beta1 * m + (1.0 - st.beta1) * g.data[i];
            v = st.beta2 * v + (1.0 - st.beta2) * g.data[i] * g.data[i];
            p.data[i] -= st.lr * (m / c1) / (std::sqrt(v / c2) + st.eps);
        }
    }
}

}  // namespace radiomap::neural

#endif  // RADIOMAP_NEURAL_ADAM_HPP
