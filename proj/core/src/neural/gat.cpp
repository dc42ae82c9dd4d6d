// SPDX-License-Identifier: Apache-2.0
#include "radiomap/neural/gat.hpp"

#include <algorithm>
#include <cmath>

#include "radiomap/rng.hpp"

namespace radiomap::neural {

NeighborhoodCsr NeighborhoodCsr::from_adjacency(const AdjacencyLists& adj) {
    NeighborhoodCsr csr;
    const std::size_t n = adj.size();
    csr.offsets.resize(n + 1);
    csr.offsets[0] = 0;
    std::size_t nnz = n;  // self loops
    for (const auto& nb : adj) nnz += nb.size();
    csr.targets.reserve(nnz);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::int32_t j : adj[i]) csr.targets.push_back(j);
        csr.targets.push_back(static_cast<std::int32_t>(i));  // self, last
        csr.offsets[i + 1] = static_cast<std::int64_t>(csr.targets.size());
    }
    return csr;
}

namespace {

inline double activate(Activation a, double u) {
    if (a == Activation::Identity) return u;
    return u > 0.0 ? u : std::expm1(u);  // ELU, alpha = 1
}

inline double activate_grad_from_out(Activation a, double u, double out) {
    if (a == Activation::Identity) return 1.0;
    return u > 0.0 ? 1.0 : out + 1.0;  // d/du expm1(u) = exp(u) = out + 1
}

}  // namespace

const Tensor& GatLayer::forward(const Tensor& x, const NeighborhoodCsr& nb) {
    const std::size_t n = x.rows();
    if (x.cols() != in_dim()) throw DataError("gat layer: input feature width mismatch");
    if (nb.node_count() != n) throw DataError("gat layer: adjacency dimension mismatch");
    nb_ = &nb;
    input_ = x;
    projected_ = matmul(x, params.weight);

    const std::size_t d = out_dim();
    const double* a_center = params.attention.data.data();
    const double* a_neigh = a_center + d;

    // Per-node attention logits: s_ij = a_c . H_i + a_n . H_j
    std::vector<double> proj_center(n), proj_neigh(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double* h = projected_.data.data() + i * d;
        double pc = 0.0, pn = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            pc += a_center[k] * h[k];
            pn += a_neigh[k] * h[k];
        }
        proj_center[i] = pc;
        proj_neigh[i] = pn;
    }

    const std::size_t nnz = nb.targets.size();
    score_.resize(nnz);
    alpha_.resize(nnz);
    preact_ = Tensor::zeros(n, d);
    output_ = Tensor::zeros(n, d);

    const double slope = params.leaky_slope;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t begin = nb.offsets[i], end = nb.offsets[i + 1];
        double max_e = -std::numeric_limits<double>::infinity();
        for (std::int64_t e = begin; e < end; ++e) {
            const double s = proj_center[i] + proj_neigh[static_cast<std::size_t>(nb.targets[e])];
            score_[static_cast<std::size_t>(e)] = s;
            const double lrelu = s > 0.0 ? s : slope * s;
            max_e = std::max(max_e, lrelu);
        }
        double denom = 0.0;
        for (std::int64_t e = begin; e < end; ++e) {
            const double s = score_[static_cast<std::size_t>(e)];
            const double lrelu = s > 0.0 ? s : slope * s;
            const double w = std::exp(lrelu - max_e);
            alpha_[static_cast<std::size_t>(e)] = w;
            denom += w;
        }
        double* u = preact_.data.data() + i * d;
        for (std::int64_t e = begin; e < end; ++e) {
            const double a = alpha_[static_cast<std::size_t>(e)] / denom;
            alpha_[static_cast<std::size_t>(e)] = a;
            const double* hj =
                projected_.data.data() + static_cast<std::size_t>(nb.targets[e]) * d;
            for (std::size_t k = 0; k < d; ++k) u[k] += a * hj[k];
        }
        double* o = output_.data.data() + i * d;
        for (std::size_t k = 0; k < d; ++k) o[k] = activate(params.activation, u[k]);
    }
    forwarded_ = true;
    return output_;
}

Tensor GatLayer::backward(const Tensor& grad_output) {
    if (!forwarded_) throw DataError("gat layer: backward before forward");
    if (!grad_output.same_shape(output_))
        throw DataError("gat layer: gradient shape mismatch");
    const NeighborhoodCsr& nb = *nb_;
    const std::size_t n = input_.rows();
    const std::size_t d = out_dim();

    if (!grads.weight.same_shape(params.weight)) grads.weight = Tensor::zeros_like(params.weight);
    if (!grads.attention.same_shape(params.attention))
        grads.attention = Tensor::zeros_like(params.attention);

    // dU = dOut * act'(U)
    Tensor d_preact = Tensor::zeros(n, d);
    for (std::size_t i = 0; i < n * d; ++i)
        d_preact.data[i] = grad_output.data[i] *
                           activate_grad_from_out(params.activation, preact_.data[i],
                                                  output_.data[i]);

    Tensor d_proj = Tensor::zeros(n, d);  // dL/dH
    std::vector<double> d_score(nb.targets.size());

    // Aggregation + softmax backward, per center node.
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t begin = nb.offsets[i], end = nb.offsets[i + 1];
        const double* du = d_preact.data.data() + i * d;

        double alpha_dot = 0.0;  // sum_e alpha_e * dalpha_e
        for (std::int64_t e = begin; e < end; ++e) {
            const std::size_t j = static_cast<std::size_t>(nb.targets[e]);
            const double* hj = projected_.data.data() + j * d;
            double da = 0.0;
            for (std::size_t k = 0; k < d; ++k) da += du[k] * hj[k];
            d_score[static_cast<std::size_t>(e)] = da;  // holds dalpha for now
            alpha_dot += alpha_[static_cast<std::size_t>(e)] * da;

            // direct path: dH_j += alpha_e * dU_i
            double* dhj = d_proj.data.data() + j * d;
            const double a = alpha_[static_cast<std::size_t>(e)];
            for (std::size_t k = 0; k < d; ++k) dhj[k] += a * du[k];
        }
        for (std::int64_t e = begin; e < end; ++e) {
            const std::size_t ei = static_cast<std::size_t>(e);
            const double de = alpha_[ei] * (d_score[ei] - alpha_dot);  // softmax
            const double s = score_[ei];
            d_score[ei] = de * (s > 0.0 ? 1.0 : params.leaky_slope);  // LeakyReLU
        }
    }

    // Score backward: s_ij = a_c . H_i + a_n . H_j
    const double* a_center = params.attention.data.data();
    const double* a_neigh = a_center + d;
    double* da_center = grads.attention.data.data();
    double* da_neigh = da_center + d;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t begin = nb.offsets[i], end = nb.offsets[i + 1];
        const double* hi = projected_.data.data() + i * d;
        double* dhi = d_proj.data.data() + i * d;
        for (std::int64_t e = begin; e < end; ++e) {
            const double ds = d_score[static_cast<std::size_t>(e)];
            if (ds == 0.0) continue;
            const std::size_t j = static_cast<std::size_t>(nb.targets[e]);
            const double* hj = projected_.data.data() + j * d;
            double* dhj = d_proj.data.data() + j * d;
            for (std::size_t k = 0; k < d; ++k) {
                da_center[k] += ds * hi[k];
                da_neigh[k] += ds * hj[k];
                dhi[k] += ds * a_center[k];
                dhj[k] += ds * a_neigh[k];
            }
        }
    }

    // Linear backward: H = X W
    const Tensor dw = matmul_tn(input_, d_proj);
    for (std::size_t i = 0; i < dw.data.size(); ++i) grads.weight.data[i] += dw.data[i];
    return matmul_nt(d_proj, params.weight);
}

GatModel GatModel::init(const GatConfig& cfg, std::uint64_t seed) {
    GatModel m;
    Rng rng(seed);
    const std::size_t dims[4] = {cfg.input_dim, cfg.hidden_dim, cfg.hidden_dim, 1};
    for (int l = 0; l < 3; ++l) {
        GatLayer& layer = m.layers[static_cast<std::size_t>(l)];
        const std::size_t in = dims[l], out = dims[l + 1];
        layer.params.weight = Tensor::zeros(in, out);
        layer.params.attention = Tensor{2 * out};
        layer.params.leaky_slope = cfg.leaky_slope;
        layer.params.activation = l == 2 ? Activation::Identity : Activation::Elu;
        const double w_bound = std::sqrt(6.0 / static_cast<double>(in + out));
        for (auto& v : layer.params.weight.data) v = rng.uniform(-w_bound, w_bound);
        const double a_bound = std::sqrt(6.0 / static_cast<double>(2 * out + 1));
        for (auto& v : layer.params.attention.data) v = rng.uniform(-a_bound, a_bound);
    }
    return m;
}

const Tensor& GatModel::forward(const Tensor& x, const NeighborhoodCsr& nb_obv,
                                const NeighborhoodCsr& nb_target) {
    const Tensor& h1 = layers[0].forward(x, nb_obv);
    const Tensor& h2 = layers[1].forward(h1, nb_target);
    return layers[2].forward(h2, nb_target);
}

void GatModel::backward(const Tensor& grad_output) {
    for (GatLayer& l : layers) {
        l.grads.weight = Tensor::zeros_like(l.params.weight);
        l.grads.attention = Tensor::zeros_like(l.params.attention);
    }
    Tensor g = layers[2].backward(grad_output);
    g = layers[1].backward(g);
    layers[0].backward(g);
}

std::vector<Tensor*> GatModel::parameters() {
    std::vector<Tensor*> out;
    for (GatLayer& l : layers) {
        out.push_back(&l.params.weight);
        out.push_back(&l.params.attention);
    }
    return out;
}

std::vector<Tensor*> GatModel::gradients() {
    std::vector<Tensor*> out;
    for (GatLayer& l : layers) {
        out.push_back(&l.grads.weight);
        out.push_back(&l.grads.attention);
    }
    return out;
}

GatConfig GatModel::config() const {
    GatConfig cfg;
    cfg.input_dim = layers[0].params.weight.rows();
    cfg.hidden_dim = layers[0].params.weight.cols();
    cfg.leaky_slope = layers[0].params.leaky_slope;
    return cfg;
}

}  // namespace radiomap::neural
