// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_NEURAL_GAT_HPP
#define RADIOMAP_NEURAL_GAT_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "radiomap/graph.hpp"
#include "radiomap/neural/tensor.hpp"

namespace radiomap::neural {

// Adjacency in CSR form with a self loop appended to every node's
// neighborhood; this is the attention support {neighbors(i)} U {i}.
struct NeighborhoodCsr {
    std::vector<std::int64_t> offsets;  // n+1
    std::vector<std::int32_t> targets;  // sorted neighbors, then self

    static NeighborhoodCsr from_adjacency(const AdjacencyLists& adj);
    std::size_t node_count() const { return offsets.empty() ? 0 : offsets.size() - 1; }
};

enum class Activation { Identity, Elu };

struct GatLayerParams {
    Tensor weight;     // in_dim x out_dim
    Tensor attention;  // 2*out_dim: [a_center | a_neighbor]
    double leaky_slope = 0.2;
    Activation activation = Activation::Elu;
};

struct GatLayerGrads {
    Tensor weight;
    Tensor attention;
};

// One attention layer. forward() records everything backward() needs;
// backward() must follow a forward() on the same adjacency.
class GatLayer {
public:
    GatLayerParams params;
    GatLayerGrads grads;

    std::size_t in_dim() const { return params.weight.rows(); }
    std::size_t out_dim() const { return params.weight.cols(); }

    const Tensor& forward(const Tensor& x, const NeighborhoodCsr& nb);
    // Accumulates parameter gradients into `grads`, returns dL/dx.
    Tensor backward(const Tensor& grad_output);

    // Attention weights of the last forward, aligned with nb.targets.
    const std::vector<double>& attention_weights() const { return alpha_; }
    const NeighborhoodCsr* last_neighborhood() const { return nb_; }

private:
    const NeighborhoodCsr* nb_ = nullptr;
    Tensor input_;       // X
    Tensor projected_;   // H = X W
    std::vector<double> score_;  // s_e pre-LeakyReLU, per CSR entry
    std::vector<double> alpha_;  // softmax weights, per CSR entry
    Tensor preact_;      // U = sum_j alpha_ij H_j
    Tensor output_;      // act(U)
    bool forwarded_ = false;
};

struct GatConfig {
    std::size_t input_dim = 5;
    std::size_t hidden_dim = 32;
    double leaky_slope = 0.2;
};

// Three layers: input -> hidden -> hidden -> 1. Layer 1 runs on the observed-
// band adjacency, layers 2 and 3 on the target-band adjacency.
class GatModel {
public:
    std::array<GatLayer, 3> layers;

    static GatModel init(const GatConfig& cfg, std::uint64_t seed);

    const Tensor& forward(const Tensor& x, const NeighborhoodCsr& nb_obv,
                          const NeighborhoodCsr& nb_target);
    // Zeroes gradients, backpropagates, leaves parameter grads in the layers.
    void backward(const Tensor& grad_output);

    std::vector<Tensor*> parameters();
    std::vector<Tensor*> gradients();

    GatConfig config() const;
};

}  // namespace radiomap::neural

#endif  // RADIOMAP_NEURAL_GAT_HPP
