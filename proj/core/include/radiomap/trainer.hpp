// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_TRAINER_HPP
#define RADIOMAP_TRAINER_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <vector>

#include "radiomap/features.hpp"
#include "radiomap/graph.hpp"
#include "radiomap/neural/gat.hpp"
#include "radiomap/neural/loss.hpp"
#include "radiomap/radiomap_tensor.hpp"
#include "radiomap/sampling.hpp"

namespace radiomap {

struct TrainingConfig {
    double lr = 0.001;
    long epochs = 200;
    double f_obv_mhz = 1750.0;
    std::vector<double> f_target_mhz = {5750.0};  // >1 entries cycle across steps
    double sample_rate = 0.05;    // observed fraction per block at f_obv
    double mask_fraction = 1.0;   // fraction of f_target labels available in B1
    std::uint64_t seed = 0;
    std::size_t hidden_dim = 32;
    EncodingStrategy strategy;
};

// Exposed for tests; forwards to the masked MSE of the neural core.
inline double masked_loss(std::span<const double> pred, std::span<const double> truth,
                          std::span<const std::uint8_t> mask) {
    return neural::masked_mse_loss(pred, truth, mask);
}

struct TrainResult {
    neural::GatModel model;
    FeatureScaler scaler;
    std::vector<double> epoch_loss;                 // mean masked loss per epoch
    std::vector<std::uint8_t> obs_mask;             // grids observed at f_obv
    std::map<double, std::vector<std::uint8_t>> label_masks;  // f_target -> grid mask over B1
    TrainingConfig config;
};

// Masked training over the B1 blocks: layer 1 on the f_obv graph, layers 2-3
// on the f_target graph, one Adam step per block, blocks shuffled per epoch
// under the seed. Deterministic function of its inputs.
TrainResult train(const UrbanScenario& sc, const RadiomapTensor& ground_truth,
                  const BlockSplit& split, const TrainingConfig& cfg);

// Cross-band inference with a trained model.
class Reconstructor {
public:
    Reconstructor(neural::GatModel model, FeatureScaler scaler, TrainingConfig cfg,
                  const UrbanScenario& sc);

    // De-normalized RSS for every free grid of block b (extract_nodes order).
    // `observed` supplies f_obv values at the grids flagged in obs_mask.
    std::vector<double> predict_block(const RadiomapTensor& observed,
                                      const std::vector<std::uint8_t>& obs_mask, BlockIndex b,
                                      double f_target_mhz) const;

    // Predictions for every frequency of the scenario over the given blocks.
    // When overwrite_observed_band is set, sampled grids of the observed band
    // keep their measured values.
    RadiomapTensor splice(const RadiomapTensor& observed,
                          const std::vector<std::uint8_t>& obs_mask,
                          std::span<const BlockIndex> blocks,
                          bool overwrite_observed_band = false) const;

    const TrainingConfig& config() const { return cfg_; }
    const FeatureScaler& scaler() const { return scaler_; }

private:
    mutable neural::GatModel model_;  // forward caches activations
    FeatureScaler scaler_;
    TrainingConfig cfg_;
    const UrbanScenario* sc_;
    std::map<double, DepthMap> depth_;  // per frequency, ModelBased only

    const DepthMap* depth_for(double f_mhz) const;
};

// Training run artifacts: config snapshot, loss trace CSV, checkpoint with
// metadata sidecar, and the exact sample masks used.
void write_run_dir(const TrainResult& result, const UrbanScenario& sc,
                   const std::string& config_snapshot, const std::filesystem::path& dir);

}  // namespace radiomap

#endif  // RADIOMAP_TRAINER_HPP
