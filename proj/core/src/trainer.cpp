// SPDX-License-Identifier: Apache-2.0
#include "radiomap/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>

#include "radiomap/error.hpp"
#include "radiomap/neural/adam.hpp"
#include "radiomap/neural/checkpoint.hpp"
#include "radiomap/rng.hpp"

namespace radiomap {

namespace {

struct PreparedBlock {
    BlockIndex block;
    std::vector<RadioNode> nodes;
    neural::NeighborhoodCsr nb_obv;
    // Per target frequency: adjacency, normalized labels, label mask.
    std::vector<neural::NeighborhoodCsr> nb_target;
    std::vector<std::vector<double>> labels;
    std::vector<std::vector<std::uint8_t>> mask;
    neural::Tensor features;  // target-frequency channel patched per step
};

std::vector<std::uint8_t> label_mask_for_block(const UrbanScenario& sc, BlockIndex b,
                                               double fraction, std::uint64_t seed) {
    std::vector<std::uint8_t> mask(sc.grid_count(), 0);
    for (const GridIndex& g : sampled_grids(sc, b, fraction, mix_seed(seed, "labels")))
        mask[sc.cell_index(g)] = 1;
    return mask;
}

}  // namespace

TrainResult train(const UrbanScenario& sc, const RadiomapTensor& ground_truth,
                  const BlockSplit& split, const TrainingConfig& cfg) {
    if (cfg.lr <= 0.0) throw DataError("train: lr must be positive");
    if (cfg.epochs < 0) throw DataError("train: epochs must be non-negative");
    if (cfg.mask_fraction <= 0.0 || cfg.mask_fraction > 1.0)
        throw DataError("train: mask_fraction must be in (0,1]");
    if (split.b1.empty()) throw DataError("train: B1 is empty");
    if (cfg.f_target_mhz.empty()) throw DataError("train: no target frequency");
    for (double ft : cfg.f_target_mhz)
        if (ft == cfg.f_obv_mhz)
            throw DataError("train: f_target must differ from f_obv");
    if (sc.freq_index(cfg.f_obv_mhz) < 0) throw DataError("train: f_obv not in the scenario");

    TrainResult result;
    result.config = cfg;
    result.obs_mask = observation_mask(sc, cfg.sample_rate, mix_seed(cfg.seed, "obs"));

    // Depth maps (model-based encoding only); LOS sums are shared across bands.
    std::map<double, DepthMap> depth;
    if (cfg.strategy.kind == EncodingKind::ModelBased) {
        const std::vector<double> los = los_sum_to_transmitters(sc);
        depth.emplace(cfg.f_obv_mhz,
                      radio_depth_map(sc, cfg.strategy.depth, cfg.f_obv_mhz, los));
        for (double ft : cfg.f_target_mhz)
            depth.emplace(ft, radio_depth_map(sc, cfg.strategy.depth, ft, los));
    }
    auto depth_ptr = [&](double f) -> const DepthMap* {
        auto it = depth.find(f);
        return it == depth.end() ? nullptr : &it->second;
    };

    // Label masks per target frequency (shared across blocks via per-block streams).
    for (double ft : cfg.f_target_mhz) {
        std::vector<std::uint8_t> mask(sc.grid_count(), 0);
        for (const BlockIndex& b : split.b1) {
            const auto block_mask = label_mask_for_block(sc, b, cfg.mask_fraction, cfg.seed);
            for (std::size_t i = 0; i < mask.size(); ++i) mask[i] |= block_mask[i];
        }
        result.label_masks.emplace(ft, std::move(mask));
    }

    // RSS bounds over B1 measurements only: sampled f_obv observations plus
    // the masked-in f_target labels.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    const int k_obv = ground_truth.freq_index(cfg.f_obv_mhz);
    for (const BlockIndex& b : split.b1)
        for (const GridIndex& g : sc.block_grids(b)) {
            if (sc.building(g)) continue;
            if (result.obs_mask[sc.cell_index(g)]) {
                const double v = ground_truth.at(g, k_obv);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            for (double ft : cfg.f_target_mhz) {
                if (!result.label_masks.at(ft)[sc.cell_index(g)]) continue;
                const double v = ground_truth.at(g, ground_truth.freq_index(ft));
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
    result.scaler = FeatureScaler::for_scenario(sc, ChannelBounds(lo, hi));

    // Assemble per-block training data.
    std::vector<PreparedBlock> blocks;
    bool any_masked = false;
    for (const BlockIndex& b : split.b1) {
        PreparedBlock pb;
        pb.block = b;
        pb.nodes = extract_nodes(sc, ground_truth, b, cfg.f_obv_mhz, result.obs_mask);
        if (pb.nodes.empty()) continue;
        pb.nb_obv = neural::NeighborhoodCsr::from_adjacency(
            encode_edges(pb.nodes, sc, cfg.strategy, depth_ptr(cfg.f_obv_mhz)));
        pb.features =
            assemble_features(pb.nodes, cfg.f_obv_mhz, cfg.f_target_mhz.front(), result.scaler);
        for (double ft : cfg.f_target_mhz) {
            std::vector<RadioNode> target_nodes = pb.nodes;
            for (RadioNode& n : target_nodes) n.frequency_mhz = ft;
            pb.nb_target.push_back(neural::NeighborhoodCsr::from_adjacency(
                encode_edges(target_nodes, sc, cfg.strategy, depth_ptr(ft))));
            const int kt = ground_truth.freq_index(ft);
            std::vector<double> labels(pb.nodes.size(), 0.0);
            std::vector<std::uint8_t> mask(pb.nodes.size(), 0);
            const auto& grid_mask = result.label_masks.at(ft);
            for (std::size_t i = 0; i < pb.nodes.size(); ++i) {
                const GridIndex g = pb.nodes[i].grid;
                labels[i] = result.scaler.rss.normalize(ground_truth.at(g, kt));
                mask[i] = grid_mask[sc.cell_index(g)];
                any_masked |= mask[i] != 0;
            }
            pb.labels.push_back(std::move(labels));
            pb.mask.push_back(std::move(mask));
        }
        blocks.push_back(std::move(pb));
    }
    if (blocks.empty()) throw DataError("train: B1 has no usable blocks");
    if (!any_masked) throw DataError("train: no masked nodes anywhere in B1");

    neural::GatConfig net_cfg;
    net_cfg.input_dim = kFeatureDim;
    net_cfg.hidden_dim = cfg.hidden_dim;
    result.model = neural::GatModel::init(net_cfg, mix_seed(cfg.seed, "init"));

    neural::AdamState adam;
    adam.lr = cfg.lr;
    const std::size_t target_count = cfg.f_target_mhz.size();
    std::size_t step = 0;

    std::vector<std::size_t> order(blocks.size());
    std::iota(order.begin(), order.end(), 0);
    for (long epoch = 0; epoch < cfg.epochs; ++epoch) {
        Rng rng(mix_seed(cfg.seed, "order", static_cast<std::uint64_t>(epoch)));
        rng.shuffle(order);
        double loss_sum = 0.0;
        for (std::size_t oi = 0; oi < order.size(); ++oi) {
            PreparedBlock& pb = blocks[order[oi]];
            const std::size_t t = step % target_count;
            ++step;
            const double ft = cfg.f_target_mhz[t];
            const double ft_norm = result.scaler.freq.normalize(ft);
            for (std::size_t i = 0; i < pb.nodes.size(); ++i) pb.features.at(i, 4) = ft_norm;

            const neural::Tensor& out =
                result.model.forward(pb.features, pb.nb_obv, pb.nb_target[t]);
            loss_sum += neural::masked_mse_loss(out.data, pb.labels[t], pb.mask[t]);
            neural::Tensor grad;
            grad.shape = out.shape;
            grad.data = neural::masked_mse_grad(out.data, pb.labels[t], pb.mask[t]);
            result.model.backward(grad);
            adam_step(adam, result.model.parameters(), result.model.gradients());
        }
        result.epoch_loss.push_back(loss_sum / static_cast<double>(blocks.size()));
    }
    return result;
}

Reconstructor::Reconstructor(neural::GatModel model, FeatureScaler scaler, TrainingConfig cfg,
                             const UrbanScenario& sc)
    : model_(std::move(model)), scaler_(scaler), cfg_(std::move(cfg)), sc_(&sc) {
    if (cfg_.strategy.kind == EncodingKind::ModelBased) {
        const std::vector<double> los = los_sum_to_transmitters(sc);
        for (double f : sc.frequencies_mhz)
            depth_.emplace(f, radio_depth_map(sc, cfg_.strategy.depth, f, los));
    }
}

const DepthMap* Reconstructor::depth_for(double f_mhz) const {
    auto it = depth_.find(f_mhz);
    return it == depth_.end() ? nullptr : &it->second;
}

std::vector<double> Reconstructor::predict_block(const RadiomapTensor& observed,
                                                 const std::vector<std::uint8_t>& obs_mask,
                                                 BlockIndex b, double f_target_mhz) const {
    if (sc_->freq_index(f_target_mhz) < 0)
        throw DataError("predict: unknown target frequency " + std::to_string(f_target_mhz));
    std::vector<RadioNode> nodes =
        extract_nodes(*sc_, observed, b, cfg_.f_obv_mhz, obs_mask);
    if (nodes.empty()) return {};
    const neural::NeighborhoodCsr nb_obv = neural::NeighborhoodCsr::from_adjacency(
        encode_edges(nodes, *sc_, cfg_.strategy, depth_for(cfg_.f_obv_mhz)));
    std::vector<RadioNode> target_nodes = nodes;
    for (RadioNode& n : target_nodes) n.frequency_mhz = f_target_mhz;
    const neural::NeighborhoodCsr nb_target = neural::NeighborhoodCsr::from_adjacency(
        encode_edges(target_nodes, *sc_, cfg_.strategy, depth_for(f_target_mhz)));

    const neural::Tensor x = assemble_features(nodes, cfg_.f_obv_mhz, f_target_mhz, scaler_);
    const neural::Tensor& out = model_.forward(x, nb_obv, nb_target);
    std::vector<double> pred(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        pred[i] = scaler_.rss.denormalize(out.data[i]);
    return pred;
}

RadiomapTensor Reconstructor::splice(const RadiomapTensor& observed,
                                     const std::vector<std::uint8_t>& obs_mask,
                                     std::span<const BlockIndex> blocks,
                                     bool overwrite_observed_band) const {
    RadiomapTensor out = RadiomapTensor::empty_like(*sc_);
    const int k_obv = observed.freq_index(cfg_.f_obv_mhz);
    for (int k = 0; k < out.band_count(); ++k) {
        const double f = sc_->frequencies_mhz[static_cast<std::size_t>(k)];
        for (const BlockIndex& b : blocks) {
            const std::vector<double> pred = predict_block(observed, obs_mask, b, f);
            const std::vector<RadioNode> nodes =
                extract_nodes(*sc_, observed, b, cfg_.f_obv_mhz, obs_mask);
            for (std::size_t i = 0; i < nodes.size(); ++i)
                out.set(nodes[i].grid.row, nodes[i].grid.col, k, pred[i]);
        }
        if (overwrite_observed_band && f == cfg_.f_obv_mhz) {
            for (int r = 0; r < out.rows(); ++r)
                for (int c = 0; c < out.cols(); ++c)
                    if (obs_mask[sc_->cell_index(GridIndex{r, c})])
                        out.set(r, c, k, observed.at(r, c, k_obv));
        }
    }
    return out;
}

void write_run_dir(const TrainResult& result, const UrbanScenario& sc,
                   const std::string& config_snapshot, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);

    {
        std::ofstream out(dir / "config.snapshot", std::ios::binary);
        if (!out) throw DataError("cannot write config snapshot");
        out << config_snapshot;
    }
    {
        std::ofstream out(dir / "loss_trace.csv", std::ios::binary);
        if (!out) throw DataError("cannot write loss trace");
        out << "epoch,mean_loss\n";
        char buf[64];
        for (std::size_t e = 0; e < result.epoch_loss.size(); ++e) {
            std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", e, result.epoch_loss[e]);
            out << buf;
        }
    }
    neural::save_checkpoint(result.model, dir / "model.ckpt");
    neural::CheckpointMeta meta;
    meta.config_hash = neural::content_hash(config_snapshot);
    meta.seed = result.config.seed;
    meta.epoch = static_cast<long>(result.epoch_loss.size());
    meta.rss_min_dbm = result.scaler.rss.lo;
    meta.rss_max_dbm = result.scaler.rss.hi;
    neural::save_checkpoint_meta(meta, dir / "model.ckpt.meta.json");

    {
        std::ofstream out(dir / "masks.csv", std::ios::binary);
        if (!out) throw DataError("cannot write masks");
        out << "kind,f_mhz,block_row,block_col,row,col\n";
        char buf[96];
        auto dump = [&](const char* kind, double f, const std::vector<std::uint8_t>& mask) {
            for (int r = 0; r < sc.rows(); ++r)
                for (int c = 0; c < sc.cols(); ++c) {
                    if (!mask[sc.cell_index(GridIndex{r, c})]) continue;
                    const BlockIndex b = sc.block_of(GridIndex{r, c});
                    std::snprintf(buf, sizeof(buf), "%s,%.10g,%d,%d,%d,%d\n", kind, f, b.row,
                                  b.col, r, c);
                    out << buf;
                }
        };
        dump("obs", result.config.f_obv_mhz, result.obs_mask);
        for (const auto& [f, mask] : result.label_masks) dump("label", f, mask);
    }
}

}  // namespace radiomap
