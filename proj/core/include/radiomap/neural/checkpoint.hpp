// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_NEURAL_CHECKPOINT_HPP
#define RADIOMAP_NEURAL_CHECKPOINT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "radiomap/neural/gat.hpp"

namespace radiomap::neural {

// Binary checkpoint: magic "GATC", u32 version, u32 layer count, then per layer
// u32 in/out dims, u8 activation, f64 leaky slope, and the raw f64 parameter
// arrays (weight, then attention) in declaration order.
void save_checkpoint(const GatModel& model, const std::filesystem::path& path);
GatModel load_checkpoint(const std::filesystem::path& path);

// Flat JSON sidecar next to the checkpoint (informational).
struct CheckpointMeta {
    std::string config_hash;
    std::uint64_t seed = 0;
    long epoch = 0;
    double rss_min_dbm = 0.0;
    double rss_max_dbm = 0.0;
};

void save_checkpoint_meta(const CheckpointMeta& meta, const std::filesystem::path& path);
CheckpointMeta load_checkpoint_meta(const std::filesystem::path& path);

// FNV-1a over raw bytes, hex string; used as the config hash.
std::string content_hash(const std::string& bytes);

}  // namespace radiomap::neural

#endif  // RADIOMAP_NEURAL_CHECKPOINT_HPP
