// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_GRAPH_HPP
#define RADIOMAP_GRAPH_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "radiomap/depth.hpp"
#include "radiomap/radiomap_tensor.hpp"
#include "radiomap/scenario.hpp"

namespace radiomap {

// One non-building grid of a block at a fixed frequency.
struct RadioNode {
    GridIndex grid;                           // global indices
    Vec2 position_m;                          // global coordinates
    double frequency_mhz = 0.0;
    std::optional<double> observed_rss_dbm;   // absent = unobserved
};

enum class EncodingKind { Adjacency, Environment, Transmitter, ModelBased };

enum class Neighborhood { Four, Eight };

struct EncodingStrategy {
    EncodingKind kind = EncodingKind::ModelBased;
    Neighborhood neighborhood = Neighborhood::Four;  // Adjacency encoding
    double collinear_tol_grids = 0.5;                // Transmitter encoding
    bool range_limited = true;        // Environment/Transmitter: also require d <= d_th
    bool connect_on_obstruction = false;  // Environment: literal rho=1 criterion
    DepthParams depth;                // ModelBased thresholds; d_th also range-limits
};

EncodingKind encoding_from_name(const std::string& name);  // adjacency|environment|transmitter|model
const char* encoding_name(EncodingKind kind);

// Sparse symmetric adjacency as per-node sorted neighbor lists (no self loops).
using AdjacencyLists = std::vector<std::vector<std::int32_t>>;

struct RadioGraph {
    std::vector<RadioNode> nodes;
    AdjacencyLists neighbors;
    BlockIndex block;
    double frequency_mhz = 0.0;

    std::size_t edge_count() const;
};

// One node per non-building grid of block b, row-major; observed_rss_dbm is
// taken from `data` exactly where sample_mask (rows*cols flags) is set.
std::vector<RadioNode> extract_nodes(const UrbanScenario& sc, const RadiomapTensor& data,
                                     BlockIndex b, double f_mhz,
                                     const std::vector<std::uint8_t>& sample_mask);

// Symmetric adjacency per the selected criterion. `depth` must be present for
// ModelBased (and match the node frequency) and is ignored otherwise.
AdjacencyLists encode_edges(std::span<const RadioNode> nodes, const UrbanScenario& sc,
                            const EncodingStrategy& strategy, const DepthMap* depth);

RadioGraph build_graph(const UrbanScenario& sc, const RadiomapTensor& data, BlockIndex b,
                       double f_mhz, const std::vector<std::uint8_t>& sample_mask,
                       const EncodingStrategy& strategy, const DepthMap* depth);

struct GraphStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::size_t isolated_count = 0;
    double mean_degree = 0.0;
};

GraphStats graph_stats(const RadioGraph& g);

// Edge list `i j` per line plus a node table
// `idx,row,col,x_m,y_m,observed_rss` (empty field when unobserved).
void export_graph(const RadioGraph& g, const std::filesystem::path& edges_path,
                  const std::filesystem::path& nodes_path);

}  // namespace radiomap

#endif  // RADIOMAP_GRAPH_HPP
