// SPDX-License-Identifier: Apache-2.0
#include "radiomap/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "radiomap/error.hpp"
#include "radiomap/geometry.hpp"

namespace radiomap {

EncodingKind encoding_from_name(const std::string& name) {
    if (name == "adjacency") return EncodingKind::Adjacency;
    if (name == "environment") return EncodingKind::Environment;
    if (name == "transmitter") return EncodingKind::Transmitter;
    if (name == "model") return EncodingKind::ModelBased;
    throw DataError("unknown encoding `" + name +
                    "` (expected adjacency|environment|transmitter|model)");
}

const char* encoding_name(EncodingKind kind) {
    switch (kind) {
        case EncodingKind::Adjacency: return "adjacency";
        case EncodingKind::Environment: return "environment";
        case EncodingKind::Transmitter: return "transmitter";
        case EncodingKind::ModelBased: return "model";
    }
    return "?";
}

std::size_t RadioGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : neighbors) twice += nb.size();
    return twice / 2;
}

std::vector<RadioNode> extract_nodes(const UrbanScenario& sc, const RadiomapTensor& data,
                                     BlockIndex b, double f_mhz,
                                     const std::vector<std::uint8_t>& sample_mask) {
    const int k = data.freq_index(f_mhz);
    if (k < 0 || sc.freq_index(f_mhz) < 0)
        throw DataError("frequency " + std::to_string(f_mhz) + " MHz is not in the scenario");
    if (sample_mask.size() != sc.grid_count())
        throw DataError("sample mask size does not match the grid");

    std::vector<RadioNode> nodes;
    for (const GridIndex& g : sc.block_grids(b)) {
        if (sc.building(g)) continue;
        RadioNode n;
        n.grid = g;
        n.position_m = sc.center_m(g);
        n.frequency_mhz = f_mhz;
        if (sample_mask[sc.cell_index(g)]) n.observed_rss_dbm = data.at(g, k);
        nodes.push_back(n);
    }
    return nodes;
}

namespace {

void add_edge(AdjacencyLists& adj, std::int32_t i, std::int32_t j) {
    adj[static_cast<std::size_t>(i)].push_back(j);
    adj[static_cast<std::size_t>(j)].push_back(i);
}

// Lookup from global grid index to node index, restricted to the nodes' block.
struct BlockNodeIndex {
    int r0, c0, side;
    std::vector<std::int32_t> map;  // side*side, -1 = building

    BlockNodeIndex(const UrbanScenario& sc, std::span<const RadioNode> nodes) {
        side = sc.grids_per_block_side();
        if (nodes.empty()) {
            r0 = c0 = 0;
            return;
        }
        const BlockIndex b = sc.block_of(nodes.front().grid);
        r0 = b.row * side;
        c0 = b.col * side;
        map.assign(static_cast<std::size_t>(side) * side, -1);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const GridIndex g = nodes[i].grid;
            map[static_cast<std::size_t>(g.row - r0) * side + (g.col - c0)] =
                static_cast<std::int32_t>(i);
        }
    }

    std::int32_t at(int row, int col) const {
        if (row < r0 || row >= r0 + side || col < c0 || col >= c0 + side) return -1;
        return map[static_cast<std::size_t>(row - r0) * side + (col - c0)];
    }
};

double dist_m(const RadioNode& a, const RadioNode& b) {
    return std::hypot(a.position_m.x - b.position_m.x, a.position_m.y - b.position_m.y);
}

}  // namespace

AdjacencyLists encode_edges(std::span<const RadioNode> nodes, const UrbanScenario& sc,
                            const EncodingStrategy& strategy, const DepthMap* depth) {
    AdjacencyLists adj(nodes.size());
    if (nodes.empty()) return adj;

    const double d_th = strategy.depth.d_th_m;

    if (strategy.kind == EncodingKind::ModelBased) {
        if (depth == nullptr)
            throw DataError("model-based encoding requires a depth map");
        if (depth->frequency_mhz() != nodes.front().frequency_mhz)
            throw DataError("depth map frequency does not match the node frequency");
    }

    switch (strategy.kind) {
        case EncodingKind::Adjacency: {
            const BlockNodeIndex index(sc, nodes);
            const bool eight = strategy.neighborhood == Neighborhood::Eight;
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                const GridIndex g = nodes[i].grid;
                // Only the "forward" half of the neighborhood; symmetry adds the rest.
                static constexpr int four[2][2] = {{0, 1}, {1, 0}};
                static constexpr int diag[2][2] = {{1, 1}, {1, -1}};
                for (const auto& d : four) {
                    const std::int32_t j = index.at(g.row + d[0], g.col + d[1]);
                    if (j >= 0) add_edge(adj, static_cast<std::int32_t>(i), j);
                }
                if (eight)
                    for (const auto& d : diag) {
                        const std::int32_t j = index.at(g.row + d[0], g.col + d[1]);
                        if (j >= 0) add_edge(adj, static_cast<std::int32_t>(i), j);
                    }
            }
            break;
        }
        case EncodingKind::ModelBased: {
            const BlockNodeIndex index(sc, nodes);
            const int reach = static_cast<int>(std::ceil(d_th / sc.grid_size_m));
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                const GridIndex g = nodes[i].grid;
                const double di = depth->at(g);
                // Scan the forward half-plane of the reach window once per node.
                for (int dr = 0; dr <= reach; ++dr) {
                    const int c_begin = (dr == 0) ? 1 : -reach;
                    for (int dc = c_begin; dc <= reach; ++dc) {
                        const std::int32_t j = index.at(g.row + dr, g.col + dc);
                        if (j < 0) continue;
                        const RadioNode& nj = nodes[static_cast<std::size_t>(j)];
                        if (dist_m(nodes[i], nj) > d_th) continue;
                        if (std::abs(di - depth->at(nj.grid)) > strategy.depth.delta) continue;
                        add_edge(adj, static_cast<std::int32_t>(i), j);
                    }
                }
            }
            break;
        }
        case EncodingKind::Environment:
        case EncodingKind::Transmitter: {
            const bool limited = strategy.range_limited;
            auto connected = [&](const RadioNode& a, const RadioNode& b) {
                if (strategy.kind == EncodingKind::Environment) {
                    const bool rho = obstruction_exists(sc, a.grid, b.grid);
                    return strategy.connect_on_obstruction ? rho : !rho;
                }
                for (int m = 0; m < static_cast<int>(sc.transmitters.size()); ++m)
                    if (collinear_with_transmitter(sc, a.grid, b.grid, m,
                                                   strategy.collinear_tol_grids))
                        return true;
                return false;
            };
            if (limited) {
                const BlockNodeIndex index(sc, nodes);
                const int reach = static_cast<int>(std::ceil(d_th / sc.grid_size_m));
                for (std::size_t i = 0; i < nodes.size(); ++i) {
                    const GridIndex g = nodes[i].grid;
                    for (int dr = 0; dr <= reach; ++dr) {
                        const int c_begin = (dr == 0) ? 1 : -reach;
                        for (int dc = c_begin; dc <= reach; ++dc) {
                            const std::int32_t j = index.at(g.row + dr, g.col + dc);
                            if (j < 0) continue;
                            const RadioNode& nj = nodes[static_cast<std::size_t>(j)];
                            if (dist_m(nodes[i], nj) > d_th) continue;
                            if (connected(nodes[i], nj))
                                add_edge(adj, static_cast<std::int32_t>(i), j);
                        }
                    }
                }
            } else {
                for (std::size_t i = 0; i < nodes.size(); ++i)
                    for (std::size_t j = i + 1; j < nodes.size(); ++j)
                        if (connected(nodes[i], nodes[j]))
                            add_edge(adj, static_cast<std::int32_t>(i),
                                     static_cast<std::int32_t>(j));
            }
            break;
        }
    }

    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

RadioGraph build_graph(const UrbanScenario& sc, const RadiomapTensor& data, BlockIndex b,
                       double f_mhz, const std::vector<std::uint8_t>& sample_mask,
                       const EncodingStrategy& strategy, const DepthMap* depth) {
    RadioGraph g;
    g.block = b;
    g.frequency_mhz = f_mhz;
    g.nodes = extract_nodes(sc, data, b, f_mhz, sample_mask);
    g.neighbors = encode_edges(g.nodes, sc, strategy, depth);
    return g;
}

GraphStats graph_stats(const RadioGraph& g) {
    GraphStats s;
    s.node_count = g.nodes.size();
    s.edge_count = g.edge_count();
    for (const auto& nb : g.neighbors)
        if (nb.empty()) ++s.isolated_count;
    s.mean_degree = s.node_count == 0
                        ? 0.0
                        : 2.0 * static_cast<double>(s.edge_count) / static_cast<double>(s.node_count);
    return s;
}

void export_graph(const RadioGraph& g, const std::filesystem::path& edges_path,
                  const std::filesystem::path& nodes_path) {
    std::ofstream edges(edges_path, std::ios::binary);
    if (!edges) throw DataError("cannot write " + edges_path.string());
    for (std::size_t i = 0; i < g.neighbors.size(); ++i)
        for (std::int32_t j : g.neighbors[i])
            if (static_cast<std::size_t>(j) > i) edges << i << " " << j << "\n";

    std::ofstream nodes(nodes_path, std::ios::binary);
    if (!nodes) throw DataError("cannot write " + nodes_path.string());
    nodes << "idx,row,col,x_m,y_m,observed_rss\n";
    char buf[128];
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const RadioNode& n = g.nodes[i];
        if (n.observed_rss_dbm)
            std::snprintf(buf, sizeof(buf), "%zu,%d,%d,%.10g,%.10g,%.17g\n", i, n.grid.row,
                          n.grid.col, n.position_m.x, n.position_m.y, *n.observed_rss_dbm);
        else
            std::snprintf(buf, sizeof(buf), "%zu,%d,%d,%.10g,%.10g,\n", i, n.grid.row,
                          n.grid.col, n.position_m.x, n.position_m.y);
        nodes << buf;
    }
}

}  // namespace radiomap
