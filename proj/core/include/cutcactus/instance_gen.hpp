/******************************************************************************
 * instance_gen.hpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cutcactus/pipeline.hpp"
#include "cutcactus/static_graph.hpp"

namespace cutcactus {

/// Instance ladder: repeatedly compute the cactus, keep only the largest
/// block (every edge not joining two of its vertices is contracted) and
/// re-emit; each step raises the minimum cut. Stops early when the graph
/// collapses to a single vertex.
std::vector<StaticGraph> generate_instances(const StaticGraph& g, int depth,
                                            const RunConfig& cfg);

// --- synthetic graphs for tests and benchmarks -----------------------------

StaticGraph cycle_graph(NodeId n, EdgeWeight w = 1);
StaticGraph path_graph(NodeId n, EdgeWeight w = 1);
StaticGraph star_graph(NodeId leaves, EdgeWeight w = 1);
StaticGraph complete_graph(NodeId n, EdgeWeight w = 1);

StaticGraph random_tree(NodeId n, std::mt19937_64& rng, EdgeWeight w_min = 1,
                        EdgeWeight w_max = 1);

/// Random connected graph: a random spanning tree plus extra random edges.
StaticGraph random_connected_graph(NodeId n, std::size_t extra_edges,
                                   EdgeWeight w_min, EdgeWeight w_max,
                                   std::mt19937_64& rng);

/// Dense clusters joined by unit-weight bridge edges arranged as a random
/// tree over the clusters; the minimum cut is 1 and kernelization collapses
/// each cluster.
StaticGraph cluster_bridge_graph(NodeId clusters, NodeId cluster_size,
                                 NodeId intra_degree, std::mt19937_64& rng);

}  // namespace cutcactus
