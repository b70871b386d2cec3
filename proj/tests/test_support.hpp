#pragma once

#include <random>
#include <set>
#include <vector>

#include "cutcactus/cactus.hpp"
#include "cutcactus/oracle.hpp"
#include "cutcactus/static_graph.hpp"

namespace cutcactus::testing {

inline StaticGraph graph_from(std::vector<WeightedEdge> edges, NodeId n) {
    return StaticGraph::from_edges(edges, n);
}

/// Canonical bipartition masks represented by a cactus (n <= 32).
inline std::set<std::uint32_t> cactus_cut_masks(const Cactus& cactus,
                                                NodeId n) {
    std::set<std::uint32_t> out;
    cactus.for_each_min_cut([&](const std::vector<NodeId>& side) {
        std::uint32_t mask = 0;
        for (NodeId v : side) {
            mask |= 1u << v;
        }
        out.insert(canonical_side(mask, n));
    });
    return out;
}

inline std::set<std::uint32_t> oracle_cut_masks(const StaticGraph& g) {
    CutSet cs = brute_force_min_cuts(g);
    return {cs.sides.begin(), cs.sides.end()};
}

}  // namespace cutcactus::testing
