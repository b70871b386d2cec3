/******************************************************************************
 * balance.hpp
 *
 * Part of cutcactus.
 *
 * Linear-time extraction of the most balanced minimum cut (and other
 * side-aggregate objectives) from a cactus: one depth-first traversal of the
 * cycle-contracted tree, scoring every tree-edge cut on backtrack and
 * scanning each cycle with a two-queue pass.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cutcactus/cactus.hpp"
#include "cutcactus/static_graph.hpp"

namespace cutcactus {

/// Objective over bipartitions that depends only on the aggregate node
/// weight of one side. The score must be computable in constant time and
/// monotone in the lighter side's weight, which keeps the scan linear and
/// lets the cycle pass discard dominated splits.
struct CutObjective {
    std::vector<EdgeWeight> node_weight;  // per cactus node
    std::function<EdgeWeight(EdgeWeight side, EdgeWeight total)> score;
};

/// Balance: node weight is the number of encompassed original vertices,
/// score is the lighter side's vertex count.
CutObjective balance_objective(const Cactus& cactus);

/// Restricted conductance: node weight is the sum of weighted degrees of the
/// encompassed original vertices; maximizing the lighter side's degree sum
/// minimizes cut_weight / min(side degree sums) over the minimum cuts.
CutObjective conductance_objective(const Cactus& cactus,
                                   const StaticGraph& g);

struct CutSelection {
    bool found = false;
    /// One tree edge or two edges of one cycle (indices into the cactus).
    std::vector<std::size_t> cut_edges;
    /// The side of the cut not containing the traversal root.
    std::vector<NodeId> side;
    std::vector<bool> in_side;  // per original vertex
    EdgeWeight objective = 0;
};

struct CycleScanResult {
    EdgeWeight best_score = 0;
    bool found = false;
    std::uint32_t arc_start = 0;  // positions of the winning side, cyclic
    std::uint32_t arc_len = 0;
    std::size_t dequeues = 0;
};

/// Two-queue scan over a cycle given the sub-cactus weights of its nodes in
/// cyclic order; weights[0] belongs to the traversal entry and accounts for
/// everything outside the cycle. Considers only splits into two contiguous
/// arcs (which contain the optimum) and terminates after at most 3 * size
/// dequeue operations. Requires at least three entries.
CycleScanResult balance_in_cycle(
    const std::vector<EdgeWeight>& weights, EdgeWeight total,
    const std::function<EdgeWeight(EdgeWeight, EdgeWeight)>& score);

/// Convenience overload scoring the lighter side's weight.
CycleScanResult balance_in_cycle(const std::vector<EdgeWeight>& weights,
                                 EdgeWeight total);

/// Most balanced minimum cut; n must equal the number of original vertices.
/// Returns found == false on a single-node cactus.
CutSelection most_balanced_cut(const Cactus& cactus, NodeId n);

/// Same traversal with caller-supplied node weights and score.
CutSelection best_cut_by_objective(const Cactus& cactus,
                                   const CutObjective& objective);

}  // namespace cutcactus
