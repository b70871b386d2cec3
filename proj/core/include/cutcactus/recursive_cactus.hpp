/******************************************************************************
 * recursive_cactus.hpp
 *
 * Part of cutcactus.
 *
 * Recursive construction of the minimum-cut cactus. Each level picks an edge
 * (s, t): if the maximum s-t flow exceeds lambda the edge joins no minimum
 * cut and is contracted; otherwise the residual components form a chain
 * whose prefixes are exactly the minimum s-t cuts. Consecutive runs of
 * components whose interior segments all cut exactly lambda become cactus
 * cycles, the remaining seams become tree edges, and components with more
 * than one vertex are solved recursively with everything else contracted
 * into a placeholder vertex.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cutcactus/cactus.hpp"
#include "cutcactus/dynamic_graph.hpp"

namespace cutcactus {

enum class EdgeSelection : std::uint8_t {
    kRandom,
    kCentral,
    kHeavy,
    kWeightedHeavy,
};

struct SelectionStrategy {
    EdgeSelection kind = EdgeSelection::kHeavy;
    std::mt19937_64 rng{0};
};

/// Chosen edge as (vertex, adjacency slot).
struct EdgeRef {
    NodeId vertex;
    std::size_t slot;
};

/// Picks the next flow edge. Heavy: edge from the vertex of maximum degree
/// to its maximum-degree neighbor (unweighted degrees); WeightedHeavy: the
/// same with weighted degrees; Central: double breadth-first search, middle
/// edge of the final shortest path; Random: uniform over edges. Ties go to
/// the lowest vertex id. Throws on an edgeless graph.
EdgeRef select_edge(const DynamicGraph& g, SelectionStrategy& strategy);

/// Reinsertion records for vertices contracted during the recursion (and,
/// with kLeaf, for the kernel's degree-one stack semantics).
struct ReinsertRecord {
    enum class Kind : std::uint8_t {
        kLeaf,          // attach as a leaf at the node holding attach_rep
        kCycleOrLeaf,   // degree-two case: leaf if reps share a node, else
                        // splice into the direct connection between them
    };
    Kind kind;
    std::vector<NodeId> originals;
    NodeId attach_rep;   // kLeaf: host; kCycleOrLeaf: side merged with
    NodeId other_rep;    // kCycleOrLeaf only
};

/// One pass of degree-two reductions with cascade. For a vertex v with
/// exactly two neighbors: unequal edge weights allow contracting the heavier
/// edge (recording a leaf when the trivial cut of v is minimum); equal
/// weights with minimum trivial cut contract one edge and record a
/// cycle-or-leaf reinsertion; equal weights above the minimum leave v alone.
std::size_t degree_two_contract(DynamicGraph& g, EdgeWeight lambda,
                                std::vector<ReinsertRecord>& records);

/// Degree-one reduction inside the recursion: the single incident edge is
/// at least lambda; contract it, recording a leaf when it is exactly lambda.
std::size_t contract_degree_one_dynamic(DynamicGraph& g, EdgeWeight lambda,
                                        std::vector<ReinsertRecord>& records);

/// Applies one record to the cactus (records are replayed in reverse order
/// of creation).
void apply_reinsert(Cactus& cactus, const ReinsertRecord& record);

struct RecursionHooks {
    bool degree_one = true;
    bool degree_two = true;
    bool kernel_inside = true;     // connectivity + local contraction
    unsigned kernel_cadence = 10;  // recursion steps between kernel runs
};

/// Skeleton of the chain decomposition at one recursion level: one node per
/// residual component plus the tree/cycle classification of the seams.
struct ComponentCactus {
    Cactus skeleton;                    // one node per component
    std::vector<NodeId> comp_node;      // component -> skeleton node
};

/// Replaces each skeleton node that has a sub-cactus by that cactus; edges
/// incident to the node reattach at the sub-cactus node holding the
/// attachment representative (the placeholder vertex standing for the rest
/// of the graph).
Cactus merge_cacti(const ComponentCactus& component_cactus,
                   std::vector<std::optional<Cactus>> sub_cacti,
                   const std::vector<NodeId>& placeholder_reps,
                   NodeId num_originals);

/// Builds the cactus of all cuts of weight exactly `lambda` of g. The graph
/// is consumed. `lambda` must be the exact minimum cut value of g (or a
/// value such that no smaller cut exists).
Cactus recursive_cactus(DynamicGraph g, EdgeWeight lambda,
                        SelectionStrategy& strategy,
                        const RecursionHooks& hooks);

struct DegreeOneRecord;

/// Replays the kernel's degree-one stack in reverse order. Records whose
/// edge weight differs from the final minimum cut are dropped.
void reinsert_degree_one(Cactus& cactus,
                         std::vector<DegreeOneRecord>& stack,
                         EdgeWeight lambda);

/// Replays recursion-time records in reverse order (degree-two splices and
/// in-recursion leaves).
void reinsert_degree_two(Cactus& cactus, std::vector<ReinsertRecord>& stack);

}  // namespace cutcactus
