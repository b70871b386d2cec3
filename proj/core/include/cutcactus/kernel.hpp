/******************************************************************************
 * kernel.hpp
 *
 * Part of cutcactus.
 *
 * Reduction rules that contract edges guaranteed to lie on no minimum cut,
 * and the kernelization driver that alternates them until convergence. All
 * criteria are strict in the upper bound lambda_hat, so every minimum cut of
 * the input survives into the kernel (plus the degree-one records).
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <vector>

#include "cutcactus/contraction.hpp"
#include "cutcactus/static_graph.hpp"
#include "cutcactus/union_find.hpp"

namespace cutcactus {

/// Vertex contracted away because its single incident edge is a candidate
/// trivial minimum cut. Replayed in reverse order after the cactus is built;
/// records whose weight exceeds the final minimum cut are dropped.
struct DegreeOneRecord {
    std::vector<NodeId> leaf;  // originals encompassed at contraction time
    NodeId neighbor_rep;       // an original inside the neighbor at that time
    EdgeWeight lambda_at_contraction = 0;
};

struct KernelState {
    EdgeWeight lambda_hat = kInfiniteWeight;
    std::vector<DegreeOneRecord> degree_one_stack;
    std::vector<ContractionMapping> mapping_history;
    /// Current vertex -> encompassed original vertices.
    std::vector<std::vector<NodeId>> groups;
};

/// Per-arc lower bounds q(e) <= lambda(G, e), from one certificate pass.
struct EdgeConnectivityBounds {
    std::vector<EdgeWeight> q;  // indexed by arc; mirror arcs agree
};

/// Upper bound for the minimum cut: the minimum weighted degree, sharpened
/// by a bounded number of heaviest-neighbor clustering contractions that
/// track the smallest degree seen. Never below the true minimum cut.
EdgeWeight estimate_lambda(const StaticGraph& g, int clustering_rounds = 3);

/// One maximum-spanning-forest style certificate pass from `start`.
/// Values are capped at lambda_hat + 1; anything above the cap is only ever
/// compared against lambda_hat.
EdgeConnectivityBounds connectivity_lower_bounds(const StaticGraph& g,
                                                 EdgeWeight lambda_hat,
                                                 NodeId start = 0);

/// Unions the endpoints of every edge with q(e) > lambda_hat (strictly;
/// edges of connectivity exactly lambda_hat may carry minimum cuts).
/// Returns the number of edges that satisfied the criterion.
std::size_t contract_high_connectivity(const StaticGraph& g,
                                       const EdgeConnectivityBounds& bounds,
                                       EdgeWeight lambda_hat, UnionFind& uf);

enum LocalRule : std::uint32_t {
    kHeavyEdge = 1u,
    kImbalancedVertex = 2u,
    kImbalancedTriangle = 4u,
    kHeavyNeighborhood = 8u,
    kAllLocalRules = 15u,
};

/// Local contraction criteria, one linear pass. Triangle and neighborhood
/// tests are only run on pairs of still-unmarked vertices; each vertex is
/// marked once consumed, which keeps the pass linear. Returns the number of
/// newly merged vertex pairs.
std::size_t local_contract(const StaticGraph& g, EdgeWeight lambda_hat,
                           UnionFind& uf,
                           std::uint32_t rule_mask = kAllLocalRules,
                           unsigned threads = 1);

/// Contracts vertices with a single neighbor, cascading: stripping a leaf
/// may expose its neighbor as the next leaf. Edges of weight exactly
/// lambda_hat produce a reinsertion record; heavier edges are left to the
/// HeavyEdge rule. A lighter edge is a better trivial cut and lowers
/// lambda_hat. Returns the number of contracted vertices.
std::size_t contract_degree_one(const StaticGraph& g, KernelState& state,
                                UnionFind& uf);

struct KernelOptions {
    bool use_degree_one = true;
    bool use_connectivity = true;
    bool use_local = true;
    std::uint32_t local_rule_mask = kAllLocalRules;
    double convergence_threshold = 0.01;
    unsigned threads = 1;
    std::uint64_t seed = 1;
    bool use_estimator = true;
    int estimator_rounds = 3;
    /// Caller-supplied starting upper bound (must be >= the minimum cut);
    /// 0 derives the bound from the estimator or the minimum degree.
    EdgeWeight initial_upper_bound = 0;
};

struct KernelResult {
    StaticGraph graph;
    KernelState state;
};

/// Alternates degree-one, connectivity-based and local contraction, updating
/// lambda_hat with the minimum weighted degree after every bulk contraction,
/// until a full round shrinks the graph by less than the threshold fraction.
KernelResult kernelize(const StaticGraph& g, const KernelOptions& opt = {});

}  // namespace cutcactus
