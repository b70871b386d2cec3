/******************************************************************************
 * flow.hpp
 *
 * Part of cutcactus.
 *
 * Integer maximum flow and the residual-graph SCC structure that encodes all
 * minimum s-t cuts: a bipartition (S, V\S) with s in S is a minimum s-t cut
 * exactly when no arc of positive residual capacity leaves S.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <vector>

#include "cutcactus/dynamic_graph.hpp"
#include "cutcactus/static_graph.hpp"

namespace cutcactus {

/// Arc-list network with paired arcs (a, a^1). Each undirected edge becomes
/// two opposing arcs of equal capacity; pushing flow over one arc adds
/// residual capacity to its partner on top of the partner's own capacity.
class FlowNetwork {
 public:
    explicit FlowNetwork(NodeId n) : first_(n, -1) {}

    NodeId num_vertices() const { return static_cast<NodeId>(first_.size()); }
    std::size_t num_arcs() const { return to_.size(); }

    void add_undirected_edge(NodeId u, NodeId v, EdgeWeight capacity);

    NodeId arc_target(std::size_t a) const { return to_[a]; }
    EdgeWeight residual(std::size_t a) const { return residual_[a]; }
    EdgeWeight capacity(std::size_t a) const { return capacity_[a]; }

    std::int64_t first_arc_of(NodeId u) const { return first_[u]; }
    std::int64_t next_arc(std::size_t a) const { return next_[a]; }

    template <typename Fn>
    void for_arcs(NodeId u, Fn&& fn) const {
        for (std::int64_t a = first_[u]; a >= 0; a = next_[a]) {
            fn(static_cast<std::size_t>(a));
        }
    }

 private:
    friend EdgeWeight dinic_max_flow(FlowNetwork& net, NodeId s, NodeId t);

    std::vector<std::int64_t> first_;
    std::vector<std::int64_t> next_;
    std::vector<NodeId> to_;
    std::vector<EdgeWeight> residual_;
    std::vector<EdgeWeight> capacity_;
};

/// Runs Dinic's algorithm to completion; the network afterwards holds the
/// residual capacities of a maximum flow.
EdgeWeight dinic_max_flow(FlowNetwork& net, NodeId s, NodeId t);

struct FlowResult {
    EdgeWeight value = 0;
    FlowNetwork network;
    NodeId s = 0;
    NodeId t = 0;
};

/// Maximum s-t flow on a static graph. Throws if s == t.
FlowResult max_flow(const StaticGraph& g, NodeId s, NodeId t);

struct SccPartition {
    std::vector<NodeId> component;  // per vertex
    NodeId count = 0;
    NodeId component_of_s = 0;
    NodeId component_of_t = 0;
};

/// Strongly connected components of the residual graph (arcs with positive
/// residual capacity). Component ids are in reverse topological order of the
/// condensation: an arc between components always goes from a higher id to a
/// lower id.
SccPartition residual_sccs(const FlowResult& flow);

/// Components of a maximum s-t flow ordered so that every closed set is a
/// prefix: chain[0] contains s, chain.back() contains t, and each prefix
/// union is the source side of one minimum s-t cut. Valid whenever the
/// minimum s-t cuts form a nested family (always the case for adjacent s, t
/// when the flow value equals the global minimum cut). Throws an internal
/// error if the condensation order is not total.
std::vector<std::vector<NodeId>> residual_chain(const FlowResult& flow);

/// Network over the alive vertices of a dynamic graph; fills `index` with
/// the dense id per alive vertex and `vertex` with the inverse map.
FlowNetwork build_network(const DynamicGraph& g, std::vector<NodeId>& index,
                          std::vector<NodeId>& vertex);

}  // namespace cutcactus
