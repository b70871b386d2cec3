/******************************************************************************
 * static_graph.hpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#pragma once

#include <cstddef>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "cutcactus/types.hpp"

namespace cutcactus {

struct WeightedEdge {
    NodeId u;
    NodeId v;
    EdgeWeight weight;
};

/// Immutable compressed adjacency graph. Every undirected edge is stored as
/// two arcs; arc a and its reverse arc satisfy reverse(reverse(a)) == a and
/// carry equal weight. No self loops, no parallel arcs, all weights >= 1.
class StaticGraph {
 public:
    StaticGraph() = default;

    /// Builds a graph from an edge list. Parallel edges are merged by summing
    /// weights, self loops are dropped. Rejects weight 0 and endpoints >= n.
    static StaticGraph from_edges(std::span<const WeightedEdge> edges,
                                  NodeId n);
    static StaticGraph from_edges(const std::vector<WeightedEdge>& edges,
                                  NodeId n) {
        return from_edges(std::span<const WeightedEdge>(edges), n);
    }
    static StaticGraph from_edges(std::initializer_list<WeightedEdge> edges,
                                  NodeId n) {
        return from_edges(
            std::span<const WeightedEdge>(edges.begin(), edges.size()), n);
    }

    NodeId num_vertices() const { return n_; }
    /// Number of undirected edges.
    std::size_t num_edges() const { return targets_.size() / 2; }
    std::size_t num_arcs() const { return targets_.size(); }

    std::size_t first_arc(NodeId v) const { return offsets_[v]; }
    std::size_t arcs_end(NodeId v) const { return offsets_[v + 1]; }
    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

    NodeId arc_target(std::size_t a) const { return targets_[a]; }
    NodeId arc_source(std::size_t a) const { return sources_[a]; }
    EdgeWeight arc_weight(std::size_t a) const { return weights_[a]; }
    std::size_t reverse_arc(std::size_t a) const { return reverse_[a]; }

    EdgeWeight weighted_degree(NodeId v) const { return weighted_degree_[v]; }
    EdgeWeight total_weight() const { return total_weight_; }

    bool connected() const;

    /// Weight of the cut (side, complement). `in_side` must have size n.
    EdgeWeight cut_weight(const std::vector<bool>& in_side) const;

 private:
    friend StaticGraph build_from_sorted_arcs(
        std::vector<std::tuple<NodeId, NodeId, EdgeWeight>>&& arcs, NodeId n);

    NodeId n_ = 0;
    std::vector<std::size_t> offsets_;   // n+1 entries
    std::vector<NodeId> targets_;        // per arc
    std::vector<NodeId> sources_;        // per arc
    std::vector<EdgeWeight> weights_;    // per arc
    std::vector<std::size_t> reverse_;   // per arc
    std::vector<EdgeWeight> weighted_degree_;
    EdgeWeight total_weight_ = 0;
};

/// Vertex of minimum weighted degree and that degree; ties broken by lowest
/// vertex id. Throws on the empty graph.
std::pair<NodeId, EdgeWeight> min_weighted_degree(const StaticGraph& g);

/// Connected components; returns component id per vertex and component count.
std::pair<std::vector<NodeId>, NodeId> connected_components(
    const StaticGraph& g);

}  // namespace cutcactus
