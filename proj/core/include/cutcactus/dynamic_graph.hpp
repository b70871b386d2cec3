/******************************************************************************
 * dynamic_graph.hpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#pragma once

#include <cstddef>
#include <vector>

#include "cutcactus/static_graph.hpp"

namespace cutcactus {

/// Mutable adjacency-list graph for single-edge contractions. Each vertex
/// keeps the set of original vertices it encompasses; parallel edges are
/// always merged, so the slot count of a vertex equals its number of distinct
/// neighbors. Vertex ids are stable: contracted vertices become dead.
class DynamicGraph {
 public:
    struct Edge {
        NodeId to;
        EdgeWeight weight;
        std::uint32_t rev;  // slot index of the mirror edge in adj(to)
    };

    DynamicGraph() = default;

    /// Every vertex of g encompasses itself.
    explicit DynamicGraph(const StaticGraph& g);

    /// Vertex v of g encompasses contained[v] (original vertex ids).
    DynamicGraph(const StaticGraph& g,
                 std::vector<std::vector<NodeId>> contained,
                 NodeId num_originals);

    NodeId capacity() const { return static_cast<NodeId>(adj_.size()); }
    NodeId num_alive() const { return alive_count_; }
    bool alive(NodeId v) const { return alive_[v]; }
    NodeId num_originals() const { return num_originals_; }

    std::size_t degree(NodeId v) const { return adj_[v].size(); }
    EdgeWeight weighted_degree(NodeId v) const { return wdeg_[v]; }
    const std::vector<Edge>& edges_of(NodeId v) const { return adj_[v]; }
    std::size_t total_slots() const { return total_slots_; }

    const std::vector<NodeId>& contained(NodeId v) const {
        return contained_[v];
    }
    /// Current vertex encompassing an original vertex.
    NodeId vertex_of(NodeId original) const { return where_[original]; }

    /// Contracts the edge at the given slot of u. Merges the endpoint with
    /// fewer slots into the other one, splices neighbor lists, merges
    /// parallel edges, drops the resulting self loop and concatenates the
    /// encompassed lists. Returns the surviving vertex. Cost is proportional
    /// to the degree sum of the endpoints.
    NodeId contract_edge(NodeId u, std::size_t slot);

    /// Slot of the edge (u, v), or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t find_slot(NodeId u, NodeId v) const;

    std::vector<NodeId> alive_vertices() const;

    /// Checks reverse-slot consistency and the encompassed partition.
    void check_consistency() const;

 private:
    void remove_slot(NodeId x, std::size_t slot);

    std::vector<std::vector<Edge>> adj_;
    std::vector<std::vector<NodeId>> contained_;
    std::vector<NodeId> where_;
    std::vector<EdgeWeight> wdeg_;
    std::vector<bool> alive_;
    NodeId alive_count_ = 0;
    NodeId num_originals_ = 0;
    std::size_t total_slots_ = 0;
    // Scratch for parallel-edge detection, keyed by vertex id.
    mutable std::vector<std::int64_t> slot_of_;
};

}  // namespace cutcactus
