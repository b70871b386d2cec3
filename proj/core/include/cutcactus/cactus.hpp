/******************************************************************************
 * cactus.hpp
 *
 * Part of cutcactus.
 *
 * The cactus representation of all minimum cuts: a connected graph in which
 * every edge lies on at most one simple cycle. Tree edges stand for cuts of
 * weight lambda, cycle edges for weight lambda/2; the weights are implied by
 * the tree/cycle classification, so odd lambda needs no fractional values.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cutcactus/types.hpp"

namespace cutcactus {

class Cactus {
 public:
    static constexpr std::int32_t kTreeEdge = -1;

    struct Edge {
        NodeId a;
        NodeId b;
        std::int32_t cycle;  // kTreeEdge or a cycle id

        bool is_tree() const { return cycle == kTreeEdge; }
    };

    Cactus() = default;
    /// Cactus over original vertices [0, num_originals).
    explicit Cactus(NodeId num_originals);

    NodeId num_nodes() const { return static_cast<NodeId>(alive_node_count_); }
    NodeId node_capacity() const { return static_cast<NodeId>(pi_.size()); }
    bool node_alive(NodeId x) const { return node_alive_[x]; }
    NodeId num_originals() const { return num_originals_; }

    EdgeWeight lambda() const { return lambda_; }
    void set_lambda(EdgeWeight l) { lambda_ = l; }

    const std::vector<NodeId>& pi(NodeId node) const { return pi_[node]; }
    /// Cactus node currently holding an original vertex.
    NodeId node_of(NodeId original) const { return node_of_[original]; }

    std::size_t num_edges() const;
    const std::vector<Edge>& all_edges() const { return edges_; }
    std::size_t edge_count_raw() const { return edges_.size(); }
    bool edge_alive(std::size_t e) const { return edge_alive_[e]; }
    const Edge& edge(std::size_t e) const { return edges_[e]; }
    const std::vector<std::uint32_t>& incident(NodeId x) const {
        return incident_[x];
    }
    std::int32_t num_cycles() const { return next_cycle_; }

    // --- construction ---------------------------------------------------
    NodeId add_node(std::vector<NodeId> originals);
    void add_tree_edge(NodeId a, NodeId b);
    std::int32_t new_cycle();
    void add_cycle_edge(NodeId a, NodeId b, std::int32_t cycle);

    /// Appends all nodes and edges of other, remapping its node ids.
    /// Returns the id offsets: node x of other becomes result[x].
    std::vector<NodeId> absorb(const Cactus& other);

    // --- reinsertion support ---------------------------------------------
    /// Moves `originals` out of the node currently holding them into a fresh
    /// leaf attached by a tree edge to that node.
    NodeId split_leaf(std::span<const NodeId> originals, NodeId attach_rep);

    /// Moves `originals` into a fresh node spliced between the nodes holding
    /// rep0 and rep1. If both reps share a node the new node is attached as a
    /// leaf; otherwise the two nodes must be joined by a direct edge, which
    /// is either turned into a three-node cycle (tree edge) or extended by
    /// the new node (cycle edge).
    NodeId splice_between(std::span<const NodeId> originals, NodeId rep0,
                          NodeId rep1);

    /// Removes originals from their current node (used before splicing a
    /// sub-cactus whose placeholder vertex must disappear).
    void erase_originals(std::span<const NodeId> originals);

    // --- normalization and checking --------------------------------------
    /// Removes degenerate empty nodes: empty leaves, empty degree-two nodes
    /// (merging their incident tree edges or splicing their cycle), and
    /// collapses two-node cycles into tree edges.
    void normalize();

    /// Renumbers nodes and edges densely; node order is preserved.
    void compact();

    /// Throws on violated invariants (partition, mirror consistency,
    /// cycle structure).
    void check_valid() const;

    // --- cut enumeration --------------------------------------------------
    /// Invokes fn on every represented cut exactly once: one bipartition per
    /// tree edge and one per unordered pair of same-cycle edges. The argument
    /// is one side as original vertex ids.
    void for_each_min_cut(
        const std::function<void(const std::vector<NodeId>&)>& fn) const;

    /// (#tree edges) + sum over cycles of len*(len-1)/2.
    std::size_t count_min_cuts() const;

    /// Side of the cut obtained by deleting the given edges (same-cycle pair
    /// or single tree edge): the component not containing `avoid`.
    std::vector<NodeId> cut_side(std::span<const std::size_t> cut_edges,
                                 NodeId avoid) const;

 private:
    void remove_edge(std::size_t e);
    void detach_incident(NodeId x, std::size_t e);
    std::size_t direct_edge(NodeId a, NodeId b) const;

    std::vector<std::vector<NodeId>> pi_;
    std::vector<NodeId> node_of_;
    std::vector<bool> node_alive_;
    std::size_t alive_node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<bool> edge_alive_;
    std::vector<std::vector<std::uint32_t>> incident_;
    std::int32_t next_cycle_ = 0;
    EdgeWeight lambda_ = 0;
    NodeId num_originals_ = 0;
};

}  // namespace cutcactus
