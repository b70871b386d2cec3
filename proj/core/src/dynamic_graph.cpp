/******************************************************************************
 * dynamic_graph.cpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#include "cutcactus/dynamic_graph.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace cutcactus {

DynamicGraph::DynamicGraph(const StaticGraph& g)
    : DynamicGraph(g, {}, g.num_vertices()) {}

DynamicGraph::DynamicGraph(const StaticGraph& g,
                           std::vector<std::vector<NodeId>> contained,
                           NodeId num_originals) {
    NodeId n = g.num_vertices();
    adj_.resize(n);
    wdeg_.assign(n, 0);
    alive_.assign(n, true);
    alive_count_ = n;
    num_originals_ = num_originals;
    slot_of_.assign(n, -1);

    if (contained.empty()) {
        contained_.resize(n);
        for (NodeId v = 0; v < n; ++v) {
            contained_[v] = {v};
        }
    } else {
        check_internal(contained.size() == n, "contained list size mismatch");
        contained_ = std::move(contained);
    }
    where_.assign(num_originals_, kInvalidNode);
    for (NodeId v = 0; v < n; ++v) {
        for (NodeId o : contained_[v]) {
            where_[o] = v;
        }
    }

    for (NodeId u = 0; u < n; ++u) {
        adj_[u].reserve(g.degree(u));
    }
    for (NodeId u = 0; u < n; ++u) {
        for (std::size_t a = g.first_arc(u); a < g.arcs_end(u); ++a) {
            NodeId v = g.arc_target(a);
            if (u < v) {
                adj_[u].push_back(
                    {v, g.arc_weight(a),
                     static_cast<std::uint32_t>(adj_[v].size())});
                adj_[v].push_back(
                    {u, g.arc_weight(a),
                     static_cast<std::uint32_t>(adj_[u].size() - 1)});
            }
        }
        wdeg_[u] = g.weighted_degree(u);
    }
    total_slots_ = 2 * g.num_edges();
}

std::size_t DynamicGraph::find_slot(NodeId u, NodeId v) const {
    for (std::size_t i = 0; i < adj_[u].size(); ++i) {
        if (adj_[u][i].to == v) {
            return i;
        }
    }
    return npos;
}

void DynamicGraph::remove_slot(NodeId x, std::size_t slot) {
    auto& edges = adj_[x];
    std::size_t last = edges.size() - 1;
    if (slot != last) {
        edges[slot] = edges[last];
        adj_[edges[slot].to][edges[slot].rev].rev =
            static_cast<std::uint32_t>(slot);
    }
    edges.pop_back();
    --total_slots_;
}

NodeId DynamicGraph::contract_edge(NodeId u, std::size_t slot) {
    if (!alive_[u] || slot >= adj_[u].size()) {
        throw std::invalid_argument("contract_edge: invalid edge");
    }
    NodeId v = adj_[u][slot].to;
    EdgeWeight contracted_weight = adj_[u][slot].weight;

    NodeId keep = u;
    NodeId drop = v;
    std::size_t keep_slot = slot;
    if (adj_[drop].size() > adj_[keep].size()) {
        std::swap(keep, drop);
        keep_slot = adj_[u][slot].rev;
    }

    // Remove the contracted edge from both endpoints.
    std::size_t drop_slot = adj_[keep][keep_slot].rev;
    remove_slot(keep, keep_slot);
    remove_slot(drop, drop_slot);

    for (std::size_t i = 0; i < adj_[keep].size(); ++i) {
        slot_of_[adj_[keep][i].to] = static_cast<std::int64_t>(i);
    }

    for (const Edge& e : adj_[drop]) {
        NodeId w = e.to;
        check_internal(w != keep, "parallel edge to contraction survivor");
        std::int64_t existing = slot_of_[w];
        if (existing >= 0) {
            // Parallel edge: merge weights on both mirrors, drop (w, drop).
            std::size_t k = static_cast<std::size_t>(existing);
            EdgeWeight merged =
                checked_weight_add(adj_[keep][k].weight, e.weight);
            adj_[keep][k].weight = merged;
            adj_[w][adj_[keep][k].rev].weight = merged;
            remove_slot(w, e.rev);
        } else {
            adj_[keep].push_back(
                {w, e.weight, e.rev});
            slot_of_[w] = static_cast<std::int64_t>(adj_[keep].size() - 1);
            adj_[w][e.rev].to = keep;
            adj_[w][e.rev].rev =
                static_cast<std::uint32_t>(adj_[keep].size() - 1);
            ++total_slots_;  // the slot moves rather than disappearing
        }
    }
    total_slots_ -= adj_[drop].size();

    for (const Edge& e : adj_[keep]) {
        slot_of_[e.to] = -1;
    }

    wdeg_[keep] = wdeg_[keep] + wdeg_[drop] - 2 * contracted_weight;
    adj_[drop].clear();
    adj_[drop].shrink_to_fit();

    for (NodeId o : contained_[drop]) {
        where_[o] = keep;
    }
    contained_[keep].insert(contained_[keep].end(), contained_[drop].begin(),
                            contained_[drop].end());
    contained_[drop].clear();

    alive_[drop] = false;
    --alive_count_;
    return keep;
}

std::vector<NodeId> DynamicGraph::alive_vertices() const {
    std::vector<NodeId> out;
    out.reserve(alive_count_);
    for (NodeId v = 0; v < capacity(); ++v) {
        if (alive_[v]) {
            out.push_back(v);
        }
    }
    return out;
}

void DynamicGraph::check_consistency() const {
    std::size_t contained_total = 0;
    std::size_t slots = 0;
    for (NodeId v = 0; v < capacity(); ++v) {
        if (!alive_[v]) {
            check_internal(adj_[v].empty() && contained_[v].empty(),
                           "dead vertex with state");
            continue;
        }
        contained_total += contained_[v].size();
        slots += adj_[v].size();
        EdgeWeight wd = 0;
        for (std::size_t i = 0; i < adj_[v].size(); ++i) {
            const Edge& e = adj_[v][i];
            check_internal(alive_[e.to] && e.to != v, "bad edge target");
            const Edge& mirror = adj_[e.to][e.rev];
            check_internal(mirror.to == v && mirror.rev == i &&
                               mirror.weight == e.weight,
                           "mirror slot mismatch");
            wd += e.weight;
        }
        check_internal(wd == wdeg_[v], "stale weighted degree");
    }
    check_internal(contained_total == num_originals_,
                   "encompassed lists do not partition the originals");
    check_internal(slots == total_slots_, "stale slot count");
}

}  // namespace cutcactus
