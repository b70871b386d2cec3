/******************************************************************************
 * static_graph.cpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#include "cutcactus/static_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutcactus {

// Shared by from_edges and contract_bulk: arcs hold one entry per direction,
// possibly with duplicates to merge, no self loops.
StaticGraph build_from_sorted_arcs(
    std::vector<std::tuple<NodeId, NodeId, EdgeWeight>>&& arcs, NodeId n) {
    std::sort(arcs.begin(), arcs.end());

    StaticGraph g;
    g.n_ = n;
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    g.targets_.reserve(arcs.size());
    g.sources_.reserve(arcs.size());
    g.weights_.reserve(arcs.size());

    for (std::size_t i = 0; i < arcs.size();) {
        auto [u, v, w] = arcs[i];
        std::size_t j = i + 1;
        while (j < arcs.size() && std::get<0>(arcs[j]) == u &&
               std::get<1>(arcs[j]) == v) {
            w = checked_weight_add(w, std::get<2>(arcs[j]));
            ++j;
        }
        g.sources_.push_back(u);
        g.targets_.push_back(v);
        g.weights_.push_back(w);
        i = j;
    }

    for (NodeId u : g.sources_) {
        g.offsets_[u + 1]++;
    }
    for (std::size_t v = 1; v <= n; ++v) {
        g.offsets_[v] += g.offsets_[v - 1];
    }

    // Targets within a vertex are sorted and unique, so the reverse arc is
    // found by binary search.
    g.reverse_.assign(g.targets_.size(), 0);
    for (std::size_t a = 0; a < g.targets_.size(); ++a) {
        NodeId u = g.sources_[a];
        NodeId v = g.targets_[a];
        auto begin = g.targets_.begin() + static_cast<std::ptrdiff_t>(
                                              g.offsets_[v]);
        auto end = g.targets_.begin() + static_cast<std::ptrdiff_t>(
                                            g.offsets_[v + 1]);
        auto it = std::lower_bound(begin, end, u);
        check_internal(it != end && *it == u, "missing reverse arc");
        std::size_t r = static_cast<std::size_t>(it - g.targets_.begin());
        check_internal(g.weights_[r] == g.weights_[a],
                       "asymmetric arc weights");
        g.reverse_[a] = r;
    }

    g.weighted_degree_.assign(n, 0);
    EdgeWeight total = 0;
    for (std::size_t a = 0; a < g.targets_.size(); ++a) {
        g.weighted_degree_[g.sources_[a]] =
            checked_weight_add(g.weighted_degree_[g.sources_[a]],
                               g.weights_[a]);
        total = checked_weight_add(total, g.weights_[a]);
    }
    g.total_weight_ = total / 2;
    return g;
}

StaticGraph StaticGraph::from_edges(std::span<const WeightedEdge> edges,
                                    NodeId n) {
    std::vector<std::tuple<NodeId, NodeId, EdgeWeight>> arcs;
    arcs.reserve(edges.size() * 2);
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.weight == 0) {
            throw std::invalid_argument("edge weight must be positive");
        }
        if (e.u == e.v) {
            continue;  // self loop
        }
        arcs.emplace_back(e.u, e.v, e.weight);
        arcs.emplace_back(e.v, e.u, e.weight);
    }
    return build_from_sorted_arcs(std::move(arcs), n);
}

bool StaticGraph::connected() const {
    if (n_ == 0) {
        return false;
    }
    auto [comp, k] = connected_components(*this);
    return k == 1;
}

EdgeWeight StaticGraph::cut_weight(const std::vector<bool>& in_side) const {
    EdgeWeight w = 0;
    for (std::size_t a = 0; a < targets_.size(); ++a) {
        if (in_side[sources_[a]] && !in_side[targets_[a]]) {
            w = checked_weight_add(w, weights_[a]);
        }
    }
    return w;
}

std::pair<NodeId, EdgeWeight> min_weighted_degree(const StaticGraph& g) {
    if (g.num_vertices() == 0) {
        throw std::invalid_argument("min_weighted_degree on empty graph");
    }
    NodeId best = 0;
    EdgeWeight best_w = g.weighted_degree(0);
    for (NodeId v = 1; v < g.num_vertices(); ++v) {
        if (g.weighted_degree(v) < best_w) {
            best = v;
            best_w = g.weighted_degree(v);
        }
    }
    return {best, best_w};
}

std::pair<std::vector<NodeId>, NodeId> connected_components(
    const StaticGraph& g) {
    std::vector<NodeId> comp(g.num_vertices(), kInvalidNode);
    NodeId k = 0;
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < g.num_vertices(); ++s) {
        if (comp[s] != kInvalidNode) {
            continue;
        }
        comp[s] = k;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (std::size_t a = g.first_arc(u); a < g.arcs_end(u); ++a) {
                NodeId v = g.arc_target(a);
                if (comp[v] == kInvalidNode) {
                    comp[v] = k;
                    stack.push_back(v);
                }
            }
        }
        ++k;
    }
    return {std::move(comp), k};
}

}  // namespace cutcactus
