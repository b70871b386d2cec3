/******************************************************************************
 * min_cut_value.cpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#include "cutcactus/min_cut_value.hpp"

#include <random>
#include <stdexcept>

#include "cutcactus/contraction.hpp"
#include "cutcactus/kernel.hpp"
#include "cutcactus/union_find.hpp"

namespace cutcactus {

MinCutResult exact_min_cut(const StaticGraph& g) {
    if (g.num_vertices() < 2) {
        throw std::invalid_argument("exact_min_cut needs two vertices");
    }
    auto [comp, k] = connected_components(g);
    if (k > 1) {
        MinCutResult out;
        out.disconnected = true;
        for (NodeId v = 0; v < g.num_vertices(); ++v) {
            if (comp[v] == 0) {
                out.witness_side.push_back(v);
            }
        }
        return out;
    }

    StaticGraph cur = g;
    std::vector<std::vector<NodeId>> groups(g.num_vertices());
    for (NodeId v = 0; v < g.num_vertices(); ++v) {
        groups[v] = {v};
    }

    auto [v0, lambda_hat] = min_weighted_degree(cur);
    std::vector<NodeId> witness = groups[v0];
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);

    while (cur.num_vertices() > 1) {
        NodeId start = static_cast<NodeId>(rng() % cur.num_vertices());
        EdgeConnectivityBounds bounds =
            connectivity_lower_bounds(cur, lambda_hat, start);
        UnionFind uf(cur.num_vertices());
        std::size_t marked = 0;
        for (std::size_t a = 0; a < cur.num_arcs(); ++a) {
            if (cur.arc_source(a) < cur.arc_target(a) &&
                bounds.q[a] >= lambda_hat) {
                uf.unite(cur.arc_source(a), cur.arc_target(a));
                ++marked;
            }
        }
        // The heaviest-scanned edge into the last vertex of the adjacency
        // order is always certified at the minimum degree, which is at least
        // the current bound.
        check_internal(marked > 0, "certificate pass made no progress");

        BulkContraction bulk = contract_bulk(cur, uf);
        std::vector<std::vector<NodeId>> next(bulk.mapping.new_count);
        for (NodeId v = 0; v < cur.num_vertices(); ++v) {
            auto& dst = next[bulk.mapping(v)];
            dst.insert(dst.end(), groups[v].begin(), groups[v].end());
        }
        groups = std::move(next);
        cur = std::move(bulk.graph);

        if (cur.num_vertices() >= 2) {
            auto [v_min, deg] = min_weighted_degree(cur);
            if (deg < lambda_hat) {
                lambda_hat = deg;
                witness = groups[v_min];
            }
        }
    }
    return {lambda_hat, std::move(witness), false};
}

}  // namespace cutcactus
