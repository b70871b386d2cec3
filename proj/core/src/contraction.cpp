/******************************************************************************
 * contraction.cpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#include "cutcactus/contraction.hpp"

#include <tuple>

namespace cutcactus {

StaticGraph build_from_sorted_arcs(
    std::vector<std::tuple<NodeId, NodeId, EdgeWeight>>&& arcs, NodeId n);

ContractionMapping mapping_from_union_find(UnionFind& uf) {
    ContractionMapping m;
    NodeId n = uf.size();
    m.to_new.assign(n, kInvalidNode);
    // Roots are the smallest ids of their classes, so a single ascending scan
    // assigns dense ids in deterministic order.
    NodeId next = 0;
    for (NodeId v = 0; v < n; ++v) {
        NodeId r = uf.find(v);
        if (r == v) {
            m.to_new[v] = next++;
        } else {
            m.to_new[v] = m.to_new[r];
        }
    }
    m.new_count = next;
    return m;
}

BulkContraction contract_bulk(const StaticGraph& g, UnionFind& uf) {
    ContractionMapping m = mapping_from_union_find(uf);

    std::vector<std::tuple<NodeId, NodeId, EdgeWeight>> arcs;
    arcs.reserve(g.num_arcs());
    for (std::size_t a = 0; a < g.num_arcs(); ++a) {
        NodeId u = m(g.arc_source(a));
        NodeId v = m(g.arc_target(a));
        if (u != v) {
            arcs.emplace_back(u, v, g.arc_weight(a));
        }
    }
    StaticGraph contracted =
        build_from_sorted_arcs(std::move(arcs), m.new_count);
    return {std::move(contracted), std::move(m)};
}

}  // namespace cutcactus
