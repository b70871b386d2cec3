/******************************************************************************
 * contraction.hpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#pragma once

#include <vector>

#include "cutcactus/static_graph.hpp"
#include "cutcactus/union_find.hpp"

namespace cutcactus {

/// Surjection from the vertices of a graph onto the vertices of its
/// contraction. Records one level of the contraction hierarchy.
struct ContractionMapping {
    std::vector<NodeId> to_new;  // old vertex -> new vertex
    NodeId new_count = 0;

    NodeId operator()(NodeId old) const { return to_new[old]; }
};

/// Dense renumbering of the union-find classes. New ids are assigned in
/// increasing order of the class roots, which makes the result independent
/// of the order in which unions were performed.
ContractionMapping mapping_from_union_find(UnionFind& uf);

struct BulkContraction {
    StaticGraph graph;
    ContractionMapping mapping;
};

/// Contracts every union-find class into a single vertex. Parallel edges
/// between classes are merged by weight sum, intra-class edges disappear.
BulkContraction contract_bulk(const StaticGraph& g, UnionFind& uf);

}  // namespace cutcactus
