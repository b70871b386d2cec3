/******************************************************************************
 * instance_gen.cpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#include "cutcactus/instance_gen.hpp"

#include <algorithm>
#include <set>

#include "cutcactus/contraction.hpp"
#include "cutcactus/union_find.hpp"

namespace cutcactus {

std::vector<StaticGraph> generate_instances(const StaticGraph& g, int depth,
                                            const RunConfig& cfg) {
    std::vector<StaticGraph> out;
    StaticGraph cur = g;
    for (int step = 0; step < depth; ++step) {
        if (cur.num_vertices() <= 1) {
            break;
        }
        PipelineResult res = find_all_mincuts(cur, cfg);
        const Cactus& cactus = res.cactus;
        NodeId largest = kInvalidNode;
        std::size_t largest_size = 0;
        for (NodeId x = 0; x < cactus.node_capacity(); ++x) {
            if (cactus.node_alive(x) &&
                cactus.pi(x).size() > largest_size) {
                largest = x;
                largest_size = cactus.pi(x).size();
            }
        }
        check_internal(largest != kInvalidNode, "cactus without vertices");
        std::vector<bool> in_block(cur.num_vertices(), false);
        for (NodeId v : cactus.pi(largest)) {
            in_block[v] = true;
        }
        UnionFind uf(cur.num_vertices());
        for (std::size_t a = 0; a < cur.num_arcs(); ++a) {
            NodeId u = cur.arc_source(a);
            NodeId v = cur.arc_target(a);
            if (u < v && !(in_block[u] && in_block[v])) {
                uf.unite(u, v);
            }
        }
        cur = contract_bulk(cur, uf).graph;
        if (cur.num_vertices() <= 1) {
            break;
        }
        out.push_back(cur);
    }
    return out;
}

StaticGraph cycle_graph(NodeId n, EdgeWeight w) {
    std::vector<WeightedEdge> edges;
    for (NodeId v = 0; v < n; ++v) {
        edges.push_back({v, static_cast<NodeId>((v + 1) % n), w});
    }
    if (n == 2) {
        edges.pop_back();  // avoid the duplicate (1, 0)
    }
    return StaticGraph::from_edges(edges, n);
}

StaticGraph path_graph(NodeId n, EdgeWeight w) {
    std::vector<WeightedEdge> edges;
    for (NodeId v = 0; v + 1 < n; ++v) {
        edges.push_back({v, static_cast<NodeId>(v + 1), w});
    }
    return StaticGraph::from_edges(edges, n);
}

StaticGraph star_graph(NodeId leaves, EdgeWeight w) {
    std::vector<WeightedEdge> edges;
    for (NodeId v = 1; v <= leaves; ++v) {
        edges.push_back({0, v, w});
    }
    return StaticGraph::from_edges(edges, leaves + 1);
}

StaticGraph complete_graph(NodeId n, EdgeWeight w) {
    std::vector<WeightedEdge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            edges.push_back({u, v, w});
        }
    }
    return StaticGraph::from_edges(edges, n);
}

StaticGraph random_tree(NodeId n, std::mt19937_64& rng, EdgeWeight w_min,
                        EdgeWeight w_max) {
    std::vector<WeightedEdge> edges;
    for (NodeId v = 1; v < n; ++v) {
        NodeId parent = static_cast<NodeId>(rng() % v);
        EdgeWeight w = w_min + rng() % (w_max - w_min + 1);
        edges.push_back({parent, v, w});
    }
    return StaticGraph::from_edges(edges, n);
}

StaticGraph random_connected_graph(NodeId n, std::size_t extra_edges,
                                   EdgeWeight w_min, EdgeWeight w_max,
                                   std::mt19937_64& rng) {
    std::vector<WeightedEdge> edges;
    std::set<std::pair<NodeId, NodeId>> used;
    for (NodeId v = 1; v < n; ++v) {
        NodeId parent = static_cast<NodeId>(rng() % v);
        EdgeWeight w = w_min + rng() % (w_max - w_min + 1);
        edges.push_back({parent, v, w});
        used.insert({parent, v});
    }
    std::size_t all_pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t budget = std::min(extra_edges, all_pairs - (n - 1));
    std::size_t attempts = 0;
    while (budget > 0 && attempts < 20 * extra_edges + 100) {
        ++attempts;
        NodeId u = static_cast<NodeId>(rng() % n);
        NodeId v = static_cast<NodeId>(rng() % n);
        if (u == v) {
            continue;
        }
        if (u > v) {
            std::swap(u, v);
        }
        if (!used.insert({u, v}).second) {
            continue;
        }
        EdgeWeight w = w_min + rng() % (w_max - w_min + 1);
        edges.push_back({u, v, w});
        --budget;
    }
    return StaticGraph::from_edges(edges, n);
}

StaticGraph cluster_bridge_graph(NodeId clusters, NodeId cluster_size,
                                 NodeId intra_degree, std::mt19937_64& rng) {
    std::vector<WeightedEdge> edges;
    NodeId n = clusters * cluster_size;
    for (NodeId c = 0; c < clusters; ++c) {
        NodeId base = c * cluster_size;
        // Ring plus random chords keeps each cluster well connected.
        for (NodeId i = 0; i < cluster_size; ++i) {
            edges.push_back({base + i,
                             base + (i + 1) % cluster_size, 1});
        }
        std::size_t chords =
            static_cast<std::size_t>(cluster_size) * intra_degree / 2;
        for (std::size_t j = 0; j < chords; ++j) {
            NodeId a = base + static_cast<NodeId>(rng() % cluster_size);
            NodeId b = base + static_cast<NodeId>(rng() % cluster_size);
            if (a != b) {
                edges.push_back({a, b, 1});
            }
        }
    }
    for (NodeId c = 1; c < clusters; ++c) {
        NodeId other = static_cast<NodeId>(rng() % c);
        NodeId a = c * cluster_size + static_cast<NodeId>(
                                          rng() % cluster_size);
        NodeId b = other * cluster_size + static_cast<NodeId>(
                                              rng() % cluster_size);
        edges.push_back({a, b, 1});
    }
    return StaticGraph::from_edges(edges, n);
}

}  // namespace cutcactus
