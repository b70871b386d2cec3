/******************************************************************************
 * recursive_cactus.cpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#include "cutcactus/recursive_cactus.hpp"

#include <algorithm>
#include <stdexcept>

#include "cutcactus/flow.hpp"
#include "cutcactus/kernel.hpp"
#include "cutcactus/union_find.hpp"

namespace cutcactus {

namespace {

NodeId max_key_vertex(const DynamicGraph& g, bool weighted) {
    NodeId best = kInvalidNode;
    EdgeWeight best_key = 0;
    for (NodeId v = 0; v < g.capacity(); ++v) {
        if (!g.alive(v)) {
            continue;
        }
        EdgeWeight key = weighted ? g.weighted_degree(v) : g.degree(v);
        if (best == kInvalidNode || key > best_key) {
            best = v;
            best_key = key;
        }
    }
    return best;
}

EdgeRef heavy_edge(const DynamicGraph& g, bool weighted) {
    NodeId v = max_key_vertex(g, weighted);
    const auto& edges = g.edges_of(v);
    std::size_t best_slot = 0;
    EdgeWeight best_key = 0;
    NodeId best_target = kInvalidNode;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        NodeId t = edges[i].to;
        EdgeWeight key = weighted ? g.weighted_degree(t) : g.degree(t);
        if (best_target == kInvalidNode || key > best_key ||
            (key == best_key && t < best_target)) {
            best_slot = i;
            best_key = key;
            best_target = t;
        }
    }
    return {v, best_slot};
}

NodeId bfs_last(const DynamicGraph& g, NodeId start,
                std::vector<NodeId>* parent) {
    std::vector<bool> seen(g.capacity(), false);
    if (parent) {
        parent->assign(g.capacity(), kInvalidNode);
    }
    std::vector<NodeId> queue = {start};
    seen[start] = true;
    NodeId last = start;
    std::vector<NodeId> targets;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        NodeId u = queue[qi];
        last = u;
        targets.clear();
        for (const auto& e : g.edges_of(u)) {
            if (!seen[e.to]) {
                targets.push_back(e.to);
            }
        }
        std::sort(targets.begin(), targets.end());
        for (NodeId t : targets) {
            if (!seen[t]) {
                seen[t] = true;
                if (parent) {
                    (*parent)[t] = u;
                }
                queue.push_back(t);
            }
        }
    }
    return last;
}

NodeId random_alive(const DynamicGraph& g, std::mt19937_64& rng) {
    NodeId idx = static_cast<NodeId>(rng() % g.num_alive());
    for (NodeId v = 0; v < g.capacity(); ++v) {
        if (g.alive(v)) {
            if (idx == 0) {
                return v;
            }
            --idx;
        }
    }
    check_internal(false, "no alive vertex");
    return kInvalidNode;
}

EdgeRef central_edge(const DynamicGraph& g, std::mt19937_64& rng) {
    NodeId w = random_alive(g, rng);
    NodeId far1 = bfs_last(g, w, nullptr);
    std::vector<NodeId> parent;
    NodeId far2 = bfs_last(g, far1, &parent);
    // Path from far2 up to far1 along BFS parents.
    std::vector<NodeId> path = {far2};
    while (path.back() != far1) {
        path.push_back(parent[path.back()]);
    }
    std::size_t edge_idx = (path.size() - 1) / 2;
    NodeId a = path[edge_idx];
    NodeId b = path[edge_idx + 1];
    std::size_t slot = g.find_slot(a, b);
    check_internal(slot != DynamicGraph::npos, "central path edge missing");
    return {a, slot};
}

EdgeRef random_edge(const DynamicGraph& g, std::mt19937_64& rng) {
    std::size_t r = static_cast<std::size_t>(rng() % g.total_slots());
    for (NodeId v = 0; v < g.capacity(); ++v) {
        if (!g.alive(v)) {
            continue;
        }
        if (r < g.degree(v)) {
            return {v, r};
        }
        r -= g.degree(v);
    }
    check_internal(false, "slot count out of sync");
    return {0, 0};
}

}  // namespace

EdgeRef select_edge(const DynamicGraph& g, SelectionStrategy& strategy) {
    if (g.total_slots() == 0) {
        throw std::invalid_argument("select_edge on edgeless graph");
    }
    switch (strategy.kind) {
        case EdgeSelection::kHeavy:
            return heavy_edge(g, false);
        case EdgeSelection::kWeightedHeavy:
            return heavy_edge(g, true);
        case EdgeSelection::kCentral:
            return central_edge(g, strategy.rng);
        case EdgeSelection::kRandom:
        default:
            return random_edge(g, strategy.rng);
    }
}

std::size_t contract_degree_one_dynamic(DynamicGraph& g, EdgeWeight lambda,
                                        std::vector<ReinsertRecord>& records) {
    std::vector<NodeId> queue;
    for (NodeId v = 0; v < g.capacity(); ++v) {
        if (g.alive(v) && g.degree(v) == 1) {
            queue.push_back(v);
        }
    }
    std::size_t contracted = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        NodeId v = queue[qi];
        if (!g.alive(v) || g.degree(v) != 1 || g.num_alive() == 1) {
            continue;
        }
        const auto& e = g.edges_of(v)[0];
        NodeId w = e.to;
        check_internal(e.weight >= lambda, "trivial cut below minimum");
        if (e.weight == lambda) {
            records.push_back({ReinsertRecord::Kind::kLeaf, g.contained(v),
                               g.contained(w).front(), kInvalidNode});
        }
        NodeId survivor = g.contract_edge(v, 0);
        ++contracted;
        if (g.degree(survivor) == 1) {
            queue.push_back(survivor);
        }
    }
    return contracted;
}

std::size_t degree_two_contract(DynamicGraph& g, EdgeWeight lambda,
                                std::vector<ReinsertRecord>& records) {
    std::vector<NodeId> queue;
    for (NodeId v = 0; v < g.capacity(); ++v) {
        if (g.alive(v) && g.degree(v) == 2) {
            queue.push_back(v);
        }
    }
    std::size_t contracted = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        NodeId v = queue[qi];
        if (!g.alive(v) || g.degree(v) != 2) {
            continue;
        }
        const auto& es = g.edges_of(v);
        // e0 is the heavier edge; ties go to the lower-id neighbor.
        std::size_t slot0 = 0;
        if (es[1].weight > es[0].weight ||
            (es[1].weight == es[0].weight && es[1].to < es[0].to)) {
            slot0 = 1;
        }
        NodeId u0 = es[slot0].to;
        NodeId u1 = es[1 - slot0].to;
        EdgeWeight w0 = es[slot0].weight;
        EdgeWeight w1 = es[1 - slot0].weight;
        EdgeWeight cv = w0 + w1;
        check_internal(cv >= lambda, "trivial cut below minimum");

        if (w0 == w1) {
            if (cv != lambda) {
                continue;  // equal edges, non-minimal trivial cut
            }
            records.push_back({ReinsertRecord::Kind::kCycleOrLeaf,
                               g.contained(v), g.contained(u0).front(),
                               g.contained(u1).front()});
        } else if (cv == lambda) {
            // Only the trivial cut of v uses the heavier edge; all other
            // minimum cuts through v keep it with u0.
            records.push_back({ReinsertRecord::Kind::kLeaf, g.contained(v),
                               g.contained(u0).front(), kInvalidNode});
        }
        NodeId survivor = g.contract_edge(v, slot0);
        ++contracted;
        if (g.alive(survivor) && g.degree(survivor) == 2) {
            queue.push_back(survivor);
        }
        if (g.alive(u1) && g.degree(u1) == 2) {
            queue.push_back(u1);
        }
    }
    return contracted;
}

void apply_reinsert(Cactus& cactus, const ReinsertRecord& record) {
    if (record.kind == ReinsertRecord::Kind::kLeaf) {
        cactus.split_leaf(record.originals, record.attach_rep);
    } else {
        cactus.splice_between(record.originals, record.attach_rep,
                              record.other_rep);
    }
}

namespace {

struct RecursionContext {
    EdgeWeight lambda;
    SelectionStrategy& strategy;
    const RecursionHooks& hooks;
    std::vector<ReinsertRecord> stack;
    std::uint64_t steps = 0;
};

Cactus single_node_cactus(const DynamicGraph& g) {
    Cactus c(g.num_originals());
    for (NodeId v = 0; v < g.capacity(); ++v) {
        if (g.alive(v)) {
            c.add_node(g.contained(v));
            return c;
        }
    }
    check_internal(false, "empty graph has no cactus");
    return c;
}

Cactus two_node_cactus(DynamicGraph& g, EdgeWeight lambda) {
    NodeId a = kInvalidNode;
    NodeId b = kInvalidNode;
    for (NodeId v = 0; v < g.capacity(); ++v) {
        if (g.alive(v)) {
            (a == kInvalidNode ? a : b) = v;
        }
    }
    check_internal(g.degree(a) == 1, "two-vertex graph not a single edge");
    EdgeWeight w = g.edges_of(a)[0].weight;
    check_internal(w >= lambda, "cut below minimum");
    if (w > lambda) {
        g.contract_edge(a, 0);
        return single_node_cactus(g);
    }
    Cactus c(g.num_originals());
    NodeId na = c.add_node(g.contained(a));
    NodeId nb = c.add_node(g.contained(b));
    c.add_tree_edge(na, nb);
    return c;
}

/// Connectivity-based and local contraction on a snapshot of the current
/// graph, strict in the exact minimum cut value.
void in_recursion_kernel(DynamicGraph& g, EdgeWeight lambda) {
    std::vector<NodeId> index(g.capacity(), kInvalidNode);
    std::vector<NodeId> vertex;
    for (NodeId v = 0; v < g.capacity(); ++v) {
        if (g.alive(v)) {
            index[v] = static_cast<NodeId>(vertex.size());
            vertex.push_back(v);
        }
    }
    std::vector<WeightedEdge> edges;
    for (NodeId v : vertex) {
        for (const auto& e : g.edges_of(v)) {
            if (v < e.to) {
                edges.push_back({index[v], index[e.to], e.weight});
            }
        }
    }
    NodeId n = static_cast<NodeId>(vertex.size());
    StaticGraph snap = StaticGraph::from_edges(edges, n);

    UnionFind uf(n);
    auto bounds = connectivity_lower_bounds(snap, lambda, 0);
    std::size_t marked = contract_high_connectivity(snap, bounds, lambda, uf);
    marked += local_contract(snap, lambda, uf, kAllLocalRules, 1);
    if (marked == 0) {
        return;
    }
    // Contract every snapshot edge that ended up inside a class; those edges
    // span each class, so the classes merge completely.
    for (std::size_t a = 0; a < snap.num_arcs(); ++a) {
        NodeId su = snap.arc_source(a);
        NodeId sv = snap.arc_target(a);
        if (su > sv || uf.find(su) != uf.find(sv)) {
            continue;
        }
        NodeId cu = g.vertex_of(g.contained(vertex[su]).front());
        NodeId cv = g.vertex_of(g.contained(vertex[sv]).front());
        if (cu == cv) {
            continue;
        }
        std::size_t slot = g.find_slot(cu, cv);
        check_internal(slot != DynamicGraph::npos,
                       "marked pair lost adjacency");
        g.contract_edge(cu, slot);
    }
}

// ---------------------------------------------------------------------------
// Chain classification
// ---------------------------------------------------------------------------

struct ComponentLinks {
    // Per component: aggregated neighbors (by component id, sorted) and
    // prefix sums of the link weights; ext[i] is the total weight leaving i.
    std::vector<std::vector<std::pair<NodeId, EdgeWeight>>> adj;
    std::vector<std::vector<EdgeWeight>> prefix;
    std::vector<EdgeWeight> ext;

    /// Total edge weight between component c and components in [a, b].
    EdgeWeight link(NodeId c, NodeId a, NodeId b) const {
        const auto& list = adj[c];
        auto lo = std::lower_bound(
            list.begin(), list.end(), std::make_pair(a, EdgeWeight{0}));
        auto hi = std::upper_bound(
            list.begin(), list.end(),
            std::make_pair(b, kInfiniteWeight));
        std::size_t il = static_cast<std::size_t>(lo - list.begin());
        std::size_t ih = static_cast<std::size_t>(hi - list.begin());
        return prefix[c][ih] - prefix[c][il];
    }
};

ComponentLinks component_links(const DynamicGraph& g,
                               const std::vector<NodeId>& comp_of,
                               NodeId k) {
    std::vector<std::vector<std::pair<NodeId, EdgeWeight>>> raw(k);
    for (NodeId v = 0; v < g.capacity(); ++v) {
        if (!g.alive(v)) {
            continue;
        }
        for (const auto& e : g.edges_of(v)) {
            if (v < e.to && comp_of[v] != comp_of[e.to]) {
                raw[comp_of[v]].emplace_back(comp_of[e.to], e.weight);
                raw[comp_of[e.to]].emplace_back(comp_of[v], e.weight);
            }
        }
    }
    ComponentLinks links;
    links.adj.resize(k);
    links.prefix.resize(k);
    links.ext.assign(k, 0);
    for (NodeId c = 0; c < k; ++c) {
        auto& list = raw[c];
        std::sort(list.begin(), list.end());
        for (std::size_t i = 0; i < list.size();) {
            std::size_t j = i;
            EdgeWeight w = 0;
            while (j < list.size() && list[j].first == list[i].first) {
                w += list[j].second;
                ++j;
            }
            links.adj[c].emplace_back(list[i].first, w);
            links.ext[c] += w;
            i = j;
        }
        links.prefix[c].assign(links.adj[c].size() + 1, 0);
        for (std::size_t i = 0; i < links.adj[c].size(); ++i) {
            links.prefix[c][i + 1] =
                links.prefix[c][i] + links.adj[c][i].second;
        }
    }
    return links;
}

struct BlockStructure {
    std::vector<std::pair<NodeId, NodeId>> cycle_blocks;  // [p, q] inclusive
    std::vector<NodeId> tree_seams;  // seam i joins components i and i+1
};

/// Greedy left-to-right block detection. A run [p..q] forms a cycle exactly
/// when every interior segment of consecutive components cuts exactly
/// lambda; the chain cuts themselves are the prefix segments and need no
/// check. Poles are shared between adjacent blocks.
BlockStructure classify_blocks(const ComponentLinks& links, NodeId k,
                               EdgeWeight lambda) {
    BlockStructure out;
    NodeId p = 0;
    while (p + 1 < k) {
        NodeId best_end = kInvalidNode;
        // seg[idx] = cut weight of components [p+1+idx .. e-1], maintained
        // as the candidate end e grows.
        std::vector<EdgeWeight> seg;
        for (NodeId e = p + 2; e <= k - 1; ++e) {
            NodeId last = e - 1;
            for (std::size_t idx = 0; idx < seg.size(); ++idx) {
                NodeId x = p + 1 + static_cast<NodeId>(idx);
                seg[idx] +=
                    links.ext[last] - 2 * links.link(last, x, last - 1);
            }
            seg.push_back(links.ext[last]);
            bool all_min = true;
            for (EdgeWeight w : seg) {
                if (w != lambda) {
                    all_min = false;
                    break;
                }
            }
            if (!all_min) {
                break;
            }
            best_end = e;
        }
        if (best_end != kInvalidNode) {
            out.cycle_blocks.emplace_back(p, best_end);
            p = best_end;
        } else {
            out.tree_seams.push_back(p);
            p = p + 1;
        }
    }
    return out;
}

std::pair<DynamicGraph, NodeId> build_component_subgraph(
    const DynamicGraph& g, const std::vector<NodeId>& members,
    const std::vector<NodeId>& comp_of, NodeId my_comp) {
    NodeId size = static_cast<NodeId>(members.size());
    std::vector<NodeId> local(g.capacity(), kInvalidNode);
    for (NodeId i = 0; i < size; ++i) {
        local[members[i]] = i;
    }
    std::vector<WeightedEdge> edges;
    std::vector<std::vector<NodeId>> contained(size + 1);
    for (NodeId i = 0; i < size; ++i) {
        NodeId u = members[i];
        contained[i] = g.contained(u);
        for (const auto& e : g.edges_of(u)) {
            if (comp_of[e.to] == my_comp) {
                if (u < e.to) {
                    edges.push_back({i, local[e.to], e.weight});
                }
            } else {
                edges.push_back({i, size, e.weight});
            }
        }
    }
    // Placeholder vertex standing for the rest of the graph, represented by
    // one original from outside this component.
    NodeId outside_rep = kInvalidNode;
    for (NodeId v = 0; v < g.capacity() && outside_rep == kInvalidNode; ++v) {
        if (g.alive(v) && comp_of[v] != my_comp) {
            outside_rep = g.contained(v).front();
        }
    }
    check_internal(outside_rep != kInvalidNode, "component covers everything");
    contained[size] = {outside_rep};
    StaticGraph base = StaticGraph::from_edges(edges, size + 1);
    return {DynamicGraph(base, std::move(contained), g.num_originals()),
            outside_rep};
}

Cactus build_cactus(DynamicGraph& g, RecursionContext& ctx, unsigned depth);

Cactus decompose_and_merge(DynamicGraph& g, RecursionContext& ctx,
                           unsigned depth,
                           const std::vector<std::vector<NodeId>>& chain) {
    NodeId k = static_cast<NodeId>(chain.size());
    std::vector<NodeId> comp_of(g.capacity(), kInvalidNode);
    for (NodeId c = 0; c < k; ++c) {
        for (NodeId v : chain[c]) {
            comp_of[v] = c;
        }
    }
    ComponentLinks links = component_links(g, comp_of, k);
    BlockStructure blocks = classify_blocks(links, k, ctx.lambda);

    ComponentCactus cc;
    cc.skeleton = Cactus(g.num_originals());
    cc.comp_node.resize(k);
    for (NodeId c = 0; c < k; ++c) {
        std::vector<NodeId> originals;
        for (NodeId v : chain[c]) {
            const auto& list = g.contained(v);
            originals.insert(originals.end(), list.begin(), list.end());
        }
        cc.comp_node[c] = cc.skeleton.add_node(std::move(originals));
    }
    for (NodeId seam : blocks.tree_seams) {
        cc.skeleton.add_tree_edge(cc.comp_node[seam], cc.comp_node[seam + 1]);
    }
    for (auto [p, q] : blocks.cycle_blocks) {
        std::int32_t cycle = cc.skeleton.new_cycle();
        for (NodeId c = p; c < q; ++c) {
            cc.skeleton.add_cycle_edge(cc.comp_node[c], cc.comp_node[c + 1],
                                       cycle);
        }
        cc.skeleton.add_cycle_edge(cc.comp_node[q], cc.comp_node[p], cycle);
    }

    std::vector<std::optional<Cactus>> subcacti(k);
    std::vector<NodeId> placeholder_reps(k, kInvalidNode);
    std::vector<std::optional<DynamicGraph>> subgraphs(k);
    for (NodeId c = 0; c < k; ++c) {
        if (chain[c].size() >= 2) {
            auto [sub, rep] =
                build_component_subgraph(g, chain[c], comp_of, c);
            subgraphs[c] = std::move(sub);
            placeholder_reps[c] = rep;
        }
    }
    for (NodeId c = 0; c < k; ++c) {
        if (subgraphs[c]) {
            subcacti[c] = build_cactus(*subgraphs[c], ctx, depth + 1);
        }
    }
    return merge_cacti(cc, std::move(subcacti), placeholder_reps,
                       g.num_originals());
}

Cactus build_cactus(DynamicGraph& g, RecursionContext& ctx, unsigned depth) {
    std::size_t stack_mark = ctx.stack.size();
    Cactus result;
    while (true) {
        ++ctx.steps;
        if (ctx.hooks.kernel_inside && ctx.hooks.kernel_cadence > 0 &&
            ctx.steps % ctx.hooks.kernel_cadence == 0 && g.num_alive() > 2) {
            in_recursion_kernel(g, ctx.lambda);
        }
        if (ctx.hooks.degree_one || ctx.hooks.degree_two) {
            std::size_t reduced = 1;
            while (reduced > 0 && g.num_alive() > 1) {
                reduced = 0;
                if (ctx.hooks.degree_one) {
                    reduced += contract_degree_one_dynamic(g, ctx.lambda,
                                                           ctx.stack);
                }
                if (ctx.hooks.degree_two) {
                    reduced += degree_two_contract(g, ctx.lambda, ctx.stack);
                }
            }
        }

        if (g.num_alive() == 1) {
            result = single_node_cactus(g);
            break;
        }
        if (g.num_alive() == 2) {
            result = two_node_cactus(g, ctx.lambda);
            break;
        }

        EdgeRef e = select_edge(g, ctx.strategy);
        NodeId s = e.vertex;
        NodeId t = g.edges_of(s)[e.slot].to;

        std::vector<NodeId> index;
        std::vector<NodeId> vertex;
        FlowNetwork net = build_network(g, index, vertex);
        EdgeWeight value = dinic_max_flow(net, index[s], index[t]);
        check_internal(value >= ctx.lambda, "s-t flow below minimum cut");
        if (value > ctx.lambda) {
            g.contract_edge(s, e.slot);
            continue;
        }

        FlowResult flow{value, std::move(net), index[s], index[t]};
        std::vector<std::vector<NodeId>> chain;
        for (auto& comp : residual_chain(flow)) {
            auto& back = chain.emplace_back();
            back.reserve(comp.size());
            for (NodeId c : comp) {
                back.push_back(vertex[c]);
            }
        }
        check_internal(chain.size() >= 2, "flow endpoints share a component");

        if (chain.size() == 2 &&
            (chain[0].size() == 1 || chain[1].size() == 1)) {
            // A single minimum s-t cut that peels one vertex off: record it
            // as a leaf and keep contracting.
            NodeId lone =
                (chain[0].size() == 1) ? chain[0][0] : chain[1][0];
            NodeId other = (lone == s) ? t : s;
            check_internal(lone == s || lone == t,
                           "singleton component misses flow endpoint");
            ctx.stack.push_back({ReinsertRecord::Kind::kLeaf,
                                 g.contained(lone),
                                 g.contained(other).front(), kInvalidNode});
            g.contract_edge(s, e.slot);
            continue;
        }

        result = decompose_and_merge(g, ctx, depth, chain);
        break;
    }

    // Replay this level's reduction records, newest first. Degenerate empty
    // nodes are cleaned up first so that direct connections are direct.
    if (ctx.stack.size() > stack_mark) {
        result.normalize();
    }
    while (ctx.stack.size() > stack_mark) {
        apply_reinsert(result, ctx.stack.back());
        ctx.stack.pop_back();
    }
    return result;
}

}  // namespace

Cactus merge_cacti(const ComponentCactus& component_cactus,
                   std::vector<std::optional<Cactus>> sub_cacti,
                   const std::vector<NodeId>& placeholder_reps,
                   NodeId num_originals) {
    const Cactus& skeleton = component_cactus.skeleton;
    NodeId k = static_cast<NodeId>(component_cactus.comp_node.size());
    check_internal(sub_cacti.size() == k && placeholder_reps.size() == k,
                   "merge input size mismatch");

    Cactus merged(num_originals);
    std::vector<NodeId> attach(k, kInvalidNode);
    for (NodeId c = 0; c < k; ++c) {
        NodeId skel_node = component_cactus.comp_node[c];
        if (sub_cacti[c]) {
            Cactus sub = std::move(*sub_cacti[c]);
            NodeId z_node = kInvalidNode;
            if (placeholder_reps[c] != kInvalidNode) {
                z_node = sub.node_of(placeholder_reps[c]);
                check_internal(z_node != kInvalidNode,
                               "placeholder lost in sub-cactus");
                NodeId one[1] = {placeholder_reps[c]};
                sub.erase_originals(one);
            }
            std::vector<NodeId> remap = merged.absorb(sub);
            if (z_node != kInvalidNode) {
                attach[c] = remap[z_node];
            } else {
                for (NodeId x = 0; x < sub.node_capacity(); ++x) {
                    if (sub.node_alive(x)) {
                        attach[c] = remap[x];
                        break;
                    }
                }
            }
        } else {
            attach[c] = merged.add_node(skeleton.pi(skel_node));
        }
    }

    // Re-create the skeleton's seams and cycles between the attach points.
    std::vector<NodeId> node_comp(skeleton.node_capacity(), kInvalidNode);
    for (NodeId c = 0; c < k; ++c) {
        node_comp[component_cactus.comp_node[c]] = c;
    }
    std::vector<std::int32_t> cycle_remap(
        static_cast<std::size_t>(skeleton.num_cycles()), -1);
    for (std::size_t e = 0; e < skeleton.edge_count_raw(); ++e) {
        if (!skeleton.edge_alive(e)) {
            continue;
        }
        const Cactus::Edge& ed = skeleton.edge(e);
        NodeId a = attach[node_comp[ed.a]];
        NodeId b = attach[node_comp[ed.b]];
        if (ed.is_tree()) {
            merged.add_tree_edge(a, b);
        } else {
            auto idx = static_cast<std::size_t>(ed.cycle);
            if (cycle_remap[idx] < 0) {
                cycle_remap[idx] = merged.new_cycle();
            }
            merged.add_cycle_edge(a, b, cycle_remap[idx]);
        }
    }
    return merged;
}

Cactus recursive_cactus(DynamicGraph g, EdgeWeight lambda,
                        SelectionStrategy& strategy,
                        const RecursionHooks& hooks) {
    if (g.num_alive() == 0) {
        throw std::invalid_argument("recursive_cactus on empty graph");
    }
    RecursionContext ctx{lambda, strategy, hooks, {}, 0};
    Cactus result = build_cactus(g, ctx, 0);
    check_internal(ctx.stack.empty(), "unconsumed reinsertion records");
    result.normalize();
    return result;
}

void reinsert_degree_one(Cactus& cactus, std::vector<DegreeOneRecord>& stack,
                         EdgeWeight lambda) {
    while (!stack.empty()) {
        DegreeOneRecord rec = std::move(stack.back());
        stack.pop_back();
        if (rec.lambda_at_contraction != lambda) {
            continue;  // stale: the bound dropped below this trivial cut
        }
        cactus.split_leaf(rec.leaf, rec.neighbor_rep);
    }
}

void reinsert_degree_two(Cactus& cactus, std::vector<ReinsertRecord>& stack) {
    while (!stack.empty()) {
        apply_reinsert(cactus, stack.back());
        stack.pop_back();
    }
}

}  // namespace cutcactus
