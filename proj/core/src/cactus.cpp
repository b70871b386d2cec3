/******************************************************************************
 * cactus.cpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#include "cutcactus/cactus.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace cutcactus {

Cactus::Cactus(NodeId num_originals) : num_originals_(num_originals) {
    node_of_.assign(num_originals, kInvalidNode);
}

std::size_t Cactus::num_edges() const {
    std::size_t c = 0;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (edge_alive_[e]) {
            ++c;
        }
    }
    return c;
}

NodeId Cactus::add_node(std::vector<NodeId> originals) {
    NodeId id = static_cast<NodeId>(pi_.size());
    for (NodeId o : originals) {
        node_of_[o] = id;
    }
    pi_.push_back(std::move(originals));
    incident_.emplace_back();
    node_alive_.push_back(true);
    ++alive_node_count_;
    return id;
}

void Cactus::add_tree_edge(NodeId a, NodeId b) {
    check_internal(a != b, "self loop in cactus");
    edges_.push_back({a, b, kTreeEdge});
    edge_alive_.push_back(true);
    incident_[a].push_back(static_cast<std::uint32_t>(edges_.size() - 1));
    incident_[b].push_back(static_cast<std::uint32_t>(edges_.size() - 1));
}

std::int32_t Cactus::new_cycle() { return next_cycle_++; }

void Cactus::add_cycle_edge(NodeId a, NodeId b, std::int32_t cycle) {
    check_internal(a != b, "self loop in cactus");
    check_internal(cycle >= 0 && cycle < next_cycle_, "unknown cycle id");
    edges_.push_back({a, b, cycle});
    edge_alive_.push_back(true);
    incident_[a].push_back(static_cast<std::uint32_t>(edges_.size() - 1));
    incident_[b].push_back(static_cast<std::uint32_t>(edges_.size() - 1));
}

std::vector<NodeId> Cactus::absorb(const Cactus& other) {
    std::vector<NodeId> remap(other.node_capacity(), kInvalidNode);
    for (NodeId x = 0; x < other.node_capacity(); ++x) {
        if (other.node_alive_[x]) {
            remap[x] = add_node(other.pi_[x]);
        }
    }
    std::vector<std::int32_t> cycle_remap(
        static_cast<std::size_t>(other.next_cycle_), -1);
    for (std::size_t e = 0; e < other.edges_.size(); ++e) {
        if (!other.edge_alive_[e]) {
            continue;
        }
        const Edge& ed = other.edges_[e];
        if (ed.is_tree()) {
            add_tree_edge(remap[ed.a], remap[ed.b]);
        } else {
            auto idx = static_cast<std::size_t>(ed.cycle);
            if (cycle_remap[idx] < 0) {
                cycle_remap[idx] = new_cycle();
            }
            add_cycle_edge(remap[ed.a], remap[ed.b], cycle_remap[idx]);
        }
    }
    return remap;
}

void Cactus::erase_originals(std::span<const NodeId> originals) {
    if (originals.empty()) {
        return;
    }
    std::unordered_set<NodeId> gone(originals.begin(), originals.end());
    NodeId host = node_of_[originals.front()];
    check_internal(host != kInvalidNode, "original not placed");
    auto& list = pi_[host];
    std::size_t kept = 0;
    for (NodeId o : list) {
        if (gone.count(o)) {
            check_internal(node_of_[o] == host,
                           "erased originals span several nodes");
            node_of_[o] = kInvalidNode;
        } else {
            list[kept++] = o;
        }
    }
    check_internal(list.size() - kept == gone.size(),
                   "erased originals not all present");
    list.resize(kept);
}

NodeId Cactus::split_leaf(std::span<const NodeId> originals,
                          NodeId attach_rep) {
    NodeId host = node_of_[attach_rep];
    check_internal(host != kInvalidNode, "attach vertex not in cactus");
    erase_originals(originals);
    NodeId leaf = add_node({originals.begin(), originals.end()});
    add_tree_edge(host, leaf);
    return leaf;
}

std::size_t Cactus::direct_edge(NodeId a, NodeId b) const {
    for (std::uint32_t e : incident_[a]) {
        if (!edge_alive_[e]) {
            continue;
        }
        if ((edges_[e].a == a && edges_[e].b == b) ||
            (edges_[e].a == b && edges_[e].b == a)) {
            return e;
        }
    }
    return static_cast<std::size_t>(-1);
}

void Cactus::detach_incident(NodeId x, std::size_t e) {
    auto& inc = incident_[x];
    for (std::size_t i = 0; i < inc.size(); ++i) {
        if (inc[i] == e) {
            inc[i] = inc.back();
            inc.pop_back();
            return;
        }
    }
    check_internal(false, "edge missing from incidence list");
}

void Cactus::remove_edge(std::size_t e) {
    check_internal(edge_alive_[e], "double edge removal");
    edge_alive_[e] = false;
    detach_incident(edges_[e].a, e);
    detach_incident(edges_[e].b, e);
}

NodeId Cactus::splice_between(std::span<const NodeId> originals, NodeId rep0,
                              NodeId rep1) {
    NodeId n0 = node_of_[rep0];
    NodeId n1 = node_of_[rep1];
    check_internal(n0 != kInvalidNode && n1 != kInvalidNode,
                   "splice endpoints not in cactus");
    erase_originals(originals);
    // erase_originals may not move nodes, so n0/n1 stay valid.
    NodeId fresh = add_node({originals.begin(), originals.end()});
    if (n0 == n1) {
        add_tree_edge(n0, fresh);
        return fresh;
    }
    std::size_t e = direct_edge(n0, n1);
    check_internal(e != static_cast<std::size_t>(-1),
                   "splice endpoints not directly connected");
    std::int32_t cycle = edges_[e].cycle;
    remove_edge(e);
    if (cycle == kTreeEdge) {
        cycle = new_cycle();
        add_cycle_edge(n0, n1, cycle);
    }
    add_cycle_edge(n0, fresh, cycle);
    add_cycle_edge(fresh, n1, cycle);
    return fresh;
}

void Cactus::normalize() {
    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeId x = 0; x < node_capacity(); ++x) {
            if (!node_alive_[x] || !pi_[x].empty()) {
                continue;
            }
            std::vector<std::uint32_t> inc;
            for (std::uint32_t e : incident_[x]) {
                if (edge_alive_[e]) {
                    inc.push_back(e);
                }
            }
            if (inc.size() == 0 && alive_node_count_ > 1) {
                node_alive_[x] = false;
                --alive_node_count_;
                changed = true;
            } else if (inc.size() == 1) {
                // Empty leaf: its cut has an empty side.
                remove_edge(inc[0]);
                node_alive_[x] = false;
                --alive_node_count_;
                changed = true;
            } else if (inc.size() == 2) {
                const Edge& e0 = edges_[inc[0]];
                const Edge& e1 = edges_[inc[1]];
                NodeId a = (e0.a == x) ? e0.b : e0.a;
                NodeId b = (e1.a == x) ? e1.b : e1.a;
                if (e0.is_tree() && e1.is_tree() && a != b) {
                    // Both tree edges represent the same bipartition.
                    remove_edge(inc[0]);
                    remove_edge(inc[1]);
                    std::size_t dup = direct_edge(a, b);
                    if (dup == static_cast<std::size_t>(-1) ||
                        !edges_[dup].is_tree()) {
                        add_tree_edge(a, b);
                    }
                    node_alive_[x] = false;
                    --alive_node_count_;
                    changed = true;
                } else if (!e0.is_tree() && e0.cycle == e1.cycle) {
                    std::int32_t cycle = e0.cycle;
                    remove_edge(inc[0]);
                    remove_edge(inc[1]);
                    std::size_t dup = direct_edge(a, b);
                    if (a == b) {
                        // Two-node cycle collapsed onto one node; drop it.
                    } else if (dup != static_cast<std::size_t>(-1) &&
                               edges_[dup].cycle == cycle) {
                        // Closing a triangle: the remaining pair (a, b) is a
                        // two-edge cycle, equivalent to one tree edge.
                        remove_edge(dup);
                        add_tree_edge(a, b);
                    } else {
                        add_cycle_edge(a, b, cycle);
                    }
                    node_alive_[x] = false;
                    --alive_node_count_;
                    changed = true;
                }
            }
        }
    }
}

void Cactus::compact() {
    // Nodes are renumbered by their smallest original vertex, empty nodes
    // last, so equal cacti serialize identically.
    std::vector<NodeId> order;
    for (NodeId x = 0; x < node_capacity(); ++x) {
        if (node_alive_[x]) {
            order.push_back(x);
        }
    }
    auto key = [&](NodeId x) {
        NodeId lowest = kInvalidNode;
        for (NodeId o : pi_[x]) {
            lowest = std::min(lowest, o);
        }
        return lowest;
    };
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        return key(a) < key(b);
    });

    std::vector<NodeId> remap(node_capacity(), kInvalidNode);
    std::vector<std::vector<NodeId>> pi;
    std::vector<std::vector<std::uint32_t>> incident;
    NodeId next = 0;
    for (NodeId x : order) {
        remap[x] = next++;
        pi.push_back(std::move(pi_[x]));
    }
    std::vector<Edge> edges;
    std::vector<std::int32_t> cycle_remap(
        static_cast<std::size_t>(next_cycle_), -1);
    std::int32_t cycles = 0;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (!edge_alive_[e]) {
            continue;
        }
        Edge ed = edges_[e];
        ed.a = remap[ed.a];
        ed.b = remap[ed.b];
        if (!ed.is_tree()) {
            auto idx = static_cast<std::size_t>(ed.cycle);
            if (cycle_remap[idx] < 0) {
                cycle_remap[idx] = cycles++;
            }
            ed.cycle = cycle_remap[idx];
        }
        edges.push_back(ed);
    }
    incident.resize(next);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        incident[edges[e].a].push_back(static_cast<std::uint32_t>(e));
        incident[edges[e].b].push_back(static_cast<std::uint32_t>(e));
    }
    pi_ = std::move(pi);
    incident_ = std::move(incident);
    edges_ = std::move(edges);
    edge_alive_.assign(edges_.size(), true);
    node_alive_.assign(pi_.size(), true);
    alive_node_count_ = pi_.size();
    next_cycle_ = cycles;
    for (NodeId x = 0; x < node_capacity(); ++x) {
        for (NodeId o : pi_[x]) {
            node_of_[o] = x;
        }
    }
}

void Cactus::check_valid() const {
    for (NodeId x = 0; x < node_capacity(); ++x) {
        if (!node_alive_[x]) {
            continue;
        }
        for (NodeId o : pi_[x]) {
            check_internal(o < num_originals_ && node_of_[o] == x,
                           "pi / node_of mismatch");
        }
    }

    // Every cycle id's edges must form one simple cycle of length >= 3.
    std::map<std::int32_t, std::vector<std::size_t>> cycles;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (!edge_alive_[e]) {
            continue;
        }
        check_internal(node_alive_[edges_[e].a] && node_alive_[edges_[e].b],
                       "edge touching dead node");
        if (!edges_[e].is_tree()) {
            cycles[edges_[e].cycle].push_back(e);
        }
    }
    for (const auto& [id, es] : cycles) {
        check_internal(es.size() >= 3, "cycle shorter than three edges");
        std::map<NodeId, int> deg;
        for (std::size_t e : es) {
            deg[edges_[e].a]++;
            deg[edges_[e].b]++;
        }
        check_internal(deg.size() == es.size(), "cycle is not simple");
        for (const auto& [node, d] : deg) {
            check_internal(d == 2, "cycle node degree != 2");
        }
    }

    // Connectivity of the cactus itself.
    if (alive_node_count_ > 0) {
        NodeId start = kInvalidNode;
        for (NodeId x = 0; x < node_capacity(); ++x) {
            if (node_alive_[x]) {
                start = x;
                break;
            }
        }
        std::vector<bool> seen(node_capacity(), false);
        std::vector<NodeId> stack = {start};
        seen[start] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (std::uint32_t e : incident_[u]) {
                if (!edge_alive_[e]) {
                    continue;
                }
                NodeId w = (edges_[e].a == u) ? edges_[e].b : edges_[e].a;
                if (!seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        check_internal(reached == alive_node_count_, "cactus disconnected");
    }
}

std::vector<NodeId> Cactus::cut_side(std::span<const std::size_t> cut_edges,
                                     NodeId avoid) const {
    std::vector<bool> banned(edges_.size(), false);
    for (std::size_t e : cut_edges) {
        banned[e] = true;
    }
    std::vector<bool> seen(node_capacity(), false);
    std::vector<NodeId> stack = {avoid};
    seen[avoid] = true;
    while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        for (std::uint32_t e : incident_[u]) {
            if (!edge_alive_[e] || banned[e]) {
                continue;
            }
            NodeId w = (edges_[e].a == u) ? edges_[e].b : edges_[e].a;
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    std::vector<NodeId> side;
    for (NodeId x = 0; x < node_capacity(); ++x) {
        if (node_alive_[x] && !seen[x]) {
            side.insert(side.end(), pi_[x].begin(), pi_[x].end());
        }
    }
    return side;
}

void Cactus::for_each_min_cut(
    const std::function<void(const std::vector<NodeId>&)>& fn) const {
    // One bipartition per tree edge, one per pair of same-cycle edges,
    // computed by component search with the cut edges removed. Sides that
    // carry no original vertices are degenerate and skipped.
    std::size_t placed = 0;
    for (NodeId x = 0; x < node_capacity(); ++x) {
        if (node_alive_[x]) {
            placed += pi_[x].size();
        }
    }
    std::vector<std::size_t> tree_edges;
    std::map<std::int32_t, std::vector<std::size_t>> cycles;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (!edge_alive_[e]) {
            continue;
        }
        if (edges_[e].is_tree()) {
            tree_edges.push_back(e);
        } else {
            cycles[edges_[e].cycle].push_back(e);
        }
    }
    for (std::size_t e : tree_edges) {
        std::size_t banned[1] = {e};
        std::vector<NodeId> side = cut_side(banned, edges_[e].a);
        if (!side.empty() && side.size() < placed) {
            fn(side);
        }
    }
    for (const auto& [id, es] : cycles) {
        // Walk the cycle to get edges in cyclic order.
        std::map<NodeId, std::vector<std::size_t>> at;
        for (std::size_t e : es) {
            at[edges_[e].a].push_back(e);
            at[edges_[e].b].push_back(e);
        }
        std::vector<std::size_t> order;
        std::size_t cur = es.front();
        NodeId head = edges_[cur].b;
        order.push_back(cur);
        while (order.size() < es.size()) {
            const auto& cand = at[head];
            std::size_t next = (cand[0] == cur) ? cand[1] : cand[0];
            order.push_back(next);
            head = (edges_[next].a == head) ? edges_[next].b : edges_[next].a;
            cur = next;
        }
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            for (std::size_t j = i + 1; j < order.size(); ++j) {
                std::size_t banned[2] = {order[i], order[j]};
                NodeId anchor = edges_[order[i]].a;
                std::vector<NodeId> side = cut_side(banned, anchor);
                if (!side.empty() && side.size() < placed) {
                    fn(side);
                }
            }
        }
    }
}

std::size_t Cactus::count_min_cuts() const {
    std::size_t count = 0;
    std::map<std::int32_t, std::size_t> cycle_len;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (!edge_alive_[e]) {
            continue;
        }
        if (edges_[e].is_tree()) {
            ++count;
        } else {
            cycle_len[edges_[e].cycle]++;
        }
    }
    for (const auto& [id, len] : cycle_len) {
        count += len * (len - 1) / 2;
    }
    return count;
}

}  // namespace cutcactus
