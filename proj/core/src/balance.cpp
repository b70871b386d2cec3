/******************************************************************************
 * balance.cpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#include "cutcactus/balance.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace cutcactus {

CutObjective balance_objective(const Cactus& cactus) {
    CutObjective obj;
    obj.node_weight.assign(cactus.node_capacity(), 0);
    for (NodeId x = 0; x < cactus.node_capacity(); ++x) {
        if (cactus.node_alive(x)) {
            obj.node_weight[x] = cactus.pi(x).size();
        }
    }
    obj.score = [](EdgeWeight side, EdgeWeight total) {
        return std::min(side, total - side);
    };
    return obj;
}

CutObjective conductance_objective(const Cactus& cactus,
                                   const StaticGraph& g) {
    CutObjective obj;
    obj.node_weight.assign(cactus.node_capacity(), 0);
    for (NodeId x = 0; x < cactus.node_capacity(); ++x) {
        if (!cactus.node_alive(x)) {
            continue;
        }
        EdgeWeight sum = 0;
        for (NodeId o : cactus.pi(x)) {
            sum = checked_weight_add(sum, g.weighted_degree(o));
        }
        obj.node_weight[x] = sum;
    }
    obj.score = [](EdgeWeight side, EdgeWeight total) {
        return std::min(side, total - side);
    };
    return obj;
}

CycleScanResult balance_in_cycle(
    const std::vector<EdgeWeight>& weights, EdgeWeight total,
    const std::function<EdgeWeight(EdgeWeight, EdgeWeight)>& score) {
    std::size_t size = weights.size();
    if (size < 3) {
        throw std::invalid_argument("cycles have at least three vertices");
    }
    std::deque<std::uint32_t> q1;
    std::deque<std::uint32_t> q2;
    EdgeWeight w1 = 0;
    EdgeWeight w2 = 0;
    for (std::uint32_t pos = 0; pos < size; ++pos) {
        q2.push_back(pos);
        w2 += weights[pos];
    }
    check_internal(w2 == total, "cycle weights do not sum to total");

    CycleScanResult out;
    std::size_t head_events = 0;
    bool was_head = false;
    auto head_update = [&] {
        bool now = !q1.empty() && q1.front() == 0;
        if (now && !was_head) {
            ++head_events;
        }
        was_head = now;
    };

    while (head_events < 2) {
        if (!q1.empty() && !q2.empty()) {
            EdgeWeight s = score(w1, total);
            if (!out.found || s > out.best_score) {
                out.found = true;
                out.best_score = s;
                out.arc_start = q1.front();
                out.arc_len = static_cast<std::uint32_t>(q1.size());
            }
        }
        if (w1 > w2) {
            std::uint32_t pos = q1.front();
            q1.pop_front();
            q2.push_back(pos);
            w1 -= weights[pos];
            w2 += weights[pos];
        } else {
            std::uint32_t pos = q2.front();
            q2.pop_front();
            q1.push_back(pos);
            w2 -= weights[pos];
            w1 += weights[pos];
        }
        ++out.dequeues;
        check_internal(out.dequeues <= 3 * size,
                       "cycle scan exceeded its step bound");
        head_update();
    }
    return out;
}

CycleScanResult balance_in_cycle(const std::vector<EdgeWeight>& weights,
                                 EdgeWeight total) {
    return balance_in_cycle(weights, total,
                            [](EdgeWeight side, EdgeWeight t) {
                                return std::min(side, t - side);
                            });
}

namespace {

struct Ring {
    std::vector<NodeId> nodes;        // cyclic order
    std::vector<std::size_t> edges;   // edges[j] joins nodes[j], nodes[j+1]
};

std::map<std::int32_t, Ring> collect_rings(const Cactus& c) {
    std::map<std::int32_t, std::vector<std::size_t>> by_cycle;
    for (std::size_t e = 0; e < c.edge_count_raw(); ++e) {
        if (c.edge_alive(e) && !c.edge(e).is_tree()) {
            by_cycle[c.edge(e).cycle].push_back(e);
        }
    }
    std::map<std::int32_t, Ring> rings;
    for (auto& [id, es] : by_cycle) {
        std::map<NodeId, std::vector<std::size_t>> at;
        for (std::size_t e : es) {
            at[c.edge(e).a].push_back(e);
            at[c.edge(e).b].push_back(e);
        }
        Ring ring;
        std::size_t cur = es.front();
        NodeId start = c.edge(cur).a;
        NodeId head = c.edge(cur).b;
        ring.nodes.push_back(start);
        ring.edges.push_back(cur);
        while (head != start) {
            ring.nodes.push_back(head);
            const auto& cand = at[head];
            std::size_t next = (cand[0] == cur) ? cand[1] : cand[0];
            ring.edges.push_back(next);
            head = (c.edge(next).a == head) ? c.edge(next).b
                                            : c.edge(next).a;
            cur = next;
        }
        check_internal(ring.nodes.size() == es.size(), "broken cycle ring");
        rings.emplace(id, std::move(ring));
    }
    return rings;
}

}  // namespace

CutSelection best_cut_by_objective(const Cactus& cactus,
                                   const CutObjective& objective) {
    CutSelection out;
    if (cactus.num_nodes() <= 1) {
        return out;  // no cuts
    }
    auto rings = collect_rings(cactus);

    // Block tree: cactus nodes plus one supernode per cycle.
    NodeId cap = cactus.node_capacity();
    std::size_t bt_size = cap + static_cast<std::size_t>(cactus.num_cycles());
    struct BtEdge {
        std::uint32_t to;
        std::size_t tree_edge;  // valid when joining two cactus nodes
    };
    std::vector<std::vector<BtEdge>> bt(bt_size);
    for (std::size_t e = 0; e < cactus.edge_count_raw(); ++e) {
        if (!cactus.edge_alive(e)) {
            continue;
        }
        const auto& ed = cactus.edge(e);
        if (ed.is_tree()) {
            bt[ed.a].push_back({ed.b, e});
            bt[ed.b].push_back({ed.a, e});
        }
    }
    for (const auto& [id, ring] : rings) {
        std::uint32_t super = cap + static_cast<std::uint32_t>(id);
        for (NodeId z : ring.nodes) {
            bt[z].push_back({super, static_cast<std::size_t>(-1)});
            bt[super].push_back({z, static_cast<std::size_t>(-1)});
        }
    }

    EdgeWeight total = 0;
    for (NodeId x = 0; x < cap; ++x) {
        if (cactus.node_alive(x)) {
            total += objective.node_weight[x];
        }
    }

    NodeId root = kInvalidNode;
    for (NodeId x = 0; x < cap; ++x) {
        if (cactus.node_alive(x)) {
            root = x;
            break;
        }
    }

    std::vector<EdgeWeight> weight(bt_size, 0);
    struct Frame {
        std::uint32_t node;
        std::uint32_t parent;
        std::size_t next_child;
    };
    std::vector<Frame> stack;
    stack.push_back({root, 0xffffffffu, 0});
    std::vector<bool> entered(bt_size, false);
    entered[root] = true;

    EdgeWeight best = 0;
    bool found = false;
    std::vector<std::size_t> best_edges;

    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next_child == 0 && f.node < cap) {
            weight[f.node] = objective.node_weight[f.node];
        }
        if (f.next_child < bt[f.node].size()) {
            const BtEdge& e = bt[f.node][f.next_child++];
            if (!entered[e.to]) {
                entered[e.to] = true;
                stack.push_back({e.to, f.node, 0});
            }
            continue;
        }
        // Completed: score and propagate upward.
        std::uint32_t me = f.node;
        std::uint32_t parent = f.parent;
        stack.pop_back();
        if (parent == 0xffffffffu) {
            break;
        }
        if (me >= cap) {
            // Cycle supernode whose entry is `parent`: rotate the ring so it
            // starts at the entry and scan the contiguous splits.
            const Ring& ring =
                rings.at(static_cast<std::int32_t>(me - cap));
            std::size_t len = ring.nodes.size();
            std::size_t at = 0;
            while (ring.nodes[at] != parent) {
                ++at;
            }
            std::vector<EdgeWeight> weights(len);
            weights[0] = total - weight[me];
            for (std::size_t j = 1; j < len; ++j) {
                weights[j] = weight[ring.nodes[(at + j) % len]];
            }
            CycleScanResult scan =
                balance_in_cycle(weights, total, objective.score);
            if (scan.found && (!found || scan.best_score > best)) {
                found = true;
                best = scan.best_score;
                std::size_t lo = (at + scan.arc_start + len - 1) % len;
                std::size_t hi = (at + scan.arc_start + scan.arc_len - 1)
                                 % len;
                best_edges = {ring.edges[lo], ring.edges[hi]};
            }
        } else {
            // Tree-edge child: the cut splits off this subtree.
            std::size_t via = static_cast<std::size_t>(-1);
            for (const BtEdge& e : bt[parent]) {
                if (e.to == me && e.tree_edge != static_cast<std::size_t>(-1)) {
                    via = e.tree_edge;
                    break;
                }
            }
            if (via != static_cast<std::size_t>(-1)) {
                EdgeWeight s = objective.score(weight[me], total);
                if (!found || s > best) {
                    found = true;
                    best = s;
                    best_edges = {via};
                }
            }
        }
        weight[parent] += weight[me];
    }

    if (!found) {
        return out;
    }
    out.found = true;
    out.objective = best;
    out.cut_edges = best_edges;
    out.side = cactus.cut_side(best_edges, root);
    out.in_side.assign(cactus.num_originals(), false);
    for (NodeId v : out.side) {
        out.in_side[v] = true;
    }
    return out;
}

CutSelection most_balanced_cut(const Cactus& cactus, NodeId n) {
    CutObjective obj = balance_objective(cactus);
    EdgeWeight placed = 0;
    for (NodeId x = 0; x < cactus.node_capacity(); ++x) {
        if (cactus.node_alive(x)) {
            placed += obj.node_weight[x];
        }
    }
    check_internal(placed == n, "balance called with wrong vertex count");
    return best_cut_by_objective(cactus, obj);
}

}  // namespace cutcactus
