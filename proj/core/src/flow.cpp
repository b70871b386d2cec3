/******************************************************************************
 * flow.cpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#include "cutcactus/flow.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace cutcactus {

void FlowNetwork::add_undirected_edge(NodeId u, NodeId v,
                                      EdgeWeight capacity) {
    check_internal(u != v, "self loop in flow network");
    for (NodeId x : {u, v}) {
        to_.push_back(x == u ? v : u);
        residual_.push_back(capacity);
        capacity_.push_back(capacity);
        next_.push_back(first_[x == u ? u : v]);
        first_[x == u ? u : v] = static_cast<std::int64_t>(to_.size() - 1);
    }
}

namespace {

struct DinicState {
    std::vector<std::uint32_t> level;
    std::vector<std::int64_t> iter;
};

bool dinic_bfs(const FlowNetwork& net, NodeId s, NodeId t, DinicState& st) {
    st.level.assign(net.num_vertices(), 0xffffffffu);
    std::queue<NodeId> q;
    st.level[s] = 0;
    q.push(s);
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        net.for_arcs(u, [&](std::size_t a) {
            NodeId v = net.arc_target(a);
            if (net.residual(a) > 0 && st.level[v] == 0xffffffffu) {
                st.level[v] = st.level[u] + 1;
                q.push(v);
            }
        });
    }
    return st.level[t] != 0xffffffffu;
}

}  // namespace

EdgeWeight dinic_max_flow(FlowNetwork& net, NodeId s, NodeId t) {
    DinicState st;
    EdgeWeight total = 0;
    while (dinic_bfs(net, s, t, st)) {
        st.iter = net.first_;
        // Iterative blocking-flow DFS.
        std::vector<std::pair<NodeId, std::size_t>> path;  // (vertex, arc in)
        NodeId cur = s;
        while (true) {
            if (cur == t) {
                EdgeWeight push = kInfiniteWeight;
                for (auto& [v, a] : path) {
                    push = std::min(push, net.residual_[a]);
                }
                for (auto& [v, a] : path) {
                    net.residual_[a] -= push;
                    net.residual_[a ^ 1] += push;
                }
                total += push;
                // Restart from the lowest saturated arc.
                std::size_t cut_at = 0;
                while (cut_at < path.size() &&
                       net.residual_[path[cut_at].second] > 0) {
                    ++cut_at;
                }
                path.resize(cut_at);
                cur = path.empty() ? s : path.back().first;
                continue;
            }
            std::int64_t& a = st.iter[cur];
            if (a < 0) {
                if (path.empty()) {
                    break;  // no augmenting path from s in this phase
                }
                st.level[cur] = 0xffffffffu;  // dead end
                cur = path.size() >= 2 ? path[path.size() - 2].first : s;
                path.pop_back();
                continue;
            }
            std::size_t arc = static_cast<std::size_t>(a);
            NodeId v = net.to_[arc];
            if (net.residual_[arc] > 0 &&
                st.level[v] == st.level[cur] + 1) {
                path.emplace_back(v, arc);
                cur = v;
            } else {
                a = net.next_[arc];
            }
        }
    }
    return total;
}

FlowResult max_flow(const StaticGraph& g, NodeId s, NodeId t) {
    if (s == t) {
        throw std::invalid_argument("max_flow requires s != t");
    }
    FlowNetwork net(g.num_vertices());
    for (std::size_t a = 0; a < g.num_arcs(); ++a) {
        if (g.arc_source(a) < g.arc_target(a)) {
            net.add_undirected_edge(g.arc_source(a), g.arc_target(a),
                                    g.arc_weight(a));
        }
    }
    EdgeWeight value = dinic_max_flow(net, s, t);
    return {value, std::move(net), s, t};
}

SccPartition residual_sccs(const FlowResult& flow) {
    const FlowNetwork& net = flow.network;
    NodeId n = net.num_vertices();
    SccPartition out;
    out.component.assign(n, kInvalidNode);

    // Iterative Tarjan over arcs with positive residual capacity.
    std::vector<std::uint32_t> index(n, 0xffffffffu);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<NodeId> stack;
    std::uint32_t next_index = 0;

    struct Frame {
        NodeId v;
        std::int64_t arc;
    };
    std::vector<Frame> frames;

    for (NodeId root = 0; root < n; ++root) {
        if (index[root] != 0xffffffffu) {
            continue;
        }
        frames.push_back({root, -2});
        while (!frames.empty()) {
            Frame& f = frames.back();
            NodeId v = f.v;
            if (f.arc == -2) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
                f.arc = -3;  // marker: start arc iteration lazily
            }
            // Advance to the next usable arc.
            std::int64_t a =
                (f.arc == -3) ? net.first_arc_of(v)
                              : net.next_arc(static_cast<std::size_t>(f.arc));
            bool descended = false;
            while (a >= 0) {
                std::size_t arc = static_cast<std::size_t>(a);
                if (net.residual(arc) > 0) {
                    NodeId w = net.arc_target(arc);
                    if (index[w] == 0xffffffffu) {
                        f.arc = a;
                        frames.push_back({w, -2});
                        descended = true;
                        break;
                    }
                    if (on_stack[w]) {
                        low[v] = std::min(low[v], index[w]);
                    }
                }
                a = net.next_arc(arc);
            }
            if (descended) {
                continue;
            }
            if (a < 0) {
                if (low[v] == index[v]) {
                    NodeId comp = out.count++;
                    while (true) {
                        NodeId w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        out.component[w] = comp;
                        if (w == v) {
                            break;
                        }
                    }
                }
                frames.pop_back();
                if (!frames.empty()) {
                    low[frames.back().v] =
                        std::min(low[frames.back().v], low[v]);
                }
            }
        }
    }
    out.component_of_s = out.component[flow.s];
    out.component_of_t = out.component[flow.t];
    return out;
}

std::vector<std::vector<NodeId>> residual_chain(const FlowResult& flow) {
    SccPartition scc = residual_sccs(flow);
    const FlowNetwork& net = flow.network;
    NodeId n = net.num_vertices();
    NodeId k = scc.count;

    // Tarjan ids are in reverse topological order and all residual arcs run
    // toward the source side, so ascending component id is the chain order.
    // Verify the order is total: consecutive components must be joined by a
    // direct residual arc.
    std::vector<bool> direct(k, false);  // direct[c]: arc from c+1 to c
    for (NodeId u = 0; u < n; ++u) {
        net.for_arcs(u, [&](std::size_t a) {
            if (net.residual(a) == 0) {
                return;
            }
            NodeId cu = scc.component[u];
            NodeId cv = scc.component[net.arc_target(a)];
            if (cu == cv) {
                return;
            }
            check_internal(cu > cv, "residual arc against component order");
            if (cu == cv + 1) {
                direct[cv] = true;
            }
        });
    }
    for (NodeId c = 0; c + 1 < k; ++c) {
        check_internal(direct[c],
                       "minimum s-t cuts do not form a nested chain");
    }
    check_internal(scc.component_of_s == 0, "source not in first component");
    check_internal(scc.component_of_t == k - 1, "sink not in last component");

    std::vector<std::vector<NodeId>> chain(k);
    for (NodeId v = 0; v < n; ++v) {
        chain[scc.component[v]].push_back(v);
    }
    return chain;
}

FlowNetwork build_network(const DynamicGraph& g, std::vector<NodeId>& index,
                          std::vector<NodeId>& vertex) {
    index.assign(g.capacity(), kInvalidNode);
    vertex.clear();
    for (NodeId v = 0; v < g.capacity(); ++v) {
        if (g.alive(v)) {
            index[v] = static_cast<NodeId>(vertex.size());
            vertex.push_back(v);
        }
    }
    FlowNetwork net(static_cast<NodeId>(vertex.size()));
    for (NodeId v : vertex) {
        for (const auto& e : g.edges_of(v)) {
            if (v < e.to) {
                net.add_undirected_edge(index[v], index[e.to], e.weight);
            }
        }
    }
    return net;
}

}  // namespace cutcactus
