/******************************************************************************
 * kernel.cpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#include "cutcactus/kernel.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>

namespace cutcactus {

namespace {

EdgeWeight saturating_add(EdgeWeight a, EdgeWeight b) {
    EdgeWeight r = a + b;
    return (r < a) ? kInfiniteWeight : r;
}

/// Binary max-heap over vertices keyed by r value, ties to the lower id.
class MaxAdjacencyHeap {
 public:
    explicit MaxAdjacencyHeap(NodeId n) : pos_(n, kNotInHeap) {}

    bool empty() const { return heap_.empty(); }

    void push_or_increase(NodeId v, EdgeWeight key) {
        if (pos_[v] == kNotInHeap) {
            key_resize(v);
            key_[v] = key;
            pos_[v] = static_cast<std::uint32_t>(heap_.size());
            heap_.push_back(v);
            sift_up(pos_[v]);
        } else if (key > key_[v]) {
            key_[v] = key;
            sift_up(pos_[v]);
        }
    }

    NodeId pop() {
        NodeId top = heap_.front();
        pos_[top] = kNotInHeap;
        if (heap_.size() > 1) {
            heap_.front() = heap_.back();
            pos_[heap_.front()] = 0;
            heap_.pop_back();
            sift_down(0);
        } else {
            heap_.pop_back();
        }
        return top;
    }

 private:
    static constexpr std::uint32_t kNotInHeap = 0xffffffffu;

    void key_resize(NodeId v) {
        if (key_.size() <= v) {
            key_.resize(v + 1, 0);
        }
    }

    bool before(NodeId a, NodeId b) const {
        return key_[a] > key_[b] || (key_[a] == key_[b] && a < b);
    }

    void sift_up(std::size_t i) {
        while (i > 0) {
            std::size_t p = (i - 1) / 2;
            if (!before(heap_[i], heap_[p])) {
                break;
            }
            swap_at(i, p);
            i = p;
        }
    }

    void sift_down(std::size_t i) {
        while (true) {
            std::size_t l = 2 * i + 1;
            std::size_t r = l + 1;
            std::size_t best = i;
            if (l < heap_.size() && before(heap_[l], heap_[best])) {
                best = l;
            }
            if (r < heap_.size() && before(heap_[r], heap_[best])) {
                best = r;
            }
            if (best == i) {
                break;
            }
            swap_at(i, best);
            i = best;
        }
    }

    void swap_at(std::size_t i, std::size_t j) {
        std::swap(heap_[i], heap_[j]);
        pos_[heap_[i]] = static_cast<std::uint32_t>(i);
        pos_[heap_[j]] = static_cast<std::uint32_t>(j);
    }

    std::vector<NodeId> heap_;
    std::vector<std::uint32_t> pos_;
    std::vector<EdgeWeight> key_;
};

}  // namespace

EdgeWeight estimate_lambda(const StaticGraph& g, int clustering_rounds) {
    if (g.num_vertices() < 2) {
        throw std::invalid_argument("estimate_lambda needs two vertices");
    }
    EdgeWeight best = min_weighted_degree(g).second;
    StaticGraph cur = g;
    for (int round = 0; round < clustering_rounds; ++round) {
        if (cur.num_vertices() <= 2) {
            break;
        }
        UnionFind uf(cur.num_vertices());
        for (NodeId v = 0; v < cur.num_vertices(); ++v) {
            NodeId heaviest = kInvalidNode;
            EdgeWeight w = 0;
            for (std::size_t a = cur.first_arc(v); a < cur.arcs_end(v); ++a) {
                if (cur.arc_weight(a) > w ||
                    (cur.arc_weight(a) == w &&
                     cur.arc_target(a) < heaviest)) {
                    w = cur.arc_weight(a);
                    heaviest = cur.arc_target(a);
                }
            }
            if (heaviest != kInvalidNode) {
                uf.unite(v, heaviest);
            }
        }
        cur = contract_bulk(cur, uf).graph;
        if (cur.num_vertices() < 2) {
            break;
        }
        // Degrees of contracted vertices are genuine cuts of the input.
        best = std::min(best, min_weighted_degree(cur).second);
    }
    return best;
}

EdgeConnectivityBounds connectivity_lower_bounds(const StaticGraph& g,
                                                 EdgeWeight lambda_hat,
                                                 NodeId start) {
    NodeId n = g.num_vertices();
    EdgeConnectivityBounds bounds;
    bounds.q.assign(g.num_arcs(), 0);
    if (n == 0) {
        return bounds;
    }
    EdgeWeight cap = saturating_add(lambda_hat, 1);

    std::vector<EdgeWeight> r(n, 0);
    std::vector<bool> visited(n, false);
    MaxAdjacencyHeap heap(n);

    // The start vertex first; remaining seeds only matter when the graph is
    // disconnected.
    for (NodeId seed_i = 0; seed_i <= n; ++seed_i) {
        NodeId seed = (seed_i == 0) ? start : seed_i - 1;
        if (visited[seed]) {
            continue;
        }
        heap.push_or_increase(seed, 0);
        while (!heap.empty()) {
            NodeId x = heap.pop();
            if (visited[x]) {
                continue;
            }
            visited[x] = true;
            for (std::size_t a = g.first_arc(x); a < g.arcs_end(x); ++a) {
                NodeId y = g.arc_target(a);
                if (visited[y]) {
                    continue;
                }
                EdgeWeight nq =
                    std::min(saturating_add(r[y], g.arc_weight(a)), cap);
                bounds.q[a] = nq;
                bounds.q[g.reverse_arc(a)] = nq;
                r[y] = nq;
                heap.push_or_increase(y, r[y]);
            }
        }
    }
    return bounds;
}

std::size_t contract_high_connectivity(const StaticGraph& g,
                                       const EdgeConnectivityBounds& bounds,
                                       EdgeWeight lambda_hat, UnionFind& uf) {
    std::size_t marked = 0;
    for (std::size_t a = 0; a < g.num_arcs(); ++a) {
        if (g.arc_source(a) < g.arc_target(a) && bounds.q[a] > lambda_hat) {
            uf.unite(g.arc_source(a), g.arc_target(a));
            ++marked;
        }
    }
    return marked;
}

namespace {

std::size_t local_contract_range(const StaticGraph& g, EdgeWeight lambda_hat,
                                 UnionFind& uf, std::uint32_t mask,
                                 NodeId lo, NodeId hi) {
    std::size_t merged = 0;
    std::vector<bool> consumed(g.num_vertices(), false);
    std::vector<EdgeWeight> shared_weight(g.num_vertices(), kInfiniteWeight);
    const bool scan_rules =
        (mask & (kImbalancedTriangle | kHeavyNeighborhood)) != 0;

    for (NodeId u = lo; u < hi; ++u) {
        EdgeWeight cu = g.weighted_degree(u);
        for (std::size_t a = g.first_arc(u); a < g.arcs_end(u); ++a) {
            NodeId v = g.arc_target(a);
            if (u > v) {
                continue;
            }
            EdgeWeight w = g.arc_weight(a);
            EdgeWeight cv = g.weighted_degree(v);
            bool mark = false;
            if ((mask & kHeavyEdge) && w > lambda_hat) {
                mark = true;
            }
            if (!mark && (mask & kImbalancedVertex)) {
                if ((cv - w < w && cv > lambda_hat) ||
                    (cu - w < w && cu > lambda_hat)) {
                    mark = true;
                }
            }
            if (mark && uf.unite(u, v)) {
                ++merged;
            }
        }

        if (!scan_rules || consumed[u]) {
            continue;
        }
        for (std::size_t a = g.first_arc(u); a < g.arcs_end(u); ++a) {
            shared_weight[g.arc_target(a)] = g.arc_weight(a);
        }
        for (std::size_t a = g.first_arc(u); a < g.arcs_end(u); ++a) {
            NodeId v = g.arc_target(a);
            if (consumed[v]) {
                continue;
            }
            EdgeWeight w = g.arc_weight(a);
            EdgeWeight cv = g.weighted_degree(v);
            EdgeWeight shared = 0;
            bool mark = false;
            for (std::size_t b = g.first_arc(v); b < g.arcs_end(v); ++b) {
                NodeId x = g.arc_target(b);
                if (x == u || shared_weight[x] == kInfiniteWeight) {
                    continue;
                }
                EdgeWeight ux = shared_weight[x];
                EdgeWeight vx = g.arc_weight(b);
                shared += std::min(ux, vx);
                if ((mask & kImbalancedTriangle) && !consumed[x] &&
                    cv > lambda_hat && cu > lambda_hat &&
                    cv - vx - w < vx + w && cu - ux - w < ux + w) {
                    mark = true;
                }
            }
            if ((mask & kHeavyNeighborhood) && shared + w > lambda_hat) {
                mark = true;
            }
            if (mark && uf.unite(u, v)) {
                ++merged;
            }
            consumed[v] = true;
        }
        for (std::size_t a = g.first_arc(u); a < g.arcs_end(u); ++a) {
            shared_weight[g.arc_target(a)] = kInfiniteWeight;
        }
        consumed[u] = true;
    }
    return merged;
}

}  // namespace

std::size_t local_contract(const StaticGraph& g, EdgeWeight lambda_hat,
                           UnionFind& uf, std::uint32_t rule_mask,
                           unsigned threads) {
    NodeId n = g.num_vertices();
    if (threads <= 1 || n < 2048) {
        return local_contract_range(g, lambda_hat, uf, rule_mask, 0, n);
    }
    std::atomic<std::size_t> merged{0};
    std::vector<std::thread> pool;
    NodeId chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        NodeId lo = std::min<NodeId>(n, t * chunk);
        NodeId hi = std::min<NodeId>(n, lo + chunk);
        if (lo >= hi) {
            break;
        }
        pool.emplace_back([&, lo, hi] {
            merged += local_contract_range(g, lambda_hat, uf, rule_mask, lo,
                                           hi);
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    return merged.load();
}

std::size_t contract_degree_one(const StaticGraph& g, KernelState& state,
                                UnionFind& uf) {
    NodeId n = g.num_vertices();
    check_internal(state.groups.size() == n, "kernel groups out of sync");

    std::vector<std::size_t> rem_deg(n);
    std::vector<bool> pruned(n, false);
    std::vector<NodeId> queue;
    for (NodeId v = 0; v < n; ++v) {
        rem_deg[v] = g.degree(v);
        if (rem_deg[v] == 1) {
            queue.push_back(v);
        }
    }
    // Accumulated encompassed sets, updated as leaves fold into neighbors.
    std::vector<std::vector<NodeId>> acc = state.groups;

    std::size_t contracted = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        NodeId v = queue[qi];
        if (pruned[v] || rem_deg[v] != 1) {
            continue;
        }
        NodeId w = kInvalidNode;
        EdgeWeight cw = 0;
        for (std::size_t a = g.first_arc(v); a < g.arcs_end(v); ++a) {
            if (!pruned[g.arc_target(a)]) {
                w = g.arc_target(a);
                cw = g.arc_weight(a);
                break;
            }
        }
        check_internal(w != kInvalidNode, "leaf without neighbor");
        if (cw < state.lambda_hat) {
            // A smaller trivial cut; makes earlier records stale.
            state.lambda_hat = cw;
        }
        if (cw > state.lambda_hat) {
            continue;  // HeavyEdge territory
        }
        state.degree_one_stack.push_back({acc[v], acc[w].front(), cw});
        uf.unite(v, w);
        pruned[v] = true;
        acc[w].insert(acc[w].end(), acc[v].begin(), acc[v].end());
        acc[v].clear();
        ++contracted;
        if (--rem_deg[w] == 1) {
            queue.push_back(w);
        }
    }
    return contracted;
}

namespace {

void apply_bulk(StaticGraph& cur, UnionFind& uf, KernelState& state) {
    BulkContraction bulk = contract_bulk(cur, uf);
    std::vector<std::vector<NodeId>> groups(bulk.mapping.new_count);
    for (NodeId v = 0; v < cur.num_vertices(); ++v) {
        auto& dst = groups[bulk.mapping(v)];
        dst.insert(dst.end(), state.groups[v].begin(), state.groups[v].end());
    }
    state.groups = std::move(groups);
    state.mapping_history.push_back(std::move(bulk.mapping));
    cur = std::move(bulk.graph);
    if (cur.num_vertices() >= 2) {
        state.lambda_hat =
            std::min(state.lambda_hat, min_weighted_degree(cur).second);
    }
}

}  // namespace

KernelResult kernelize(const StaticGraph& g, const KernelOptions& opt) {
    if (g.num_vertices() < 2) {
        throw std::invalid_argument("kernelize needs at least two vertices");
    }
    KernelState state;
    state.groups.resize(g.num_vertices());
    for (NodeId v = 0; v < g.num_vertices(); ++v) {
        state.groups[v] = {v};
    }
    if (opt.initial_upper_bound > 0) {
        state.lambda_hat = opt.initial_upper_bound;
    } else if (opt.use_estimator) {
        state.lambda_hat = estimate_lambda(g, opt.estimator_rounds);
    } else {
        state.lambda_hat = min_weighted_degree(g).second;
    }

    StaticGraph cur = g;
    std::mt19937_64 rng(opt.seed);

    while (cur.num_vertices() > 1) {
        NodeId before = cur.num_vertices();
        state.lambda_hat =
            std::min(state.lambda_hat, min_weighted_degree(cur).second);

        if (opt.use_degree_one) {
            UnionFind uf(cur.num_vertices());
            if (contract_degree_one(cur, state, uf) > 0) {
                apply_bulk(cur, uf, state);
            }
        }
        if (cur.num_vertices() > 1 && opt.use_connectivity) {
            UnionFind uf(cur.num_vertices());
            unsigned passes = std::max(1u, opt.threads);
            std::vector<NodeId> starts;
            for (unsigned p = 0; p < passes; ++p) {
                starts.push_back(
                    static_cast<NodeId>(rng() % cur.num_vertices()));
            }
            std::size_t marked = 0;
            if (passes == 1) {
                auto bounds = connectivity_lower_bounds(
                    cur, state.lambda_hat, starts[0]);
                marked = contract_high_connectivity(cur, bounds,
                                                    state.lambda_hat, uf);
            } else {
                // Independent certificate passes from different start
                // vertices, all marking into the shared union-find.
                std::atomic<std::size_t> total{0};
                std::vector<std::thread> pool;
                for (unsigned p = 0; p < passes; ++p) {
                    pool.emplace_back([&, p] {
                        auto bounds = connectivity_lower_bounds(
                            cur, state.lambda_hat, starts[p]);
                        total += contract_high_connectivity(
                            cur, bounds, state.lambda_hat, uf);
                    });
                }
                for (auto& th : pool) {
                    th.join();
                }
                marked = total.load();
            }
            if (marked > 0) {
                apply_bulk(cur, uf, state);
            }
        }
        if (cur.num_vertices() > 1 && opt.use_local) {
            UnionFind uf(cur.num_vertices());
            if (local_contract(cur, state.lambda_hat, uf, opt.local_rule_mask,
                               opt.threads) > 0) {
                apply_bulk(cur, uf, state);
            }
        }

        NodeId removed = before - cur.num_vertices();
        if (removed == 0 ||
            static_cast<double>(removed) <
                opt.convergence_threshold * static_cast<double>(before)) {
            break;
        }
    }
    return {std::move(cur), std::move(state)};
}

}  // namespace cutcactus
