// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria are quantitative and run at fixed tolerances.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cutcactus/balance.hpp"
#include "cutcactus/flow.hpp"
#include "cutcactus/instance_gen.hpp"
#include "cutcactus/kernel.hpp"
#include "cutcactus/oracle.hpp"
#include "cutcactus/pipeline.hpp"
#include "cutcactus/recursive_cactus.hpp"

using namespace cutcactus;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    double seconds = 0.0;
};

class Check {
 public:
    explicit Check(Outcome* out) : out_(out) {}

    void fail(const std::string& why) {
        out_->pass = false;
        if (++failures_ <= 5) {
            if (!out_->detail.empty()) {
                out_->detail += "; ";
            }
            out_->detail += why;
        }
    }

    void require(bool cond, const std::string& why) {
        if (!cond) {
            fail(why);
        }
    }

 private:
    Outcome* out_;
    std::size_t failures_ = 0;
};

const std::vector<Variant> kAllVariants = {
    Variant::kBasic,
    Variant::kConnectivity,
    Variant::kLocal,
    Variant::kDegreeOne,
    Variant::kKernelInRecursion,
    Variant::kDegreeOneInRecursion,
    Variant::kFull};

const std::vector<EdgeSelection> kAllStrategies = {
    EdgeSelection::kRandom, EdgeSelection::kCentral, EdgeSelection::kHeavy,
    EdgeSelection::kWeightedHeavy};

struct CorpusGraph {
    StaticGraph graph;
    CutSet oracle;
};

std::vector<CorpusGraph> make_corpus(std::size_t count, std::uint64_t seed) {
    std::vector<CorpusGraph> corpus;
    corpus.reserve(count);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        NodeId n = 4 + rng() % 9;  // 4..12
        bool unit = rng() & 1;
        StaticGraph g = random_connected_graph(
            n, rng() % (2 * n), 1, unit ? 1 : 10, rng);
        CutSet oracle = brute_force_min_cuts(g);
        corpus.push_back({std::move(g), std::move(oracle)});
    }
    return corpus;
}

std::set<std::uint32_t> cactus_masks(const Cactus& cactus, NodeId n) {
    std::set<std::uint32_t> out;
    cactus.for_each_min_cut([&](const std::vector<NodeId>& side) {
        std::uint32_t mask = 0;
        for (NodeId v : side) {
            mask |= 1u << v;
        }
        out.insert(canonical_side(mask, n));
    });
    return out;
}

std::uint32_t mask_of(const std::vector<NodeId>& originals) {
    std::uint32_t mask = 0;
    for (NodeId v : originals) {
        mask |= 1u << v;
    }
    return mask;
}

RunConfig config_for(Variant v, EdgeSelection s, std::uint64_t seed,
                     unsigned threads = 1) {
    RunConfig cfg;
    cfg.variant = v;
    cfg.strategy = s;
    cfg.seed = seed;
    cfg.threads = threads;
    return cfg;
}

// Structural invariants (criterion 9), charged to the given checker.
void check_structure(const StaticGraph& g, const PipelineResult& res,
                     Check& check) {
    try {
        res.cactus.check_valid();
    } catch (const std::exception& e) {
        check.fail(e.what());
        return;
    }
    NodeId n = g.num_vertices();
    check.require(res.cactus.num_nodes() <= 2 * n, "node bound 2n violated");
    std::vector<bool> placed(n, false);
    std::size_t total = 0;
    bool partition_ok = true;
    for (NodeId x = 0; x < res.cactus.node_capacity(); ++x) {
        if (!res.cactus.node_alive(x)) {
            continue;
        }
        for (NodeId o : res.cactus.pi(x)) {
            if (o >= n || placed[o]) {
                partition_ok = false;
                break;
            }
            placed[o] = true;
            ++total;
        }
    }
    check.require(partition_ok && total == n, "pi is not a partition of V");
    res.cactus.for_each_min_cut([&](const std::vector<NodeId>& side) {
        std::vector<bool> mask(n, false);
        for (NodeId v : side) {
            mask[v] = true;
        }
        if (g.cut_weight(mask) != res.lambda) {
            check.fail("represented cut has wrong weight");
        }
    });
}

// --- criterion 1 ------------------------------------------------------------

Outcome criterion_oracle_equivalence(const std::vector<CorpusGraph>& corpus,
                                     Check& structure) {
    Outcome out;
    Check check(&out);
    auto start = std::chrono::steady_clock::now();
    std::size_t runs = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const StaticGraph& g = corpus[i].graph;
        NodeId n = g.num_vertices();
        std::set<std::uint32_t> expected(corpus[i].oracle.sides.begin(),
                                         corpus[i].oracle.sides.end());
        for (Variant v : kAllVariants) {
            for (EdgeSelection s : kAllStrategies) {
                PipelineResult res =
                    find_all_mincuts(g, config_for(v, s, i));
                ++runs;
                if (res.lambda != corpus[i].oracle.lambda) {
                    check.fail("lambda mismatch on instance " +
                               std::to_string(i));
                    continue;
                }
                if (cactus_masks(res.cactus, n) != expected) {
                    std::ostringstream os;
                    os << "cut set mismatch on instance " << i
                       << " variant " << variant_name(v) << " strategy "
                       << static_cast<int>(s);
                    check.fail(os.str());
                }
                if (v == Variant::kFull && s == EdgeSelection::kHeavy) {
                    check_structure(g, res, structure);
                }
            }
        }
    }
    out.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    check.require(out.seconds < 60.0, "exceeded the 60 s budget");
    std::ostringstream os;
    os << runs << " runs over " << corpus.size() << " instances";
    if (!out.detail.empty()) {
        os << "; " << out.detail;
    }
    out.detail = os.str();
    return out;
}

// --- criterion 2 ------------------------------------------------------------

Outcome criterion_cycle_law(Check& structure) {
    Outcome out;
    Check check(&out);
    for (NodeId n : {5u, 20u, 100u}) {
        StaticGraph g = cycle_graph(n);
        PipelineResult res = find_all_mincuts(
            g, config_for(Variant::kFull, EdgeSelection::kHeavy, 0));
        check.require(res.lambda == 2, "cycle lambda != 2");
        check.require(res.cactus.num_nodes() == n,
                      "C_" + std::to_string(n) + " cactus size != n");
        std::size_t cuts = 0;
        res.cactus.for_each_min_cut(
            [&](const std::vector<NodeId>&) { ++cuts; });
        std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
        check.require(cuts == expected && res.cactus.count_min_cuts() ==
                                              expected,
                      "C_" + std::to_string(n) + " cut count " +
                          std::to_string(cuts) + " != " +
                          std::to_string(expected));
        check_structure(g, res, structure);
    }
    out.detail = "C_5=10, C_20=190, C_100=4950 exact";
    return out;
}

// --- criterion 3 ------------------------------------------------------------

Outcome criterion_tree_law(Check& structure) {
    Outcome out;
    Check check(&out);
    std::mt19937_64 rng(2024);
    for (NodeId n : {10u, 50u, 200u, 1000u}) {
        for (int rep = 0; rep < 3; ++rep) {
            StaticGraph g = random_tree(n, rng);
            PipelineResult res = find_all_mincuts(
                g, config_for(Variant::kFull, EdgeSelection::kHeavy, rep));
            check.require(res.lambda == 1, "tree lambda != 1");
            check.require(res.kernel_vertices <= 1,
                          "recursive core received " +
                              std::to_string(res.kernel_vertices) +
                              " vertices");
            check.require(res.cactus.count_min_cuts() == n - 1,
                          "tree cut count != n-1");
            // Cut-set equivalence with the tree: one bipartition per edge,
            // as the vertex set of the child subtree.
            std::set<std::vector<std::uint64_t>> expected;
            {
                std::vector<std::vector<NodeId>> children(n);
                std::vector<NodeId> parent(n, kInvalidNode);
                std::vector<NodeId> order;
                std::vector<bool> seen(n, false);
                order.push_back(0);
                seen[0] = true;
                for (std::size_t qi = 0; qi < order.size(); ++qi) {
                    NodeId u = order[qi];
                    for (std::size_t a = g.first_arc(u); a < g.arcs_end(u);
                         ++a) {
                        NodeId w = g.arc_target(a);
                        if (!seen[w]) {
                            seen[w] = true;
                            parent[w] = u;
                            children[u].push_back(w);
                            order.push_back(w);
                        }
                    }
                }
                std::vector<std::uint64_t> zero((n + 63) / 64, 0);
                std::vector<std::vector<std::uint64_t>> sub(n, zero);
                for (std::size_t qi = order.size(); qi-- > 0;) {
                    NodeId u = order[qi];
                    sub[u][u / 64] |= 1ull << (u % 64);
                    for (NodeId c : children[u]) {
                        for (std::size_t w = 0; w < zero.size(); ++w) {
                            sub[u][w] |= sub[c][w];
                        }
                    }
                    if (parent[u] != kInvalidNode) {
                        expected.insert(sub[u]);
                    }
                }
            }
            std::set<std::vector<std::uint64_t>> got;
            std::vector<std::uint64_t> zero((n + 63) / 64, 0);
            res.cactus.for_each_min_cut(
                [&](const std::vector<NodeId>& side) {
                    std::vector<std::uint64_t> bits = zero;
                    for (NodeId v : side) {
                        bits[v / 64] |= 1ull << (v % 64);
                    }
                    // Canonical side: the one not containing vertex 0.
                    if (bits[0] & 1ull) {
                        for (std::size_t w = 0; w < bits.size(); ++w) {
                            bits[w] = ~bits[w];
                        }
                        bits[0] &= ~1ull;
                        std::size_t last = n % 64;
                        if (last != 0) {
                            bits.back() &= (1ull << last) - 1ull;
                        }
                    }
                    got.insert(bits);
                });
            // Tree subtrees never contain the root, so they are canonical.
            check.require(got == expected,
                          "tree cut sets differ at n=" + std::to_string(n));
            check_structure(g, res, structure);
        }
    }
    out.detail = "n in {10,50,200,1000}, three trees each";
    return out;
}

// --- criterion 4 ------------------------------------------------------------

Outcome criterion_balance_oracle(const std::vector<CorpusGraph>& corpus) {
    Outcome out;
    Check check(&out);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const StaticGraph& g = corpus[i].graph;
        NodeId n = g.num_vertices();
        PipelineResult res = find_all_mincuts(
            g, config_for(Variant::kFull, EdgeSelection::kHeavy, i));
        EdgeWeight best_balance = 0;
        EdgeWeight best_degree_side = 0;
        EdgeWeight degree_total = 0;
        for (NodeId v = 0; v < n; ++v) {
            degree_total += g.weighted_degree(v);
        }
        for (std::uint32_t mask : corpus[i].oracle.sides) {
            EdgeWeight k = __builtin_popcount(mask);
            best_balance = std::max(
                best_balance,
                std::min(k, static_cast<EdgeWeight>(n) - k));
            EdgeWeight side = 0;
            for (NodeId v = 0; v < n; ++v) {
                if ((mask >> v) & 1u) {
                    side += g.weighted_degree(v);
                }
            }
            best_degree_side = std::max(
                best_degree_side, std::min(side, degree_total - side));
        }
        CutSelection bal = most_balanced_cut(res.cactus, n);
        if (!bal.found || bal.objective != best_balance) {
            check.fail("balance mismatch on instance " + std::to_string(i));
        } else {
            std::vector<bool> side(n, false);
            for (NodeId v : bal.side) {
                side[v] = true;
            }
            check.require(g.cut_weight(side) == res.lambda,
                          "balanced cut is not minimum");
        }
        CutSelection cond = best_cut_by_objective(
            res.cactus, conductance_objective(res.cactus, g));
        if (!cond.found || cond.objective != best_degree_side) {
            check.fail("conductance mismatch on instance " +
                       std::to_string(i));
        }
    }
    out.detail = std::to_string(corpus.size()) +
                 " instances, balance and conductance exact";
    return out;
}

// --- criterion 5 ------------------------------------------------------------

Outcome criterion_cycle_scan() {
    Outcome out;
    Check check(&out);
    std::mt19937_64 rng(1234);
    for (int iter = 0; iter < 10000; ++iter) {
        std::size_t len = 3 + rng() % 18;  // up to 20
        std::vector<EdgeWeight> w(len);
        EdgeWeight total = 0;
        for (auto& x : w) {
            x = 1 + rng() % 50;
            total += x;
        }
        CycleScanResult scan = balance_in_cycle(w, total);
        EdgeWeight best = 0;
        for (std::size_t s = 0; s < len; ++s) {
            EdgeWeight side = 0;
            for (std::size_t l = 1; l < len; ++l) {
                side += w[(s + l - 1) % len];
                best = std::max(best, std::min(side, total - side));
            }
        }
        check.require(scan.best_score == best, "scan missed the optimum");
        check.require(scan.dequeues <= 3 * len, "scan exceeded 3i steps");
    }
    out.detail = "10000 vectors, i <= 20, step bound 3i";
    return out;
}

// --- criterion 6 ------------------------------------------------------------

// Per-rule isolation. Local rules must only merge endpoints of edges whose
// connectivity exceeds the minimum cut; degree rules must account for every
// removed cut through their reinsertion records.

std::set<std::uint32_t> expand_masks(const CutSet& cuts,
                                     const ContractionMapping& m, NodeId n) {
    std::set<std::uint32_t> out;
    for (std::uint32_t mask : cuts.sides) {
        std::uint32_t e = 0;
        for (NodeId v = 0; v < n; ++v) {
            if ((mask >> m(v)) & 1u) {
                e |= 1u << v;
            }
        }
        out.insert(canonical_side(e, n));
    }
    return out;
}

void check_local_rule_isolation(const CorpusGraph& cg, std::uint32_t rule,
                                Check& check) {
    const StaticGraph& g = cg.graph;
    NodeId n = g.num_vertices();
    EdgeWeight lambda = cg.oracle.lambda;
    EdgeWeight lambda_hat = estimate_lambda(g);
    UnionFind uf(n);
    local_contract(g, lambda_hat, uf, rule);
    // Every merged edge endpoint pair must have connectivity above lambda.
    for (std::size_t a = 0; a < g.num_arcs(); ++a) {
        NodeId u = g.arc_source(a);
        NodeId v = g.arc_target(a);
        if (u < v && uf.find(u) == uf.find(v)) {
            if (max_flow(g, u, v).value <= lambda) {
                check.fail("rule merged an edge of minimum connectivity");
            }
        }
    }
    auto [h, m] = contract_bulk(g, uf);
    if (h.num_vertices() < 2) {
        check.fail("rule collapsed the whole graph");
        return;
    }
    CutSet after = brute_force_min_cuts(h);
    if (after.lambda != lambda) {
        check.fail("rule changed the minimum cut value");
        return;
    }
    std::set<std::uint32_t> expected(cg.oracle.sides.begin(),
                                     cg.oracle.sides.end());
    check.require(expand_masks(after, m, n) == expected,
                  "rule destroyed or invented cuts");
}

void check_degree_one_isolation(const CorpusGraph& cg, Check& check) {
    const StaticGraph& g = cg.graph;
    NodeId n = g.num_vertices();
    EdgeWeight lambda = cg.oracle.lambda;
    KernelState state;
    state.lambda_hat = estimate_lambda(g);
    state.groups.resize(n);
    for (NodeId v = 0; v < n; ++v) {
        state.groups[v] = {v};
    }
    UnionFind uf(n);
    contract_degree_one(g, state, uf);
    auto [h, m] = contract_bulk(g, uf);

    std::set<std::uint32_t> got;
    if (h.num_vertices() >= 2) {
        CutSet after = brute_force_min_cuts(h);
        if (after.lambda == lambda) {
            got = expand_masks(after, m, n);
        }
    }
    for (const auto& rec : state.degree_one_stack) {
        if (rec.lambda_at_contraction == lambda) {
            got.insert(canonical_side(mask_of(rec.leaf), n));
        }
    }
    std::set<std::uint32_t> expected(cg.oracle.sides.begin(),
                                     cg.oracle.sides.end());
    check.require(got == expected, "degree-one lost or invented cuts");
}

void check_degree_two_isolation(const CorpusGraph& cg, Check& check) {
    const StaticGraph& g = cg.graph;
    NodeId n = g.num_vertices();
    EdgeWeight lambda = cg.oracle.lambda;
    DynamicGraph d(g);
    std::vector<ReinsertRecord> records;
    degree_two_contract(d, lambda, records);

    // Cut set of the contracted graph, expanded to original vertices.
    std::set<std::uint32_t> got;
    if (d.num_alive() >= 2) {
        std::vector<WeightedEdge> edges;
        std::vector<NodeId> rep(d.capacity(), kInvalidNode);
        std::vector<std::vector<NodeId>> classes;
        for (NodeId v = 0; v < d.capacity(); ++v) {
            if (d.alive(v)) {
                rep[v] = static_cast<NodeId>(classes.size());
                classes.push_back(d.contained(v));
            }
        }
        for (NodeId v = 0; v < d.capacity(); ++v) {
            if (!d.alive(v)) {
                continue;
            }
            for (const auto& e : d.edges_of(v)) {
                if (v < e.to) {
                    edges.push_back({rep[v], rep[e.to], e.weight});
                }
            }
        }
        StaticGraph h = StaticGraph::from_edges(
            edges, static_cast<NodeId>(classes.size()));
        CutSet after = brute_force_min_cuts(h);
        if (after.lambda == lambda) {
            for (std::uint32_t mask : after.sides) {
                std::uint32_t e = 0;
                for (NodeId c = 0; c < classes.size(); ++c) {
                    if ((mask >> c) & 1u) {
                        e |= mask_of(classes[c]);
                    }
                }
                got.insert(canonical_side(e, n));
            }
        }
    }
    // Replay records newest first: a leaf adds the trivial cut; the
    // equal-weight case additionally doubles every cut separating its two
    // neighbors by flipping the contracted vertex across.
    std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
        std::uint32_t vmask = mask_of(it->originals);
        got.insert(canonical_side(vmask, n));
        if (it->kind == ReinsertRecord::Kind::kCycleOrLeaf) {
            std::uint32_t r0 = 1u << it->attach_rep;
            std::uint32_t r1 = 1u << it->other_rep;
            std::set<std::uint32_t> doubled;
            for (std::uint32_t side : got) {
                bool has0 = (side & r0) != 0;
                bool has1 = (side & r1) != 0;
                if (has0 != has1) {
                    doubled.insert(canonical_side(side ^ vmask, n) & full);
                }
            }
            got.insert(doubled.begin(), doubled.end());
        }
    }
    std::set<std::uint32_t> expected(cg.oracle.sides.begin(),
                                     cg.oracle.sides.end());
    check.require(got == expected, "degree-two lost or invented cuts");
}

Outcome criterion_kernel_safety(const std::vector<CorpusGraph>& corpus) {
    Outcome out;
    Check check(&out);
    for (const CorpusGraph& cg : corpus) {
        for (std::uint32_t rule :
             {kHeavyEdge, kImbalancedVertex, kImbalancedTriangle,
              kHeavyNeighborhood}) {
            check_local_rule_isolation(cg, rule, check);
        }
        check_degree_one_isolation(cg, check);
        check_degree_two_isolation(cg, check);
    }
    out.detail = "six rules isolated on " + std::to_string(corpus.size()) +
                 " instances";
    return out;
}

// --- criterion 7 ------------------------------------------------------------

Outcome criterion_determinism_parallel() {
    Outcome out;
    Check check(&out);
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 100; ++i) {
        StaticGraph g;
        if (i % 5 == 4) {
            g = cluster_bridge_graph(4 + rng() % 4, 6 + rng() % 5, 4, rng);
        } else {
            NodeId n = 10 + rng() % 50;
            g = random_connected_graph(n, n + rng() % (3 * n), 1, 6, rng);
        }
        NodeId n = g.num_vertices();
        std::set<std::vector<std::uint64_t>> sets[2];
        unsigned thread_counts[2] = {1, 4};
        for (int run = 0; run < 2; ++run) {
            PipelineResult res = find_all_mincuts(
                g, config_for(Variant::kFull, EdgeSelection::kHeavy, 7,
                              thread_counts[run]));
            std::vector<std::uint64_t> zero((n + 63) / 64, 0);
            res.cactus.for_each_min_cut(
                [&](const std::vector<NodeId>& side) {
                    std::vector<std::uint64_t> bits = zero;
                    for (NodeId v : side) {
                        bits[v / 64] |= 1ull << (v % 64);
                    }
                    if (bits[0] & 1ull) {
                        for (std::size_t w = 0; w < bits.size(); ++w) {
                            bits[w] = ~bits[w];
                        }
                        std::size_t last = n % 64;
                        if (last != 0) {
                            bits.back() &= (1ull << last) - 1ull;
                        }
                    }
                    sets[run].insert(bits);
                });
        }
        check.require(sets[0] == sets[1],
                      "cut sets differ between 1 and 4 threads on instance " +
                          std::to_string(i));
    }
    out.detail = "100 instances, threads {1,4}, cut-set equality";
    return out;
}

// --- criterion 8 ------------------------------------------------------------

Outcome criterion_performance() {
    Outcome out;
    Check check(&out);
    std::mt19937_64 rng(99);
    StaticGraph g = cluster_bridge_graph(2500, 40, 16, rng);
    auto start = std::chrono::steady_clock::now();
    PipelineResult res = find_all_mincuts(
        g, config_for(Variant::kFull, EdgeSelection::kHeavy, 1));
    out.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    check.require(out.seconds < 30.0, "exceeded the 30 s budget");
    check.require(res.lambda == 1, "cluster graph lambda != 1");
    check.require(
        res.kernel_vertices * 10 <= g.num_vertices(),
        "kernelization removed less than 90% of the vertices (left " +
            std::to_string(res.kernel_vertices) + ")");
    std::ostringstream os;
    os << "n=" << g.num_vertices() << " m=" << g.num_edges()
       << " kernel_n=" << res.kernel_vertices << " cuts="
       << res.cactus.count_min_cuts();
    if (!out.detail.empty()) {
        os << "; " << out.detail;
    }
    out.detail = os.str();
    return out;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, Outcome>> results;
    Outcome structural;  // criterion 9, fed by criteria 1-3
    Check structure(&structural);

    std::vector<CorpusGraph> corpus = make_corpus(1000, 20260810);

    results.emplace_back("oracle equivalence (1000 graphs x 7 variants x 4 "
                         "strategies)",
                         criterion_oracle_equivalence(corpus, structure));
    results.emplace_back("cycle count law", criterion_cycle_law(structure));
    results.emplace_back("tree law", criterion_tree_law(structure));
    results.emplace_back("balanced-cut and conductance oracle",
                         criterion_balance_oracle(corpus));
    results.emplace_back("cycle scan optimality and step bound",
                         criterion_cycle_scan());
    results.emplace_back("kernel rule safety",
                         criterion_kernel_safety(corpus));
    results.emplace_back("determinism across thread counts",
                         criterion_determinism_parallel());
    results.emplace_back("performance smoke", criterion_performance());
    if (structural.detail.empty()) {
        structural.detail = "checked on every instance of criteria 1-3";
    }
    results.emplace_back("structural invariants", structural);

    int failures = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& [name, outcome] = results[i];
        std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion "
                  << (i + 1) << ": " << name;
        if (!outcome.detail.empty()) {
            std::cout << " -- " << outcome.detail;
        }
        if (outcome.seconds > 0.0) {
            std::cout << " [" << outcome.seconds << " s]";
        }
        std::cout << "\n";
        failures += outcome.pass ? 0 : 1;
    }
    return failures;
}
