#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cutcactus/balance.hpp"
#include "cutcactus/instance_gen.hpp"
#include "cutcactus/oracle.hpp"
#include "cutcactus/pipeline.hpp"
#include "test_support.hpp"

using namespace cutcactus;

namespace {

RunConfig full_config() {
    RunConfig cfg;
    cfg.seed = 1;
    return cfg;
}

// Exhaustive check over all contiguous splits of a cycle weight vector.
EdgeWeight best_contiguous_split(const std::vector<EdgeWeight>& w,
                                 EdgeWeight total) {
    std::size_t n = w.size();
    EdgeWeight best = 0;
    for (std::size_t start = 0; start < n; ++start) {
        EdgeWeight side = 0;
        for (std::size_t len = 1; len < n; ++len) {
            side += w[(start + len - 1) % n];
            best = std::max(best, std::min(side, total - side));
        }
    }
    return best;
}

EdgeWeight oracle_best_balance(const StaticGraph& g) {
    CutSet cs = brute_force_min_cuts(g);
    NodeId n = g.num_vertices();
    EdgeWeight best = 0;
    for (std::uint32_t mask : cs.sides) {
        EdgeWeight k = static_cast<EdgeWeight>(__builtin_popcount(mask));
        best = std::max(best, std::min(k, static_cast<EdgeWeight>(n) - k));
    }
    return best;
}

EdgeWeight oracle_best_conductance_side(const StaticGraph& g) {
    CutSet cs = brute_force_min_cuts(g);
    NodeId n = g.num_vertices();
    EdgeWeight best = 0;
    for (std::uint32_t mask : cs.sides) {
        EdgeWeight side = 0;
        EdgeWeight total = 0;
        for (NodeId v = 0; v < n; ++v) {
            total += g.weighted_degree(v);
            if ((mask >> v) & 1u) {
                side += g.weighted_degree(v);
            }
        }
        best = std::max(best, std::min(side, total - side));
    }
    return best;
}

}  // namespace

TEST_CASE("balance_in_cycle on fixed vectors") {
    SUBCASE("even unit cycle") {
        CycleScanResult r = balance_in_cycle({1, 1, 1, 1, 1, 1}, 6);
        CHECK(r.found);
        CHECK(r.best_score == 3);
    }
    SUBCASE("skewed cycle") {
        CycleScanResult r = balance_in_cycle({5, 1, 1, 1}, 8);
        CHECK(r.best_score == 3);
    }
    SUBCASE("triangle") {
        CycleScanResult r = balance_in_cycle({1, 1, 1}, 3);
        CHECK(r.best_score == 1);
    }
    SUBCASE("too short") {
        CHECK_THROWS_AS(balance_in_cycle({1, 2}, 3), std::invalid_argument);
    }
}

TEST_CASE("balance_in_cycle equals exhaustive enumeration within 3i steps") {
    std::mt19937_64 rng(79);
    for (int iter = 0; iter < 2000; ++iter) {
        std::size_t n = 3 + rng() % 18;
        std::vector<EdgeWeight> w(n);
        EdgeWeight total = 0;
        for (auto& x : w) {
            x = 1 + rng() % 20;
            total += x;
        }
        CycleScanResult r = balance_in_cycle(w, total);
        CHECK(r.best_score == best_contiguous_split(w, total));
        CHECK(r.dequeues <= 3 * n);
        // The reported arc realizes the reported balance.
        EdgeWeight side = 0;
        for (std::uint32_t j = 0; j < r.arc_len; ++j) {
            side += w[(r.arc_start + j) % n];
        }
        CHECK(std::min(side, total - side) == r.best_score);
    }
}

TEST_CASE("most balanced cut on fixed shapes") {
    SUBCASE("path picks the middle edge") {
        PipelineResult res = find_all_mincuts(path_graph(5), full_config());
        CutSelection sel = most_balanced_cut(res.cactus, 5);
        REQUIRE(sel.found);
        CHECK(sel.objective == 2);
        CHECK(sel.cut_edges.size() == 1);
    }
    SUBCASE("C6 splits in half") {
        PipelineResult res = find_all_mincuts(cycle_graph(6), full_config());
        CutSelection sel = most_balanced_cut(res.cactus, 6);
        REQUIRE(sel.found);
        CHECK(sel.objective == 3);
        CHECK(sel.cut_edges.size() == 2);
        CHECK(sel.side.size() == 3);
    }
    SUBCASE("star isolates one leaf") {
        PipelineResult res = find_all_mincuts(star_graph(4), full_config());
        CutSelection sel = most_balanced_cut(res.cactus, 5);
        REQUIRE(sel.found);
        CHECK(sel.objective == 1);
    }
    SUBCASE("single node cactus has no cut") {
        Cactus c(1);
        c.add_node({0});
        CutSelection sel = most_balanced_cut(c, 1);
        CHECK(!sel.found);
    }
}

TEST_CASE("conductance objective on fixed shapes") {
    SUBCASE("path") {
        StaticGraph g = path_graph(5);
        PipelineResult res = find_all_mincuts(g, full_config());
        CutSelection sel = best_cut_by_objective(
            res.cactus, conductance_objective(res.cactus, g));
        REQUIRE(sel.found);
        CHECK(sel.objective == 3);  // lighter side degree sum of the middle
    }
    SUBCASE("star") {
        StaticGraph g = star_graph(4);
        PipelineResult res = find_all_mincuts(g, full_config());
        CutSelection sel = best_cut_by_objective(
            res.cactus, conductance_objective(res.cactus, g));
        REQUIRE(sel.found);
        CHECK(sel.objective == 1);
    }
    SUBCASE("balance objective specializes most_balanced_cut") {
        StaticGraph g = cycle_graph(7);
        PipelineResult res = find_all_mincuts(g, full_config());
        CutSelection a = most_balanced_cut(res.cactus, 7);
        CutSelection b = best_cut_by_objective(
            res.cactus, balance_objective(res.cactus));
        REQUIRE(a.found);
        REQUIRE(b.found);
        CHECK(a.objective == b.objective);
        CHECK(a.cut_edges == b.cut_edges);
    }
}

TEST_CASE("balanced and conductance optima match brute force") {
    std::mt19937_64 rng(83);
    for (int iter = 0; iter < 120; ++iter) {
        NodeId n = 4 + rng() % 9;
        bool unit = rng() & 1;
        StaticGraph g = random_connected_graph(
            n, rng() % (2 * n), 1, unit ? 1 : 10, rng);
        PipelineResult res = find_all_mincuts(g, full_config());

        CutSelection sel = most_balanced_cut(res.cactus, n);
        REQUIRE(sel.found);
        CHECK(sel.objective == oracle_best_balance(g));
        // The returned bipartition is itself a minimum cut of the graph.
        CHECK(g.cut_weight(sel.in_side) == res.lambda);
        EdgeWeight side = sel.side.size();
        CHECK(std::min(side, static_cast<EdgeWeight>(n) - side) ==
              sel.objective);

        CutSelection cond = best_cut_by_objective(
            res.cactus, conductance_objective(res.cactus, g));
        REQUIRE(cond.found);
        CHECK(cond.objective == oracle_best_conductance_side(g));
        CHECK(g.cut_weight(cond.in_side) == res.lambda);
    }
}

TEST_CASE("enumerate counts follow the cycle law") {
    PipelineResult res = find_all_mincuts(cycle_graph(5), full_config());
    std::size_t seen = 0;
    res.cactus.for_each_min_cut(
        [&](const std::vector<NodeId>&) { ++seen; });
    CHECK(seen == 10);
    CHECK(res.cactus.count_min_cuts() == 10);

    PipelineResult tree =
        find_all_mincuts(path_graph(7), full_config());
    CHECK(tree.cactus.count_min_cuts() == 6);
}
