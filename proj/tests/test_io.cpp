#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "cutcactus/graph_io.hpp"
#include "cutcactus/instance_gen.hpp"
#include "cutcactus/oracle.hpp"
#include "cutcactus/pipeline.hpp"
#include "test_support.hpp"

using namespace cutcactus;

namespace {

StaticGraph parse_metis_string(const std::string& text) {
    std::istringstream in(text);
    return parse_metis(in);
}

std::string write_metis_string(const StaticGraph& g) {
    std::ostringstream out;
    write_metis(g, out);
    return out.str();
}

std::string write_cactus_string(const Cactus& c) {
    std::ostringstream out;
    write_cactus(c, out);
    return out.str();
}

}  // namespace

TEST_CASE("metis parsing") {
    SUBCASE("unit triangle") {
        StaticGraph g = parse_metis_string("3 3\n2 3\n1 3\n1 2\n");
        CHECK(g.num_vertices() == 3);
        CHECK(g.num_edges() == 3);
        for (std::size_t a = 0; a < g.num_arcs(); ++a) {
            CHECK(g.arc_weight(a) == 1);
        }
    }
    SUBCASE("weighted K2") {
        StaticGraph g = parse_metis_string("2 1 1\n2 7\n1 7\n");
        CHECK(g.num_vertices() == 2);
        CHECK(g.arc_weight(0) == 7);
    }
    SUBCASE("comments are skipped") {
        StaticGraph g =
            parse_metis_string("% c\n2 1\n% mid\n2\n1\n");
        CHECK(g.num_edges() == 1);
    }
    SUBCASE("asymmetric listing is an error naming the line") {
        try {
            parse_metis_string("3 2\n2\n1 3\n\n");
            CHECK(false);
        } catch (const std::runtime_error& e) {
            std::string what = e.what();
            CHECK(what.find("line") != std::string::npos);
            CHECK(what.find("one endpoint only") != std::string::npos);
        }
    }
    SUBCASE("asymmetric weight is an error") {
        CHECK_THROWS_AS(
            parse_metis_string("2 1 1\n2 7\n1 8\n"),
            std::runtime_error);
    }
    SUBCASE("malformed header") {
        CHECK_THROWS_AS(parse_metis_string("x y\n"), std::runtime_error);
    }
    SUBCASE("missing weight under fmt 1") {
        CHECK_THROWS_AS(parse_metis_string("2 1 1\n2\n1\n"),
                        std::runtime_error);
    }
}

TEST_CASE("metis round trip is the identity") {
    std::mt19937_64 rng(89);
    for (int iter = 0; iter < 20; ++iter) {
        NodeId n = 2 + rng() % 12;
        StaticGraph g = random_connected_graph(n, rng() % (2 * n), 1,
                                               (iter % 2) ? 5 : 1, rng);
        std::string once = write_metis_string(g);
        StaticGraph h = parse_metis_string(once);
        CHECK(write_metis_string(h) == once);
        CHECK(h.num_vertices() == g.num_vertices());
        CHECK(h.num_edges() == g.num_edges());
    }
}

TEST_CASE("dimacs and edge list readers") {
    {
        std::istringstream in(
            "c comment\np cut 3 3\ne 1 2 1\ne 2 3 1\ne 3 1 1\n");
        StaticGraph g = parse_dimacs(in);
        CHECK(g.num_vertices() == 3);
        CHECK(g.num_edges() == 3);
    }
    {
        std::istringstream in("# weighted path\n0 1 2\n1 2 2\n2 3 2\n");
        StaticGraph g = parse_edge_list(in);
        CHECK(g.num_vertices() == 4);
        CHECK(g.num_edges() == 3);
        CHECK(g.arc_weight(0) == 2);
    }
    {
        std::istringstream in("0 1\n1 2\n");
        StaticGraph g = parse_edge_list(in);
        CHECK(g.num_vertices() == 3);
        CHECK(g.num_edges() == 2);
    }
}

TEST_CASE("cactus serialization") {
    SUBCASE("K2") {
        RunConfig cfg;
        PipelineResult res = find_all_mincuts(
            StaticGraph::from_edges({{0, 1, 7}}, 2), cfg);
        CHECK(write_cactus_string(res.cactus) ==
              "2 1 7 1\n0 1 tree -\n0: 0\n1: 1\n");
    }
    SUBCASE("C3 has a three cycle header") {
        RunConfig cfg;
        PipelineResult res = find_all_mincuts(cycle_graph(3), cfg);
        std::string text = write_cactus_string(res.cactus);
        CHECK(text.substr(0, text.find('\n')) == "3 3 2 3");
        CHECK(text.find("cycle 0") != std::string::npos);
    }
    SUBCASE("single node") {
        Cactus c(1);
        c.add_node({0});
        CHECK(write_cactus_string(c) == "1 0 0 0\n0: 0\n");
    }
}

TEST_CASE("identical configuration gives byte-identical cactus files") {
    std::mt19937_64 rng(97);
    StaticGraph g = random_connected_graph(30, 45, 1, 4, rng);
    RunConfig cfg;
    cfg.seed = 12345;
    cfg.strategy = EdgeSelection::kRandom;
    PipelineResult a = find_all_mincuts(g, cfg);
    PipelineResult b = find_all_mincuts(g, cfg);
    CHECK(write_cactus_string(a.cactus) == write_cactus_string(b.cactus));
}

TEST_CASE("instance ladder shrinks and raises the cut") {
    SUBCASE("trees collapse to nothing") {
        std::mt19937_64 rng(101);
        StaticGraph g = random_tree(20, rng);
        RunConfig cfg;
        CHECK(generate_instances(g, 3, cfg).empty());
    }
    SUBCASE("two triangles with a bridge leave one triangle") {
        StaticGraph g = StaticGraph::from_edges(
            {{0, 1, 1}, {1, 2, 1}, {2, 0, 1},
              {3, 4, 1}, {4, 5, 1}, {5, 3, 1}, {2, 3, 1}},
            6);
        RunConfig cfg;
        auto ladder = generate_instances(g, 1, cfg);
        REQUIRE(ladder.size() == 1);
        CHECK(ladder[0].num_vertices() == 3);
        CHECK(brute_force_min_cuts(ladder[0]).lambda == 2);
    }
    SUBCASE("cycles collapse to nothing") {
        RunConfig cfg;
        CHECK(generate_instances(cycle_graph(8), 1, cfg).empty());
    }
}
