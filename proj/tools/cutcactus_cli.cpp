/******************************************************************************
 * cutcactus_cli.cpp
 *
 * Command line front end: computes minimum-cut cactus representations,
 * extracts balanced cuts, verifies against brute force on small graphs,
 * benchmarks the pipeline stages and generates instance ladders.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cutcactus/balance.hpp"
#include "cutcactus/graph_io.hpp"
#include "cutcactus/instance_gen.hpp"
#include "cutcactus/oracle.hpp"
#include "cutcactus/pipeline.hpp"

namespace {

using namespace cutcactus;

constexpr int kExitOk = 0;
constexpr int kExitCompute = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;
constexpr int kExitUsage = 4;

struct CommonOpts {
    std::string input;
    std::string output;
    std::string format = "metis";
    std::string strategy = "heavy";
    std::string variant = "full";
    std::string objective = "balance";
    std::uint64_t seed = 0;
    unsigned threads = 1;
    double threshold = 0.01;
    bool largest_component = true;
    bool require_connected = false;
    int depth = 3;
    bool conductance_flag = false;
};

void add_common(CLI::App* cmd, CommonOpts* opts, bool needs_output) {
    cmd->add_option("-i,--input", opts->input, "input graph file")
        ->required();
    if (needs_output) {
        cmd->add_option("-o,--output", opts->output, "output file");
    }
    cmd->add_option("--format", opts->format, "graph format")
        ->check(CLI::IsMember({"metis", "dimacs", "edgelist"}));
    cmd->add_option("--strategy", opts->strategy, "flow edge selection")
        ->check(CLI::IsMember(
            {"random", "central", "heavy", "weightedheavy"}));
    cmd->add_option("--variant", opts->variant, "feature ladder variant")
        ->check(CLI::IsMember({"basic", "connectivity", "local", "degreeone",
                               "clin", "d1in", "full"}));
    cmd->add_option("--seed", opts->seed, "random seed");
    cmd->add_option("--threads", opts->threads, "kernelization threads");
    cmd->add_option("--threshold", opts->threshold,
                    "kernel convergence threshold");
    cmd->add_flag("--largest-component,!--require-connected",
                  opts->largest_component,
                  "run on the largest component (default) or fail on "
                  "disconnected input");
}

RunConfig make_config(const CommonOpts& opts) {
    RunConfig cfg;
    if (!parse_variant(opts.variant, &cfg.variant)) {
        throw CLI::ValidationError("unknown variant " + opts.variant);
    }
    if (opts.strategy == "random") {
        cfg.strategy = EdgeSelection::kRandom;
    } else if (opts.strategy == "central") {
        cfg.strategy = EdgeSelection::kCentral;
    } else if (opts.strategy == "weightedheavy") {
        cfg.strategy = EdgeSelection::kWeightedHeavy;
    } else {
        cfg.strategy = EdgeSelection::kHeavy;
    }
    cfg.seed = opts.seed;
    cfg.threads = opts.threads;
    cfg.convergence_threshold = opts.threshold;
    return cfg;
}

/// Extracts the largest connected component with remapped vertex ids.
StaticGraph largest_component(const StaticGraph& g) {
    auto [comp, k] = connected_components(g);
    if (k <= 1) {
        return g;
    }
    std::vector<std::size_t> sizes(k, 0);
    for (NodeId v = 0; v < g.num_vertices(); ++v) {
        sizes[comp[v]]++;
    }
    NodeId best = 0;
    for (NodeId c = 1; c < k; ++c) {
        if (sizes[c] > sizes[best]) {
            best = c;
        }
    }
    std::vector<NodeId> remap(g.num_vertices(), kInvalidNode);
    NodeId next = 0;
    for (NodeId v = 0; v < g.num_vertices(); ++v) {
        if (comp[v] == best) {
            remap[v] = next++;
        }
    }
    std::vector<WeightedEdge> edges;
    for (std::size_t a = 0; a < g.num_arcs(); ++a) {
        NodeId u = g.arc_source(a);
        NodeId v = g.arc_target(a);
        if (u < v && comp[u] == best) {
            edges.push_back({remap[u], remap[v], g.arc_weight(a)});
        }
    }
    std::cerr << "warning: input has " << k
              << " components; running on the largest (n=" << next << ")\n";
    return StaticGraph::from_edges(edges, next);
}

StaticGraph load_graph(const CommonOpts& opts) {
    StaticGraph g = parse_graph_file(opts.input, opts.format);
    if (g.num_vertices() == 0) {
        throw std::runtime_error("empty graph");
    }
    if (g.connected()) {
        return g;
    }
    if (!opts.largest_component) {
        throw std::runtime_error(
            "input graph is disconnected (--require-connected)");
    }
    return largest_component(g);
}

int run_cactus(const CommonOpts& opts) {
    StaticGraph g = load_graph(opts);
    PipelineResult res = find_all_mincuts(g, make_config(opts));
    std::cout << "n=" << g.num_vertices() << " m=" << g.num_edges()
              << " lambda=" << res.lambda
              << " cactus_nodes=" << res.cactus.num_nodes()
              << " min_cuts=" << res.cactus.count_min_cuts() << "\n";
    if (!opts.output.empty()) {
        write_cactus_file(res.cactus, opts.output);
    } else {
        write_cactus(res.cactus, std::cout);
    }
    return kExitOk;
}

int run_balanced(const CommonOpts& opts) {
    StaticGraph g = load_graph(opts);
    PipelineResult res = find_all_mincuts(g, make_config(opts));
    CutSelection sel = most_balanced_cut(res.cactus, g.num_vertices());
    if (!sel.found) {
        std::cout << "lambda=" << res.lambda << " no cut (single vertex)\n";
        return kExitOk;
    }
    std::cout << "lambda=" << res.lambda << " balance=" << sel.objective
              << "\nside:";
    std::vector<NodeId> side = sel.side;
    std::sort(side.begin(), side.end());
    for (NodeId v : side) {
        std::cout << ' ' << v;
    }
    std::cout << "\n";
    return kExitOk;
}

int run_objective(const CommonOpts& opts) {
    StaticGraph g = load_graph(opts);
    PipelineResult res = find_all_mincuts(g, make_config(opts));
    bool conductance =
        opts.conductance_flag || opts.objective == "conductance";
    CutObjective obj = conductance
                           ? conductance_objective(res.cactus, g)
                           : balance_objective(res.cactus);
    CutSelection sel = best_cut_by_objective(res.cactus, obj);
    if (!sel.found) {
        std::cout << "lambda=" << res.lambda << " no cut (single vertex)\n";
        return kExitOk;
    }
    std::cout << "lambda=" << res.lambda << " objective="
              << (conductance ? "conductance" : "balance")
              << " lighter_side_weight=" << sel.objective;
    if (conductance) {
        std::cout << " conductance=" << res.lambda << '/' << sel.objective;
    }
    std::cout << "\nside:";
    std::vector<NodeId> side = sel.side;
    std::sort(side.begin(), side.end());
    for (NodeId v : side) {
        std::cout << ' ' << v;
    }
    std::cout << "\n";
    return kExitOk;
}

int run_verify(const CommonOpts& opts) {
    StaticGraph g = load_graph(opts);
    if (g.num_vertices() > kOracleMaxVertices) {
        std::cerr << "verify requires at most " << kOracleMaxVertices
                  << " vertices\n";
        return kExitUsage;
    }
    PipelineResult res = find_all_mincuts(g, make_config(opts));
    VerifyReport report = verify_cactus(g, res.cactus);
    std::cout << report.to_string() << "\n";
    return report.ok() ? kExitOk : kExitVerify;
}

int run_bench(const CommonOpts& opts) {
    StaticGraph g = load_graph(opts);
    for (const char* name :
         {"basic", "connectivity", "local", "degreeone", "clin", "d1in",
          "full"}) {
        CommonOpts o = opts;
        o.variant = name;
        RunConfig cfg = make_config(o);
        auto start = std::chrono::steady_clock::now();
        PipelineResult res = find_all_mincuts(g, cfg);
        double total =
            std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - start)
                .count();
        for (const StageRecord& s : res.stages) {
            std::cout << "STAGE variant=" << name << " stage=" << s.name
                      << " n_in=" << s.vertices_in
                      << " n_out=" << s.vertices_out << " ms="
                      << s.milliseconds << "\n";
        }
        std::cout << "RESULT variant=" << name << " lambda=" << res.lambda
                  << " kernel_n=" << res.kernel_vertices
                  << " cactus_nodes=" << res.cactus.num_nodes()
                  << " min_cuts=" << res.cactus.count_min_cuts()
                  << " ms=" << total << "\n";
    }
    return kExitOk;
}

int run_generate(const CommonOpts& opts) {
    StaticGraph g = load_graph(opts);
    std::string prefix = opts.output.empty() ? opts.input : opts.output;
    auto ladder = generate_instances(g, opts.depth, make_config(opts));
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        std::string path = prefix + "." + std::to_string(i + 1) + ".metis";
        write_metis_file(ladder[i], path);
        std::cout << "wrote " << path << " n=" << ladder[i].num_vertices()
                  << " m=" << ladder[i].num_edges() << "\n";
    }
    return kExitOk;
}

int run_echo(const CommonOpts& opts) {
    StaticGraph g = parse_graph_file(opts.input, opts.format);
    if (!opts.output.empty()) {
        write_metis_file(g, opts.output);
    } else {
        write_metis(g, std::cout);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum cut cactus toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    CLI::App* cactus = app.add_subcommand(
        "cactus", "compute the cactus of all minimum cuts");
    add_common(cactus, &opts, true);
    CLI::App* balanced = app.add_subcommand(
        "balanced", "most balanced minimum cut");
    add_common(balanced, &opts, false);
    CLI::App* objective = app.add_subcommand(
        "objective", "best minimum cut under an objective");
    add_common(objective, &opts, false);
    objective->add_option("--objective", opts.objective, "objective")
        ->check(CLI::IsMember({"balance", "conductance"}));
    objective->add_flag("--conductance", opts.conductance_flag,
                        "shorthand for --objective conductance");
    CLI::App* verify = app.add_subcommand(
        "verify", "compare against brute force (small graphs)");
    add_common(verify, &opts, false);
    CLI::App* bench = app.add_subcommand(
        "bench", "per-stage timings across the feature ladder");
    add_common(bench, &opts, false);
    CLI::App* generate = app.add_subcommand(
        "generate", "emit the largest-block instance ladder");
    add_common(generate, &opts, true);
    generate->add_option("--depth", opts.depth, "ladder steps");
    CLI::App* echo = app.add_subcommand(
        "echo", "parse a graph and write it back in adjacency format");
    add_common(echo, &opts, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(cactus)) {
            return run_cactus(opts);
        }
        if (app.got_subcommand(balanced)) {
            return run_balanced(opts);
        }
        if (app.got_subcommand(objective)) {
            return run_objective(opts);
        }
        if (app.got_subcommand(verify)) {
            return run_verify(opts);
        }
        if (app.got_subcommand(bench)) {
            return run_bench(opts);
        }
        if (app.got_subcommand(generate)) {
            return run_generate(opts);
        }
        if (app.got_subcommand(echo)) {
            return run_echo(opts);
        }
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
    return kExitUsage;
}
