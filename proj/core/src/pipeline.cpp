/******************************************************************************
 * pipeline.cpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#include "cutcactus/pipeline.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

#include "cutcactus/dynamic_graph.hpp"
#include "cutcactus/kernel.hpp"
#include "cutcactus/min_cut_value.hpp"

namespace cutcactus {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::kBasic: return "basic";
        case Variant::kConnectivity: return "connectivity";
        case Variant::kLocal: return "local";
        case Variant::kDegreeOne: return "degreeone";
        case Variant::kKernelInRecursion: return "clin";
        case Variant::kDegreeOneInRecursion: return "d1in";
        case Variant::kFull: return "full";
    }
    return "?";
}

bool parse_variant(const std::string& name, Variant* out) {
    for (Variant v :
         {Variant::kBasic, Variant::kConnectivity, Variant::kLocal,
          Variant::kDegreeOne, Variant::kKernelInRecursion,
          Variant::kDegreeOneInRecursion, Variant::kFull}) {
        if (name == variant_name(v)) {
            *out = v;
            return true;
        }
    }
    return false;
}

namespace {

class StageTimer {
 public:
    StageTimer(std::vector<StageRecord>* stages, std::string name, NodeId in)
        : stages_(stages),
          record_{std::move(name), in, in, 0.0},
          start_(std::chrono::steady_clock::now()) {}

    void finish(NodeId out) {
        record_.vertices_out = out;
        record_.milliseconds =
            std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - start_)
                .count();
        stages_->push_back(record_);
    }

 private:
    std::vector<StageRecord>* stages_;
    StageRecord record_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

PipelineResult find_all_mincuts(const StaticGraph& g, const RunConfig& cfg) {
    if (g.num_vertices() == 0) {
        throw std::invalid_argument("find_all_mincuts on empty graph");
    }
    PipelineResult result;
    if (g.num_vertices() == 1) {
        result.cactus = Cactus(1);
        result.cactus.add_node({0});
        result.kernel_vertices = 1;
        return result;
    }
    if (!g.connected()) {
        throw std::invalid_argument(
            "find_all_mincuts requires a connected graph");
    }

    bool kernel_on = cfg.variant >= Variant::kConnectivity;

    StaticGraph kernel;
    KernelState state;
    {
        StageTimer timer(&result.stages, "kernelize", g.num_vertices());
        if (kernel_on) {
            KernelOptions opt;
            opt.use_connectivity = true;
            opt.use_local = cfg.variant >= Variant::kLocal;
            opt.use_degree_one = cfg.variant >= Variant::kDegreeOne;
            opt.convergence_threshold = cfg.convergence_threshold;
            opt.threads = cfg.threads;
            opt.seed = cfg.seed;
            opt.estimator_rounds = cfg.estimator_rounds;
            KernelResult kr = kernelize(g, opt);
            kernel = std::move(kr.graph);
            state = std::move(kr.state);
        } else {
            kernel = g;
            state.groups.resize(g.num_vertices());
            for (NodeId v = 0; v < g.num_vertices(); ++v) {
                state.groups[v] = {v};
            }
            state.lambda_hat = min_weighted_degree(g).second;
        }
        timer.finish(kernel.num_vertices());
    }
    result.kernel_vertices = kernel.num_vertices();

    EdgeWeight lambda;
    {
        StageTimer timer(&result.stages, "min_cut_value",
                         kernel.num_vertices());
        if (kernel.num_vertices() <= 1) {
            // All cuts are trivial cuts captured by the degree-one stack.
            lambda = state.lambda_hat;
        } else {
            MinCutResult mc = exact_min_cut(kernel);
            check_internal(!mc.disconnected, "kernel disconnected");
            lambda = mc.lambda;
        }
        timer.finish(kernel.num_vertices());
    }
    check_internal(lambda <= state.lambda_hat, "upper bound below exact cut");

    Cactus cactus;
    {
        StageTimer timer(&result.stages, "recursive_cactus",
                         kernel.num_vertices());
        if (kernel.num_vertices() == 1) {
            cactus = Cactus(g.num_vertices());
            cactus.add_node(std::move(state.groups[0]));
        } else {
            DynamicGraph dyn(kernel, std::move(state.groups),
                             g.num_vertices());
            SelectionStrategy strategy{cfg.strategy,
                                       std::mt19937_64(cfg.seed)};
            RecursionHooks hooks;
            hooks.kernel_inside =
                cfg.variant >= Variant::kKernelInRecursion;
            hooks.kernel_cadence = cfg.rekernel_cadence;
            hooks.degree_one = cfg.variant >= Variant::kDegreeOneInRecursion;
            hooks.degree_two = cfg.variant >= Variant::kFull;
            cactus = recursive_cactus(std::move(dyn), lambda, strategy,
                                      hooks);
        }
        timer.finish(cactus.num_nodes());
    }

    {
        StageTimer timer(&result.stages, "reinsert_degree_one",
                         cactus.num_nodes());
        reinsert_degree_one(cactus, state.degree_one_stack, lambda);
        cactus.normalize();
        cactus.compact();
        timer.finish(cactus.num_nodes());
    }

    cactus.set_lambda(lambda);
    result.cactus = std::move(cactus);
    result.lambda = lambda;
    return result;
}

}  // namespace cutcactus
