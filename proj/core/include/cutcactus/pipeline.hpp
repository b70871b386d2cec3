/******************************************************************************
 * pipeline.hpp
 *
 * Part of cutcactus.
 *
 * End-to-end driver: estimate an upper bound, kernelize, compute the exact
 * minimum cut value, run the recursive cactus construction and replay the
 * reinsertion records.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cutcactus/cactus.hpp"
#include "cutcactus/recursive_cactus.hpp"
#include "cutcactus/static_graph.hpp"

namespace cutcactus {

/// Cumulative feature ladder. Each variant enables everything below it.
enum class Variant : std::uint8_t {
    kBasic,         // recursive construction only
    kConnectivity,  // + connectivity-based kernel contraction
    kLocal,         // + local contraction rules
    kDegreeOne,     // + degree-one kernel contraction with reinsertion
    kKernelInRecursion,  // + connectivity/local every few recursion steps
    kDegreeOneInRecursion,  // + degree-one inside the recursion
    kFull,          // + degree-two inside the recursion
};

const char* variant_name(Variant v);
bool parse_variant(const std::string& name, Variant* out);

struct RunConfig {
    Variant variant = Variant::kFull;
    EdgeSelection strategy = EdgeSelection::kHeavy;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    double convergence_threshold = 0.01;
    unsigned rekernel_cadence = 10;
    int estimator_rounds = 3;
};

struct StageRecord {
    std::string name;
    NodeId vertices_in = 0;
    NodeId vertices_out = 0;
    double milliseconds = 0.0;
};

struct PipelineResult {
    Cactus cactus;
    EdgeWeight lambda = 0;
    NodeId kernel_vertices = 0;  // vertices entering the recursive core
    std::vector<StageRecord> stages;
};

/// Computes the cactus of all minimum cuts of a connected graph. Throws
/// std::invalid_argument on empty or disconnected input; a single-vertex
/// graph yields the one-node cactus with lambda 0.
PipelineResult find_all_mincuts(const StaticGraph& g, const RunConfig& cfg);

}  // namespace cutcactus
