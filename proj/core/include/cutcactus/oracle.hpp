/******************************************************************************
 * oracle.hpp
 *
 * Part of cutcactus.
 *
 * Brute-force ground truth for tests: exhaustive enumeration of all
 * bipartitions on small graphs.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cutcactus/cactus.hpp"
#include "cutcactus/static_graph.hpp"

namespace cutcactus {

inline constexpr NodeId kOracleMaxVertices = 20;

/// All minimum cuts of a graph, each bipartition stored canonically as the
/// bitmask of the side containing vertex 0.
struct CutSet {
    EdgeWeight lambda = 0;
    std::vector<std::uint32_t> sides;  // sorted, unique

    bool contains(std::uint32_t side) const;
};

std::uint32_t canonical_side(std::uint32_t mask, NodeId n);

/// Enumerates all 2^(n-1) bipartitions. Requires 2 <= n <= 20.
CutSet brute_force_min_cuts(const StaticGraph& g);

/// Minimum weight over bipartitions separating s and t. Requires n <= 20.
EdgeWeight brute_force_st_cut(const StaticGraph& g, NodeId s, NodeId t);

struct VerifyReport {
    std::vector<std::uint32_t> missing;   // oracle cuts absent from cactus
    std::vector<std::uint32_t> spurious;  // cactus cuts absent from oracle
    std::vector<std::string> structural;  // invariant violations
    EdgeWeight oracle_lambda = 0;
    EdgeWeight cactus_lambda = 0;
    std::size_t cactus_cut_count = 0;

    bool ok() const {
        return missing.empty() && spurious.empty() && structural.empty() &&
               oracle_lambda == cactus_lambda;
    }
    std::string to_string() const;
};

/// Compares the cactus-derived cut set with brute force and checks the
/// structural invariants (partition of the original vertices, node bound
/// n* <= 2n, every represented cut has weight exactly lambda).
VerifyReport verify_cactus(const StaticGraph& g, const Cactus& cactus);

}  // namespace cutcactus
