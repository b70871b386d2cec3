/******************************************************************************
 * oracle.cpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#include "cutcactus/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cutcactus {

bool CutSet::contains(std::uint32_t side) const {
    return std::binary_search(sides.begin(), sides.end(), side);
}

std::uint32_t canonical_side(std::uint32_t mask, NodeId n) {
    std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
    if (mask & 1u) {
        return mask;
    }
    return full & ~mask;
}

namespace {

void require_oracle_size(const StaticGraph& g) {
    if (g.num_vertices() > kOracleMaxVertices) {
        throw std::invalid_argument("oracle limited to 20 vertices");
    }
}

EdgeWeight mask_cut_weight(const StaticGraph& g, std::uint32_t mask) {
    EdgeWeight w = 0;
    for (std::size_t a = 0; a < g.num_arcs(); ++a) {
        NodeId u = g.arc_source(a);
        NodeId v = g.arc_target(a);
        if (u < v && (((mask >> u) ^ (mask >> v)) & 1u)) {
            w += g.arc_weight(a);
        }
    }
    return w;
}

}  // namespace

CutSet brute_force_min_cuts(const StaticGraph& g) {
    require_oracle_size(g);
    NodeId n = g.num_vertices();
    if (n < 2) {
        throw std::invalid_argument("need at least two vertices");
    }
    CutSet out;
    out.lambda = kInfiniteWeight;
    // Vertex 0 always on the represented side: masks with bit 0 set.
    std::uint32_t half = 1u << (n - 1);
    for (std::uint32_t rest = 0; rest < half; ++rest) {
        std::uint32_t mask = (rest << 1) | 1u;
        std::uint32_t full = (1u << n) - 1u;
        if (mask == full) {
            continue;
        }
        EdgeWeight w = mask_cut_weight(g, mask);
        if (w < out.lambda) {
            out.lambda = w;
            out.sides.clear();
        }
        if (w == out.lambda) {
            out.sides.push_back(mask);
        }
    }
    std::sort(out.sides.begin(), out.sides.end());
    return out;
}

EdgeWeight brute_force_st_cut(const StaticGraph& g, NodeId s, NodeId t) {
    require_oracle_size(g);
    if (s == t) {
        throw std::invalid_argument("s and t must differ");
    }
    NodeId n = g.num_vertices();
    EdgeWeight best = kInfiniteWeight;
    std::uint32_t half = 1u << (n - 1);
    for (std::uint32_t rest = 0; rest < half; ++rest) {
        std::uint32_t mask = (rest << 1) | 1u;
        bool side_s = (mask >> s) & 1u;
        bool side_t = (mask >> t) & 1u;
        if (side_s == side_t) {
            continue;
        }
        best = std::min(best, mask_cut_weight(g, mask));
    }
    return best;
}

VerifyReport verify_cactus(const StaticGraph& g, const Cactus& cactus) {
    require_oracle_size(g);
    VerifyReport report;
    CutSet oracle = brute_force_min_cuts(g);
    report.oracle_lambda = oracle.lambda;
    report.cactus_lambda = cactus.lambda();

    NodeId n = g.num_vertices();
    if (cactus.num_originals() != n) {
        report.structural.push_back("original vertex count mismatch");
        return report;
    }
    try {
        cactus.check_valid();
    } catch (const std::exception& e) {
        report.structural.push_back(e.what());
    }
    if (cactus.num_nodes() > 2 * n) {
        report.structural.push_back("node count exceeds 2n");
    }

    std::set<std::uint32_t> seen;
    cactus.for_each_min_cut([&](const std::vector<NodeId>& side) {
        std::uint32_t mask = 0;
        for (NodeId v : side) {
            mask |= 1u << v;
        }
        mask = canonical_side(mask, n);
        if (mask_cut_weight(g, mask) != oracle.lambda) {
            std::ostringstream os;
            os << "represented cut 0x" << std::hex << mask
               << " has wrong weight";
            report.structural.push_back(os.str());
        }
        seen.insert(mask);
        report.cactus_cut_count++;
    });

    for (std::uint32_t m : oracle.sides) {
        if (!seen.count(m)) {
            report.missing.push_back(m);
        }
    }
    for (std::uint32_t m : seen) {
        if (!oracle.contains(m)) {
            report.spurious.push_back(m);
        }
    }
    return report;
}

std::string VerifyReport::to_string() const {
    std::ostringstream os;
    os << "lambda oracle=" << oracle_lambda << " cactus=" << cactus_lambda
       << " cuts=" << cactus_cut_count << " missing=" << missing.size()
       << " spurious=" << spurious.size()
       << " structural=" << structural.size();
    for (const auto& s : structural) {
        os << "\n  structural: " << s;
    }
    for (auto m : missing) {
        os << "\n  missing side mask 0x" << std::hex << m << std::dec;
    }
    for (auto m : spurious) {
        os << "\n  spurious side mask 0x" << std::hex << m << std::dec;
    }
    return os.str();
}

}  // namespace cutcactus
