/******************************************************************************
 * min_cut_value.hpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#pragma once

#include <vector>

#include "cutcactus/static_graph.hpp"

namespace cutcactus {

struct MinCutResult {
    EdgeWeight lambda = 0;
    /// One side of a cut achieving lambda, as vertex ids of the input graph.
    std::vector<NodeId> witness_side;
    /// Set when the input was disconnected; lambda is 0 and the witness is
    /// one connected component.
    bool disconnected = false;
};

/// Exact global minimum cut value via repeated certificate passes that
/// contract all edges certified at or above the current bound. Only the
/// value is needed downstream, so contraction at equality is allowed here.
MinCutResult exact_min_cut(const StaticGraph& g);

}  // namespace cutcactus
