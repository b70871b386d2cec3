/******************************************************************************
 * types.hpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace cutcactus {

using NodeId = std::uint32_t;
using EdgeWeight = std::uint64_t;

inline constexpr NodeId kInvalidNode = std::numeric_limits<NodeId>::max();
inline constexpr EdgeWeight kInfiniteWeight =
    std::numeric_limits<EdgeWeight>::max();

// Internal consistency violations throw in every build type. They indicate a
// bug in this library, not bad user input.
inline void check_internal(bool cond, const char* what) {
    if (!cond) {
        throw std::logic_error(std::string("internal error: ") + what);
    }
}

inline EdgeWeight checked_weight_add(EdgeWeight a, EdgeWeight b) {
    EdgeWeight r = a + b;
    if (r < a) {
        throw std::overflow_error("edge weight overflow on merge");
    }
    return r;
}

}  // namespace cutcactus
