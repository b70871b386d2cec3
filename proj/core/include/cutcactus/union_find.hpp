/******************************************************************************
 * union_find.hpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#pragma once

#include <atomic>
#include <memory>

#include "cutcactus/types.hpp"

namespace cutcactus {

/// Disjoint sets over vertex ids. unite() and find() may be called from
/// multiple threads concurrently; roots are linked by CAS and classes are
/// always represented by their smallest member, so the final partition only
/// depends on the set of unite calls, not on their interleaving.
class UnionFind {
 public:
    explicit UnionFind(NodeId n) : n_(n), parent_(new std::atomic<NodeId>[n]) {
        for (NodeId i = 0; i < n; ++i) {
            parent_[i].store(i, std::memory_order_relaxed);
        }
    }

    NodeId size() const { return n_; }

    NodeId find(NodeId x) {
        while (true) {
            NodeId p = parent_[x].load(std::memory_order_relaxed);
            if (p == x) {
                return x;
            }
            NodeId gp = parent_[p].load(std::memory_order_relaxed);
            if (gp != p) {
                // Path halving; losing the race only costs a retry.
                parent_[x].compare_exchange_weak(p, gp,
                                                 std::memory_order_relaxed);
            }
            x = gp;
        }
    }

    /// Merges the classes of a and b. Returns true iff they were distinct.
    bool unite(NodeId a, NodeId b) {
        while (true) {
            NodeId ra = find(a);
            NodeId rb = find(b);
            if (ra == rb) {
                return false;
            }
            if (ra < rb) {
                std::swap(ra, rb);
            }
            // Link the larger root under the smaller one.
            NodeId expected = ra;
            if (parent_[ra].compare_exchange_strong(
                    expected, rb, std::memory_order_relaxed)) {
                return true;
            }
        }
    }

 private:
    NodeId n_;
    std::unique_ptr<std::atomic<NodeId>[]> parent_;
};

}  // namespace cutcactus
