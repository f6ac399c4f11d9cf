#pragma once

// One recursion-tree node per multiply call, as recorded by trace_multiply.
// Completed traces are immutable and shareable; the checkers consume them
// instead of instrumenting the multiplier.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "toomk/core.hpp"
#include "toomk/numeric.hpp"
#include "toomk/params.hpp"

namespace toomk {

struct TraceNode {
    std::size_t depth = 0;
    SignedInt x;  // operands as received
    SignedInt y;
    ProblemSize problem = 0;
    bool base_case = true;

    // recursive nodes only
    std::size_t i = 0;
    Natural b_power;  // B = base^i
    SplitPolynomial p_coeffs;
    SplitPolynomial q_coeffs;

    std::optional<std::size_t> point_index;  // absent on the root
    std::vector<TraceNode> children;         // one per point when recursive

    std::size_t count_nodes() const {
        std::size_t total = 1;
        for (const TraceNode& child : children) total += child.count_nodes();
        return total;
    }

    std::size_t max_depth() const {
        std::size_t deepest = depth;
        for (const TraceNode& child : children) deepest = std::max(deepest, child.max_depth());
        return deepest;
    }
};

}  // namespace toomk
