#pragma once

// The recursive multiplication: threshold-gated schoolbook base case,
// absolute-value recursion with sign XOR, exact rational interpolation,
// integrality restoration. Reentrant; no global state.

#include <cstddef>

#include "toomk/core.hpp"
#include "toomk/numeric.hpp"
#include "toomk/params.hpp"
#include "toomk/trace.hpp"

namespace toomk {

// P = digit_count(base, max(|x|, |y|)).
ProblemSize problem_size(const ToomConfig& config, const SignedInt& x, const SignedInt& y);

// Negates magnitude_result iff exactly one operand was negative.
SignedInt sign_combine(bool neg_a, bool neg_b, SignedInt magnitude_result);

// Returns exactly x*y. Throws NonIntegralResultError if an interpolated
// value carries a denominator != 1 -- an internal invariant violation,
// never silently rounded.
SignedInt multiply(const ToomConfig& config, const SignedInt& x, const SignedInt& y);

namespace detail {

// The one recursion body behind multiply, trace_multiply and the node
// counters. `node` and `counter` are optional observers; with both null
// the control flow is byte-identical to the plain multiply.
SignedInt multiply_impl(const ToomConfig& config, const SignedInt& x, const SignedInt& y,
                        TraceNode* node, std::size_t* counter, std::size_t depth);

}  // namespace detail

}  // namespace toomk
