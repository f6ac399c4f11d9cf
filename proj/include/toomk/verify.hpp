#pragma once

// Recursion tracing, runtime checking of the termination bounds on live
// traces, the one-level expander, node-count growth measurement, and the
// "toom-trace/1" JSON serialization.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "toomk/multiplier.hpp"
#include "toomk/params.hpp"
#include "toomk/trace.hpp"

namespace toomk {

inline constexpr std::string_view kTraceSchema = "toom-trace/1";

struct Violation {
    std::string check;
    std::string node_path;  // "root", "root/2", "root/2:p[0]", ...
    std::string observed;
    std::string bound;
};

struct CheckReport {
    std::string check_name;
    std::size_t checks_run = 0;
    std::vector<Violation> violations;
    std::size_t node_count = 0;
    std::size_t max_depth = 0;
    std::vector<std::size_t> max_p_per_depth;  // index = depth

    bool passed() const noexcept { return violations.empty(); }
};

// Product identical to multiply(); the trace records every call.
std::pair<SignedInt, TraceNode> trace_multiply(const ToomConfig& config, const SignedInt& x,
                                               const SignedInt& y);

// One split/evaluate level, unconditionally (ignores theta). Pair j is
// (p(v_j), q(v_j)) with signs intact.
std::vector<std::pair<SignedInt, SignedInt>> expand_once(const ToomConfig& config,
                                                         const SignedInt& x, const SignedInt& y);

// Every split coefficient e at a recursive node has digit_count(e) <= i.
CheckReport check_piece_bound(const TraceNode& root, const ToomConfig& config);

// Every child operand magnitude m has digit_count(m) <= floor(P/k_min) + c.
CheckReport check_eval_bounds(const TraceNode& root, const ToomConfig& config);

// Every parent->child edge with parent P > theta has child P < parent P.
CheckReport check_strict_decrease(const TraceNode& root, const ToomConfig& config);

// For every depth n in the trace, max-P-at-depth-n <= P0/k_min^n +
// sum_{j<n} c/k_min^j, compared exactly over rationals.
CheckReport check_depth_bound(const TraceNode& root, const ToomConfig& config);

// Recursion node count for one multiplication, without building a trace.
std::size_t count_multiply_nodes(const ToomConfig& config, const SignedInt& x, const SignedInt& y);

// Node-count ratio between operand sizes factor*n_digits and n_digits;
// near 2k-1 for balanced splits at large n. Deterministic given the seed.
Rational node_count_growth(const ToomConfig& config, std::size_t n_digits, std::size_t factor,
                           uint64_t seed);

nlohmann::json trace_to_json(const TraceNode& root, const SignedInt& product);

// Deterministic operand generators. Raw engine draws only (no
// std::uniform_int_distribution), so outputs are byte-identical across
// standard libraries.
Natural random_natural(std::mt19937_64& rng, uint64_t base, std::size_t digits);
SignedInt random_operand(std::mt19937_64& rng, uint64_t base, std::size_t max_digits);

}  // namespace toomk
