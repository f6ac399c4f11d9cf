#pragma once

// Validated multiplication configuration (base, split sizes, evaluation
// points) and the derived termination constants v_max, C_x, C_y, C, k_min
// and theta.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "toomk/numeric.hpp"

namespace toomk {

// Problem size: base-b digit count of the larger operand magnitude. The
// recursion's termination measure.
using ProblemSize = std::size_t;

struct CConstants {
    std::size_t c_x = 0;
    std::size_t c_y = 0;
    std::size_t c = 0;  // max(c_x, c_y) + 1
};

// Immutable after validation; safe to share across threads.
class ToomConfig {
public:
    // The only construction gate: rejects base < 2, kx/ky < 2, wrong point
    // counts and duplicate points (ValidationError), then computes and
    // caches the derived constants once -- they depend only on
    // (base, kx, ky, points), never on the operands.
    static ToomConfig validate(uint64_t base, std::size_t kx, std::size_t ky,
                               std::vector<SignedInt> points);

    uint64_t base() const noexcept { return base_; }
    std::size_t kx() const noexcept { return kx_; }
    std::size_t ky() const noexcept { return ky_; }
    std::size_t k_min() const noexcept { return k_min_; }
    std::size_t num_points() const noexcept { return points_.size(); }
    const std::vector<SignedInt>& points() const noexcept { return points_; }

    const Natural& v_max() const noexcept { return v_max_; }
    std::size_t c_x() const noexcept { return constants_.c_x; }
    std::size_t c_y() const noexcept { return constants_.c_y; }
    std::size_t c() const noexcept { return constants_.c; }
    const Rational& theta() const noexcept { return theta_; }

    // Base-case predicate: P <= theta, decided exactly by cross
    // multiplication, never via a rounded threshold.
    bool base_case(ProblemSize p) const;

private:
    ToomConfig() = default;

    uint64_t base_ = 10;
    std::size_t kx_ = 2;
    std::size_t ky_ = 2;
    std::size_t k_min_ = 2;
    std::vector<SignedInt> points_;
    Natural v_max_;
    CConstants constants_;
    Rational theta_;
};

// max_i |v_i|; points must be nonempty.
Natural v_max_of(const std::vector<SignedInt>& points);

// c_x = digit_count(base, sum_{j<kx} v_max^j), c_y likewise over ky,
// c = max(c_x, c_y) + 1. Sums are exact naturals.
CConstants c_constants(uint64_t base, std::size_t kx, std::size_t ky, const Natural& v_max);

// theta = c * k_min / (k_min - 1), exact rational; requires k_min >= 2.
Rational theta_value(std::size_t c, std::size_t k_min);

// floor(P / k_min) + c: upper bound on any child problem size.
ProblemSize subproblem_bound(const ToomConfig& config, ProblemSize p);

}  // namespace toomk
