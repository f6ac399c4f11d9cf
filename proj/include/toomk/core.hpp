#pragma once

// One recursion level's machinery: choose i and B, split an operand into
// its base-B chunk polynomial, evaluate at the points, solve the
// Vandermonde system exactly over the rationals, recompose at B.

#include <cstddef>
#include <vector>

#include "toomk/numeric.hpp"
#include "toomk/params.hpp"

namespace toomk {

// Length-k coefficient vector over Natural; index j holds the chunk that
// multiplies u^j. Every coefficient is < B for the B used to split.
struct SplitPolynomial {
    std::vector<Natural> coefficients;

    bool operator==(const SplitPolynomial&) const = default;
};

using RationalVector = std::vector<Rational>;

// Dense square matrix; rows indexed by points, columns by powers 0..n-1.
class RationalMatrix {
public:
    explicit RationalMatrix(std::size_t n) : n_(n), cells_(n * n) {}

    std::size_t size() const noexcept { return n_; }
    Rational& at(std::size_t row, std::size_t col) { return cells_[row * n_ + col]; }
    const Rational& at(std::size_t row, std::size_t col) const { return cells_[row * n_ + col]; }
    void swap_rows(std::size_t a, std::size_t b);

private:
    std::size_t n_;
    std::vector<Rational> cells_;
};

// i = max(ceil(dx/kx), ceil(dy/ky)), ceilings realized as (d + k - 1) / k.
std::size_t compute_i(const ToomConfig& config, std::size_t x_digits, std::size_t y_digits);
std::size_t compute_i(const ToomConfig& config, const Natural& x, const Natural& y);

// B = base^i.
Natural compute_B(const ToomConfig& config, std::size_t i);

// coefficients[j] = floor(z / B^j) mod B for j in [0, k). Total in z;
// evaluating at B reconstructs z whenever z < B^k. Requires B >= 1.
SplitPolynomial split(const Natural& z, std::size_t k, const Natural& B);

// Same contract for B = base^i, taking z already converted to base-b
// digits: chunk j is the digit slice [j*i, (j+1)*i).
SplitPolynomial split_digits(const DigitVector& z_digits, std::size_t k, std::size_t i);

// Horner evaluation of the chunk polynomial at an integer point.
SignedInt eval_poly(const SplitPolynomial& poly, const SignedInt& point);

// Entry (row, col) = points[row]^col.
RationalMatrix vandermonde(const std::vector<SignedInt>& points);

// The unique r with V r = w, solved exactly (Gaussian elimination with
// first-nonzero pivoting; over an exact field the pivot choice is a
// correctness non-issue). Throws SingularMatrixError, which signals a
// points-distinctness violation upstream.
RationalVector interpolate(const std::vector<SignedInt>& points, const std::vector<SignedInt>& w);

// interpolate with the elimination factored out: the points (hence V, its
// pivot order and row factors) are recursion-invariant, so the multiplier
// factorizes once per call tree and back-substitutes per node. Exact; agrees
// with interpolate() bit-for-bit.
class VandermondeSolver {
public:
    explicit VandermondeSolver(const std::vector<SignedInt>& points);  // throws SingularMatrixError

    std::size_t size() const noexcept { return permutation_.size(); }
    RationalVector solve(const std::vector<SignedInt>& w) const;

private:
    std::vector<std::size_t> permutation_;  // row order after pivoting
    RationalMatrix lower_;                  // elimination factors, permuted arrangement
    RationalMatrix upper_;                  // echelon form for back substitution
};

// sum_j r[j] * B^j, exact.
Rational recompose(const RationalVector& r, const Natural& B);

}  // namespace toomk
