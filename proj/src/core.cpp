#include "toomk/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "toomk/errors.hpp"

namespace toomk {

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t col = 0; col < n_; ++col) {
        std::swap(cells_[a * n_ + col], cells_[b * n_ + col]);
    }
}

std::size_t compute_i(const ToomConfig& config, std::size_t x_digits, std::size_t y_digits) {
    const std::size_t ix = (x_digits + config.kx() - 1) / config.kx();
    const std::size_t iy = (y_digits + config.ky() - 1) / config.ky();
    return std::max(ix, iy);
}

std::size_t compute_i(const ToomConfig& config, const Natural& x, const Natural& y) {
    return compute_i(config, digit_count(config.base(), x), digit_count(config.base(), y));
}

Natural compute_B(const ToomConfig& config, std::size_t i) {
    return Natural::pow(Natural(config.base()), i);
}

SplitPolynomial split(const Natural& z, std::size_t k, const Natural& B) {
    if (B.is_zero()) throw std::invalid_argument("split: B must be >= 1");
    SplitPolynomial out;
    out.coefficients.reserve(k);
    Natural current = z;
    for (std::size_t j = 0; j < k; ++j) {
        auto [quotient, rem] = current.divmod(B);
        out.coefficients.push_back(std::move(rem));
        current = std::move(quotient);
    }
    return out;
}

SplitPolynomial split_digits(const DigitVector& z_digits, std::size_t k, std::size_t i) {
    SplitPolynomial out;
    out.coefficients.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        DigitVector chunk{z_digits.base, {}};
        const std::size_t begin = j * i;
        if (begin < z_digits.digits.size()) {
            const std::size_t end = std::min(begin + i, z_digits.digits.size());
            chunk.digits.assign(z_digits.digits.begin() + static_cast<std::ptrdiff_t>(begin),
                                z_digits.digits.begin() + static_cast<std::ptrdiff_t>(end));
            while (!chunk.digits.empty() && chunk.digits.back() == 0) chunk.digits.pop_back();
        }
        out.coefficients.push_back(from_digits(chunk));
    }
    return out;
}

SignedInt eval_poly(const SplitPolynomial& poly, const SignedInt& point) {
    SignedInt acc;
    for (std::size_t j = poly.coefficients.size(); j-- > 0;) {
        acc = acc * point + SignedInt(poly.coefficients[j]);
    }
    return acc;
}

RationalMatrix vandermonde(const std::vector<SignedInt>& points) {
    const std::size_t n = points.size();
    RationalMatrix matrix(n);
    for (std::size_t row = 0; row < n; ++row) {
        SignedInt power{Natural(1)};
        for (std::size_t col = 0; col < n; ++col) {
            matrix.at(row, col) = Rational(power);
            if (col + 1 < n) power = power * points[row];
        }
    }
    return matrix;
}

RationalVector interpolate(const std::vector<SignedInt>& points, const std::vector<SignedInt>& w) {
    if (points.size() != w.size()) {
        throw std::invalid_argument("interpolate: point/value length mismatch");
    }
    const std::size_t n = points.size();
    RationalMatrix matrix = vandermonde(points);
    RationalVector rhs(n);
    for (std::size_t row = 0; row < n; ++row) rhs[row] = Rational(w[row]);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && matrix.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) {
            throw SingularMatrixError("SingularMatrix: no pivot in column " + std::to_string(col) +
                                      "; evaluation points are not distinct");
        }
        if (pivot != col) {
            matrix.swap_rows(pivot, col);
            std::swap(rhs[pivot], rhs[col]);
        }
        for (std::size_t row = col + 1; row < n; ++row) {
            if (matrix.at(row, col).is_zero()) continue;
            const Rational factor = matrix.at(row, col) / matrix.at(col, col);
            for (std::size_t k = col; k < n; ++k) {
                matrix.at(row, k) = matrix.at(row, k) - factor * matrix.at(col, k);
            }
            rhs[row] = rhs[row] - factor * rhs[col];
        }
    }

    RationalVector result(n);
    for (std::size_t row = n; row-- > 0;) {
        Rational acc = rhs[row];
        for (std::size_t col = row + 1; col < n; ++col) {
            acc = acc - matrix.at(row, col) * result[col];
        }
        result[row] = acc / matrix.at(row, row);
    }
    return result;
}

VandermondeSolver::VandermondeSolver(const std::vector<SignedInt>& points)
    : lower_(points.size()), upper_(vandermonde(points)) {
    const std::size_t n = points.size();
    permutation_.resize(n);
    for (std::size_t row = 0; row < n; ++row) permutation_[row] = row;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && upper_.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) {
            throw SingularMatrixError("SingularMatrix: no pivot in column " + std::to_string(col) +
                                      "; evaluation points are not distinct");
        }
        if (pivot != col) {
            upper_.swap_rows(pivot, col);
            lower_.swap_rows(pivot, col);  // rows carry their factors with them
            std::swap(permutation_[pivot], permutation_[col]);
        }
        for (std::size_t row = col + 1; row < n; ++row) {
            if (upper_.at(row, col).is_zero()) continue;
            const Rational factor = upper_.at(row, col) / upper_.at(col, col);
            for (std::size_t k = col; k < n; ++k) {
                upper_.at(row, k) = upper_.at(row, k) - factor * upper_.at(col, k);
            }
            lower_.at(row, col) = factor;
        }
    }
}

RationalVector VandermondeSolver::solve(const std::vector<SignedInt>& w) const {
    const std::size_t n = size();
    if (w.size() != n) throw std::invalid_argument("VandermondeSolver: value length mismatch");
    RationalVector rhs(n);
    for (std::size_t row = 0; row < n; ++row) rhs[row] = Rational(w[permutation_[row]]);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t row = col + 1; row < n; ++row) {
            if (lower_.at(row, col).is_zero()) continue;
            rhs[row] = rhs[row] - lower_.at(row, col) * rhs[col];
        }
    }
    RationalVector result(n);
    for (std::size_t row = n; row-- > 0;) {
        Rational acc = std::move(rhs[row]);
        for (std::size_t col = row + 1; col < n; ++col) {
            acc = acc - upper_.at(row, col) * result[col];
        }
        result[row] = acc / upper_.at(row, row);
    }
    return result;
}

Rational recompose(const RationalVector& r, const Natural& B) {
    const Rational base{SignedInt(B)};
    Rational acc;
    for (std::size_t j = r.size(); j-- > 0;) {
        acc = acc * base + r[j];
    }
    return acc;
}

}  // namespace toomk
