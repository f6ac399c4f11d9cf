#include "toomk/multiplier.hpp"

#include <string>
#include <vector>

#include "toomk/errors.hpp"

namespace toomk {

ProblemSize problem_size(const ToomConfig& config, const SignedInt& x, const SignedInt& y) {
    const Natural& larger = x.magnitude() >= y.magnitude() ? x.magnitude() : y.magnitude();
    return digit_count(config.base(), larger);
}

SignedInt sign_combine(bool neg_a, bool neg_b, SignedInt magnitude_result) {
    return neg_a != neg_b ? -magnitude_result : magnitude_result;
}

namespace detail {

namespace {

SignedInt multiply_rec(const ToomConfig& config, const VandermondeSolver& solver,
                       const SignedInt& x, const SignedInt& y, TraceNode* node,
                       std::size_t* counter, std::size_t depth) {
    if (counter != nullptr) ++*counter;

    const DigitVector x_digits = to_digits(config.base(), x.magnitude());
    const DigitVector y_digits = to_digits(config.base(), y.magnitude());
    const ProblemSize p = std::max(x_digits.digits.size(), y_digits.digits.size());

    if (node != nullptr) {
        node->depth = depth;
        node->x = x;
        node->y = y;
        node->problem = p;
    }

    if (config.base_case(p)) {
        if (node != nullptr) node->base_case = true;
        const DigitVector product = schoolbook_mul(x_digits, y_digits);
        return sign_combine(x.is_negative(), y.is_negative(), SignedInt(from_digits(product)));
    }

    const std::size_t i = compute_i(config, x_digits.digits.size(), y_digits.digits.size());
    const Natural b_power = compute_B(config, i);
    const SplitPolynomial p_poly = split_digits(x_digits, config.kx(), i);
    const SplitPolynomial q_poly = split_digits(y_digits, config.ky(), i);

    if (node != nullptr) {
        node->base_case = false;
        node->i = i;
        node->b_power = b_power;
        node->p_coeffs = p_poly;
        node->q_coeffs = q_poly;
        node->children.resize(config.num_points());
    }

    // Pointwise recursive products of |p(v)| * |q(v)|, re-signed by the
    // XOR of the factors' signs.
    std::vector<SignedInt> w(config.num_points());
    for (std::size_t index = 0; index < config.num_points(); ++index) {
        const SignedInt a = eval_poly(p_poly, config.points()[index]);
        const SignedInt b = eval_poly(q_poly, config.points()[index]);
        TraceNode* child = node != nullptr ? &node->children[index] : nullptr;
        if (child != nullptr) child->point_index = index;
        const SignedInt sub = multiply_rec(config, solver, SignedInt(a.magnitude()),
                                           SignedInt(b.magnitude()), child, counter, depth + 1);
        w[index] = sign_combine(a.is_negative(), b.is_negative(), sub);
    }

    const RationalVector r = solver.solve(w);
    for (std::size_t index = 0; index < r.size(); ++index) {
        if (!r[index].is_integral()) {
            throw NonIntegralResultError("NonIntegralResult: interpolated coefficient " +
                                         std::to_string(index) + " is " + r[index].to_string());
        }
    }
    const Rational recomposed = recompose(r, b_power);
    if (!recomposed.is_integral()) {
        throw NonIntegralResultError("NonIntegralResult: recomposed value " + recomposed.to_string());
    }
    return sign_combine(x.is_negative(), y.is_negative(), recomposed.num());
}

}  // namespace

SignedInt multiply_impl(const ToomConfig& config, const SignedInt& x, const SignedInt& y,
                        TraceNode* node, std::size_t* counter, std::size_t depth) {
    const VandermondeSolver solver(config.points());
    return multiply_rec(config, solver, x, y, node, counter, depth);
}

}  // namespace detail

SignedInt multiply(const ToomConfig& config, const SignedInt& x, const SignedInt& y) {
    return detail::multiply_impl(config, x, y, nullptr, nullptr, 0);
}

}  // namespace toomk
