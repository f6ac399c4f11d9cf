#include "toomk/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace toomk {

namespace {

Rational rational_of(std::size_t value) { return Rational(SignedInt(Natural(value))); }

void walk(const TraceNode& node, const std::string& path,
          const std::function<void(const TraceNode&, const std::string&)>& fn) {
    fn(node, path);
    for (std::size_t index = 0; index < node.children.size(); ++index) {
        walk(node.children[index], path + "/" + std::to_string(index), fn);
    }
}

CheckReport make_report(std::string name, const TraceNode& root) {
    CheckReport report;
    report.check_name = std::move(name);
    report.node_count = root.count_nodes();
    report.max_depth = root.max_depth();
    report.max_p_per_depth.assign(report.max_depth + 1, 0);
    walk(root, "root", [&](const TraceNode& node, const std::string&) {
        auto& slot = report.max_p_per_depth[node.depth];
        slot = std::max(slot, node.problem);
    });
    return report;
}

}  // namespace

std::pair<SignedInt, TraceNode> trace_multiply(const ToomConfig& config, const SignedInt& x,
                                               const SignedInt& y) {
    TraceNode root;
    SignedInt product = detail::multiply_impl(config, x, y, &root, nullptr, 0);
    return {std::move(product), std::move(root)};
}

std::vector<std::pair<SignedInt, SignedInt>> expand_once(const ToomConfig& config,
                                                         const SignedInt& x, const SignedInt& y) {
    const DigitVector x_digits = to_digits(config.base(), x.magnitude());
    const DigitVector y_digits = to_digits(config.base(), y.magnitude());
    const std::size_t i = compute_i(config, x_digits.digits.size(), y_digits.digits.size());
    const SplitPolynomial p_poly = split_digits(x_digits, config.kx(), i);
    const SplitPolynomial q_poly = split_digits(y_digits, config.ky(), i);
    std::vector<std::pair<SignedInt, SignedInt>> pairs;
    pairs.reserve(config.num_points());
    for (const SignedInt& point : config.points()) {
        pairs.emplace_back(eval_poly(p_poly, point), eval_poly(q_poly, point));
    }
    return pairs;
}

CheckReport check_piece_bound(const TraceNode& root, const ToomConfig& config) {
    CheckReport report = make_report("piece_i_bound", root);
    walk(root, "root", [&](const TraceNode& node, const std::string& path) {
        if (node.base_case) return;
        const auto check_side = [&](const SplitPolynomial& poly, const char* side) {
            for (std::size_t j = 0; j < poly.coefficients.size(); ++j) {
                ++report.checks_run;
                const std::size_t digits = digit_count(config.base(), poly.coefficients[j]);
                if (digits > node.i) {
                    report.violations.push_back({report.check_name,
                                                 path + ":" + side + "[" + std::to_string(j) + "]",
                                                 "digit_count=" + std::to_string(digits),
                                                 "i=" + std::to_string(node.i)});
                }
            }
        };
        check_side(node.p_coeffs, "p");
        check_side(node.q_coeffs, "q");
    });
    return report;
}

CheckReport check_eval_bounds(const TraceNode& root, const ToomConfig& config) {
    CheckReport report = make_report("eval_bound", root);
    walk(root, "root", [&](const TraceNode& node, const std::string& path) {
        if (node.children.empty()) return;
        const ProblemSize bound = subproblem_bound(config, node.problem);
        for (std::size_t index = 0; index < node.children.size(); ++index) {
            const TraceNode& child = node.children[index];
            const auto check_operand = [&](const SignedInt& operand, const char* side) {
                ++report.checks_run;
                const std::size_t digits = digit_count(config.base(), operand);
                if (digits > bound) {
                    report.violations.push_back({report.check_name,
                                                 path + "/" + std::to_string(index) + ":" + side,
                                                 "digit_count=" + std::to_string(digits),
                                                 "floor(P/k_min)+c=" + std::to_string(bound)});
                }
            };
            check_operand(child.x, "x");
            check_operand(child.y, "y");
        }
    });
    return report;
}

CheckReport check_strict_decrease(const TraceNode& root, const ToomConfig& config) {
    CheckReport report = make_report("strict_decrease", root);
    walk(root, "root", [&](const TraceNode& node, const std::string& path) {
        if (node.children.empty()) return;
        if (config.base_case(node.problem)) return;  // no edges to check at P <= theta
        for (std::size_t index = 0; index < node.children.size(); ++index) {
            ++report.checks_run;
            const TraceNode& child = node.children[index];
            if (child.problem >= node.problem) {
                report.violations.push_back({report.check_name, path + "/" + std::to_string(index),
                                             "child P=" + std::to_string(child.problem),
                                             "parent P=" + std::to_string(node.problem)});
            }
        }
    });
    return report;
}

CheckReport check_depth_bound(const TraceNode& root, const ToomConfig& config) {
    CheckReport report = make_report("depth_bound", root);
    const Rational k_min = rational_of(config.k_min());
    const Rational c = rational_of(config.c());
    // bound_0 = P0; bound_{n+1} = bound_n / k_min + c, which unrolls to
    // P0/k_min^n + sum_{j<n} c/k_min^j.
    Rational bound = rational_of(root.problem);
    for (std::size_t depth = 0; depth < report.max_p_per_depth.size(); ++depth) {
        ++report.checks_run;
        const std::size_t observed = report.max_p_per_depth[depth];
        if (rational_of(observed) > bound) {
            report.violations.push_back({report.check_name, "depth " + std::to_string(depth),
                                         "max P=" + std::to_string(observed),
                                         bound.to_string()});
        }
        bound = bound / k_min + c;
    }
    return report;
}

std::size_t count_multiply_nodes(const ToomConfig& config, const SignedInt& x, const SignedInt& y) {
    std::size_t count = 0;
    detail::multiply_impl(config, x, y, nullptr, &count, 0);
    return count;
}

Rational node_count_growth(const ToomConfig& config, std::size_t n_digits, std::size_t factor,
                           uint64_t seed) {
    if (n_digits == 0 || factor == 0) throw std::invalid_argument("node_count_growth: zero size");
    std::mt19937_64 rng(seed);
    const SignedInt small_x{random_natural(rng, config.base(), n_digits)};
    const SignedInt small_y{random_natural(rng, config.base(), n_digits)};
    const SignedInt large_x{random_natural(rng, config.base(), n_digits * factor)};
    const SignedInt large_y{random_natural(rng, config.base(), n_digits * factor)};
    const std::size_t small_nodes = count_multiply_nodes(config, small_x, small_y);
    const std::size_t large_nodes = count_multiply_nodes(config, large_x, large_y);
    return Rational(SignedInt(Natural(large_nodes)), Natural(small_nodes));
}

namespace {

nlohmann::json node_to_json(const TraceNode& node) {
    nlohmann::json j;
    j["depth"] = node.depth;
    j["x"] = node.x.to_string();
    j["y"] = node.y.to_string();
    j["p"] = node.problem;
    j["base_case"] = node.base_case;
    if (!node.base_case) {
        j["i"] = node.i;
        j["b_power"] = node.b_power.to_decimal();
    }
    if (node.point_index.has_value()) j["point_index"] = *node.point_index;
    j["children"] = nlohmann::json::array();
    for (const TraceNode& child : node.children) {
        j["children"].push_back(node_to_json(child));
    }
    return j;
}

}  // namespace

nlohmann::json trace_to_json(const TraceNode& root, const SignedInt& product) {
    nlohmann::json doc;
    doc["schema"] = std::string(kTraceSchema);
    doc["product"] = product.to_string();
    doc["root"] = node_to_json(root);
    return doc;
}

Natural random_natural(std::mt19937_64& rng, uint64_t base, std::size_t digits) {
    if (digits == 0) return Natural{};
    DigitVector dv{base, {}};
    dv.digits.resize(digits);
    for (std::size_t i = 0; i < digits; ++i) dv.digits[i] = rng() % base;
    dv.digits[digits - 1] = 1 + rng() % (base - 1);  // leading digit nonzero
    return from_digits(dv);
}

SignedInt random_operand(std::mt19937_64& rng, uint64_t base, std::size_t max_digits) {
    const std::size_t digits = rng() % (max_digits + 1);
    const bool negative = (rng() & 1u) != 0;
    return SignedInt(random_natural(rng, base, digits), negative);
}

}  // namespace toomk
