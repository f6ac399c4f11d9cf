#include "toomk/params.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "toomk/errors.hpp"

namespace toomk {

Natural v_max_of(const std::vector<SignedInt>& points) {
    if (points.empty()) throw std::invalid_argument("v_max: empty point vector");
    Natural best = points.front().magnitude();
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].magnitude() > best) best = points[i].magnitude();
    }
    return best;
}

CConstants c_constants(uint64_t base, std::size_t kx, std::size_t ky, const Natural& v_max) {
    const auto geometric_digit_count = [&](std::size_t k) {
        Natural sum;
        for (std::size_t j = 0; j < k; ++j) sum += Natural::pow(v_max, j);
        return digit_count(base, sum);
    };
    CConstants out;
    out.c_x = geometric_digit_count(kx);
    out.c_y = geometric_digit_count(ky);
    out.c = std::max(out.c_x, out.c_y) + 1;
    return out;
}

Rational theta_value(std::size_t c, std::size_t k_min) {
    if (k_min < 2) throw std::invalid_argument("theta: k_min must be >= 2");
    return Rational(SignedInt(Natural(c) * Natural(k_min)), Natural(k_min - 1));
}

ProblemSize subproblem_bound(const ToomConfig& config, ProblemSize p) {
    return p / config.k_min() + config.c();
}

bool ToomConfig::base_case(ProblemSize p) const {
    // P <= num/den with den > 0, cross-multiplied
    return Natural(p) * theta_.den() <= theta_.num().magnitude();
}

ToomConfig ToomConfig::validate(uint64_t base, std::size_t kx, std::size_t ky,
                                std::vector<SignedInt> points) {
    if (base < 2) {
        throw ValidationError(ValidationError::Kind::BaseTooSmall,
                              "BaseTooSmall: base must be > 1 (got " + std::to_string(base) + ")");
    }
    if (kx < 2) {
        throw ValidationError(ValidationError::Kind::SplitTooSmall,
                              "SplitTooSmall: kx must be > 1 (got " + std::to_string(kx) + ")");
    }
    if (ky < 2) {
        throw ValidationError(ValidationError::Kind::SplitTooSmall,
                              "SplitTooSmall: ky must be > 1 (got " + std::to_string(ky) + ")");
    }
    const std::size_t expected = kx + ky - 1;
    if (points.size() != expected) {
        throw ValidationError(ValidationError::Kind::WrongPointCount,
                              "WrongPointCount: need kx+ky-1 = " + std::to_string(expected) +
                                  " points, got " + std::to_string(points.size()));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) {
                throw ValidationError(ValidationError::Kind::DuplicatePoints,
                                      "DuplicatePoints: points[" + std::to_string(i) + "] and points[" +
                                          std::to_string(j) + "] are both " + points[i].to_string());
            }
        }
    }
    ToomConfig config;
    config.base_ = base;
    config.kx_ = kx;
    config.ky_ = ky;
    config.k_min_ = std::min(kx, ky);
    config.v_max_ = v_max_of(points);
    config.constants_ = c_constants(base, kx, ky, config.v_max_);
    config.theta_ = theta_value(config.constants_.c, config.k_min_);
    config.points_ = std::move(points);
    return config;
}

}  // namespace toomk
