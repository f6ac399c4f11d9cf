#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "toomk/errors.hpp"
#include "toomk/params.hpp"

using namespace toomk;

namespace {

std::vector<SignedInt> pts(std::initializer_list<int64_t> values) {
    std::vector<SignedInt> out;
    for (int64_t v : values) out.emplace_back(v);
    return out;
}

// The five small points of the big-magnitude example: 10^10 .. 10^10+4.
std::vector<SignedInt> big_points() {
    std::vector<SignedInt> out;
    const Natural ten_10 = Natural::pow(Natural(10), 10);
    for (uint64_t t = 0; t < 5; ++t) out.emplace_back(ten_10 + Natural(t));
    return out;
}

}  // namespace

TEST_CASE("validate accepts a well-formed config") {
    const ToomConfig config = ToomConfig::validate(10, 3, 3, pts({0, 1, -1, 2, -2}));
    CHECK(config.k_min() == 3);
    CHECK(config.num_points() == 5);
    CHECK(config.v_max() == Natural(2));
    CHECK(config.theta() == Rational(3));
}

TEST_CASE("validate rejects each malformed input with its specific error") {
    CHECK_THROWS_AS(ToomConfig::validate(1, 3, 3, pts({0, 1, -1, 2, -2})), ValidationError);
    CHECK_THROWS_AS(ToomConfig::validate(10, 1, 3, pts({0, 1, -1})), ValidationError);
    CHECK_THROWS_AS(ToomConfig::validate(10, 2, 3, pts({0, 1, -1})), ValidationError);
    CHECK_THROWS_AS(ToomConfig::validate(10, 3, 3, pts({0, 1, 1, 2, -2})), ValidationError);

    try {
        ToomConfig::validate(10, 3, 3, pts({0, 1, 1, 2, -2}));
        FAIL("expected DuplicatePoints");
    } catch (const ValidationError& error) {
        CHECK(error.kind() == ValidationError::Kind::DuplicatePoints);
        CHECK(std::string(error.what()) == "DuplicatePoints: points[1] and points[2] are both 1");
    }
    try {
        ToomConfig::validate(10, 2, 3, pts({0, 1, -1}));
        FAIL("expected WrongPointCount");
    } catch (const ValidationError& error) {
        CHECK(error.kind() == ValidationError::Kind::WrongPointCount);
        CHECK(std::string(error.what()) == "WrongPointCount: need kx+ky-1 = 4 points, got 3");
    }
    try {
        ToomConfig::validate(10, 1, 3, pts({0, 1, -1}));
        FAIL("expected SplitTooSmall");
    } catch (const ValidationError& error) {
        CHECK(error.kind() == ValidationError::Kind::SplitTooSmall);
    }
    try {
        ToomConfig::validate(0, 3, 3, pts({0, 1, -1, 2, -2}));
        FAIL("expected BaseTooSmall");
    } catch (const ValidationError& error) {
        CHECK(error.kind() == ValidationError::Kind::BaseTooSmall);
    }
}

TEST_CASE("v_max examples") {
    CHECK(v_max_of(pts({0, 1, -1, 2, -2})) == Natural(2));
    CHECK(v_max_of(pts({0, 1, -1})) == Natural(1));
    CHECK(v_max_of(big_points()) == Natural::pow(Natural(10), 10) + Natural(4));
    CHECK_THROWS_AS(v_max_of({}), std::invalid_argument);
}

TEST_CASE("c_constants examples") {
    SUBCASE("small points, k=3") {
        const CConstants c = c_constants(10, 3, 3, Natural(2));  // 1+2+4 = 7, one digit
        CHECK(c.c_x == 1);
        CHECK(c.c_y == 1);
        CHECK(c.c == 2);
    }
    SUBCASE("big points, k=3") {
        const Natural v_max = Natural::pow(Natural(10), 10) + Natural(4);
        const CConstants c = c_constants(10, 3, 3, v_max);
        CHECK(c.c_x == 21);
        CHECK(c.c_y == 21);
        CHECK(c.c == 22);
    }
    SUBCASE("k=2 with v_max 1") {
        const CConstants c = c_constants(10, 2, 2, Natural(1));  // 1+1 = 2
        CHECK(c.c_x == 1);
        CHECK(c.c_y == 1);
        CHECK(c.c == 2);
    }
    SUBCASE("unbalanced splits") {
        const CConstants c = c_constants(10, 2, 3, Natural(2));
        CHECK(c.c_x == 1);  // 1+2 = 3
        CHECK(c.c_y == 1);  // 1+2+4 = 7
        CHECK(c.c == 2);
    }
}

TEST_CASE("theta examples") {
    CHECK(theta_value(2, 3) == Rational(3));   // 6/2
    CHECK(theta_value(22, 3) == Rational(33)); // 66/2
    CHECK(theta_value(2, 2) == Rational(4));
    CHECK(theta_value(7, 4) == Rational(SignedInt(28), Natural(3)));  // non-integral
    CHECK_THROWS_AS(theta_value(2, 1), std::invalid_argument);
}

TEST_CASE("subproblem_bound examples") {
    const ToomConfig small = ToomConfig::validate(10, 3, 3, pts({0, 1, -1, 2, -2}));
    CHECK(subproblem_bound(small, 100) == 35);
    CHECK(subproblem_bound(small, 0) == small.c());

    const ToomConfig big = ToomConfig::validate(10, 3, 3, big_points());
    CHECK(big.c() == 22);
    CHECK(big.theta() == Rational(33));
    CHECK(subproblem_bound(big, 3) == 23);
}

TEST_CASE("theta exceeds c and the base-case predicate is exact") {
    const ToomConfig config = ToomConfig::validate(10, 3, 3, pts({0, 1, -1, 2, -2}));
    CHECK(Rational(SignedInt(Natural(config.c()))) < config.theta());
    CHECK(config.base_case(3));       // P = theta exactly
    CHECK_FALSE(config.base_case(4));

    // non-integral theta: 28/3, so 9 is base case, 10 is not
    std::vector<SignedInt> seven = pts({0, 1, -1, 2, -2, 3, -3});
    const ToomConfig k4 = ToomConfig::validate(2, 4, 4, std::move(seven));
    CHECK(k4.theta() == Rational(SignedInt(Natural(k4.c()) * Natural(4)), Natural(3)));
    CHECK(k4.base_case(9));
    CHECK_FALSE(k4.base_case(10));
}

TEST_CASE("decrease property on a boundary slice") {
    for (const auto& config :
         {ToomConfig::validate(10, 3, 3, pts({0, 1, -1, 2, -2})),
          ToomConfig::validate(10, 2, 2, pts({0, 1, -1})),
          ToomConfig::validate(10, 3, 3, big_points())}) {
        const std::size_t floor_theta =
            config.theta().num().magnitude().divmod(config.theta().den()).first.to_uint64();
        for (ProblemSize p = floor_theta + 1; p <= floor_theta + 1000; ++p) {
            CHECK(subproblem_bound(config, p) < p);
        }
    }
}

TEST_CASE("c_constants monotone in v_max") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 200; ++round) {
        const uint64_t base = 2 + rng() % 30;
        const std::size_t kx = 2 + rng() % 3;
        const std::size_t ky = 2 + rng() % 3;
        const uint64_t small = 1 + rng() % 1000000;
        const uint64_t bump = rng() % 1000000;
        const CConstants lo = c_constants(base, kx, ky, Natural(small));
        const CConstants hi = c_constants(base, kx, ky, Natural(small + bump));
        CHECK(lo.c_x <= hi.c_x);
        CHECK(lo.c_y <= hi.c_y);
    }
}

TEST_CASE("validate is total over fuzzed inputs") {
    std::mt19937_64 rng(32);
    std::size_t accepted = 0;
    for (int round = 0; round < 500; ++round) {
        const uint64_t base = rng() % 20;
        const std::size_t kx = rng() % 5;
        const std::size_t ky = rng() % 5;
        std::vector<SignedInt> points;
        const std::size_t count = rng() % 8;
        for (std::size_t i = 0; i < count; ++i) {
            points.emplace_back(static_cast<int64_t>(rng() % 7) - 3);
        }
        try {
            const ToomConfig config = ToomConfig::validate(base, kx, ky, std::move(points));
            ++accepted;
            CHECK(config.theta() > Rational(0));
            CHECK(config.c() >= 1);
        } catch (const ValidationError&) {
            // specific rejection is the expected outcome for most draws
        }
    }
    CHECK(accepted > 0);
}
