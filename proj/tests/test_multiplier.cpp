#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "toomk/multiplier.hpp"
#include "toomk/verify.hpp"

using namespace toomk;

namespace {

std::vector<SignedInt> pts(std::initializer_list<int64_t> values) {
    std::vector<SignedInt> out;
    for (int64_t v : values) out.emplace_back(v);
    return out;
}

std::vector<ToomConfig> all_configs() {
    std::vector<ToomConfig> configs;
    configs.push_back(ToomConfig::validate(10, 2, 2, pts({0, 1, -1})));
    configs.push_back(ToomConfig::validate(10, 3, 3, pts({0, 1, -1, 2, -2})));
    configs.push_back(ToomConfig::validate(10, 2, 3, pts({0, 1, -1, 2})));
    configs.push_back(ToomConfig::validate(65536, 3, 3, pts({0, 1, -1, 2, -2})));
    std::vector<SignedInt> big;
    const Natural ten_10 = Natural::pow(Natural(10), 10);
    for (uint64_t t = 0; t < 5; ++t) big.emplace_back(ten_10 + Natural(t));
    configs.push_back(ToomConfig::validate(10, 3, 3, std::move(big)));
    return configs;
}

SignedInt sig(const std::string& text) { return SignedInt::from_string(text); }

// The differential oracle: digit-vector schoolbook plus the sign rule.
SignedInt oracle_mul(const ToomConfig& config, const SignedInt& x, const SignedInt& y) {
    const DigitVector product = schoolbook_mul(to_digits(config.base(), x.magnitude()),
                                               to_digits(config.base(), y.magnitude()));
    return sign_combine(x.is_negative(), y.is_negative(), SignedInt(from_digits(product)));
}

}  // namespace

TEST_CASE("problem_size examples") {
    const ToomConfig config = ToomConfig::validate(10, 3, 3, pts({0, 1, -1, 2, -2}));
    CHECK(problem_size(config, sig("123"), sig("456")) == 3);
    CHECK(problem_size(config, sig("0"), sig("0")) == 0);
    CHECK(problem_size(config, sig("-1000"), sig("5")) == 4);
}

TEST_CASE("sign_combine examples") {
    CHECK(sign_combine(true, false, SignedInt(6)) == SignedInt(-6));
    CHECK(sign_combine(true, true, SignedInt(6)) == SignedInt(6));
    CHECK(sign_combine(false, false, SignedInt(0)) == SignedInt(0));
    CHECK_FALSE(sign_combine(true, false, SignedInt(0)).is_negative());
}

TEST_CASE("base-case multiplication") {
    const ToomConfig config = ToomConfig::validate(10, 3, 3, pts({0, 1, -1, 2, -2}));
    CHECK(multiply(config, sig("123"), sig("456")) == sig("56088"));  // P = 3 <= theta = 3
    CHECK(multiply(config, sig("0"), sig("456")).is_zero());
    CHECK(multiply(config, sig("0"), sig("0")).is_zero());
}

TEST_CASE("sign rule holds under every config") {
    for (const auto& config : all_configs()) {
        CHECK(multiply(config, sig("-12"), sig("34")) == sig("-408"));
        CHECK(multiply(config, sig("12"), sig("-34")) == sig("-408"));
        CHECK(multiply(config, sig("-12"), sig("-34")) == sig("408"));
        CHECK(multiply(config, sig("12"), sig("34")) == sig("408"));
    }
}

TEST_CASE("recursive path matches the oracle on 500-digit operands") {
    std::mt19937_64 rng(51);
    for (const auto& config : all_configs()) {
        const SignedInt x{random_natural(rng, config.base(), 500), (rng() & 1) != 0};
        const SignedInt y{random_natural(rng, config.base(), 500), (rng() & 1) != 0};
        CHECK(multiply(config, x, y) == oracle_mul(config, x, y));
    }
}

TEST_CASE("random operands match the oracle") {
    std::mt19937_64 rng(52);
    for (const auto& config : all_configs()) {
        for (int round = 0; round < 60; ++round) {
            const SignedInt x = random_operand(rng, config.base(), 120);
            const SignedInt y = random_operand(rng, config.base(), 120);
            CHECK(multiply(config, x, y) == oracle_mul(config, x, y));
        }
    }
}

TEST_CASE("asymmetric and degenerate operand shapes") {
    std::mt19937_64 rng(53);
    const ToomConfig config = ToomConfig::validate(10, 2, 3, pts({0, 1, -1, 2}));
    const SignedInt tiny = sig("7");
    const SignedInt huge{random_natural(rng, 10, 300)};
    CHECK(multiply(config, tiny, huge) == oracle_mul(config, tiny, huge));
    CHECK(multiply(config, huge, tiny) == oracle_mul(config, huge, tiny));
    CHECK(multiply(config, SignedInt(0), huge).is_zero());
    CHECK(multiply(config, -huge, huge) == oracle_mul(config, -huge, huge));
    CHECK(multiply(config, sig("1"), huge) == huge);

    const SignedInt power{Natural::pow(Natural(10), 100)};  // many zero digits
    CHECK(multiply(config, power, power) == oracle_mul(config, power, power));
}
