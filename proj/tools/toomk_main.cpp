// Command-line surface: exact multiplication, threshold inspection,
// recursion tracing, property checking, and micro-benchmarks.
//
// Exit codes: 0 ok, 1 property violation, 2 usage/validation error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "toomk/errors.hpp"
#include "toomk/multiplier.hpp"
#include "toomk/params.hpp"
#include "toomk/verify.hpp"

namespace {

struct ConfigArgs {
    uint64_t base = 0;
    std::size_t kx = 0;
    std::size_t ky = 0;
    std::string points_csv;
};

void add_config_flags(CLI::App* cmd, ConfigArgs& args) {
    cmd->add_option("--base", args.base, "Digit base b (> 1)")->required();
    cmd->add_option("--kx", args.kx, "Pieces for the first operand (> 1)")->required();
    cmd->add_option("--ky", args.ky, "Pieces for the second operand (> 1)")->required();
    cmd->add_option("--points", args.points_csv,
                    "Comma-separated distinct integer evaluation points, kx+ky-1 of them")
        ->required();
}

std::vector<toomk::SignedInt> parse_points(const std::string& csv) {
    std::vector<toomk::SignedInt> points;
    std::size_t begin = 0;
    while (begin <= csv.size()) {
        std::size_t end = csv.find(',', begin);
        if (end == std::string::npos) end = csv.size();
        const std::string token = csv.substr(begin, end - begin);
        try {
            points.push_back(toomk::SignedInt::from_string(token));
        } catch (const std::invalid_argument& error) {
            throw std::invalid_argument("--points entry " + std::to_string(points.size()) + ": " +
                                        error.what());
        }
        if (end == csv.size()) break;
        begin = end + 1;
    }
    return points;
}

toomk::ToomConfig make_config(const ConfigArgs& args) {
    return toomk::ToomConfig::validate(args.base, args.kx, args.ky, parse_points(args.points_csv));
}

toomk::SignedInt parse_operand(const std::string& text, const char* name) {
    try {
        return toomk::SignedInt::from_string(text);
    } catch (const std::invalid_argument& error) {
        throw std::invalid_argument(std::string("operand ") + name + ": " + error.what());
    }
}

toomk::SignedInt oracle_mul(const toomk::ToomConfig& config, const toomk::SignedInt& x,
                            const toomk::SignedInt& y) {
    const toomk::DigitVector product =
        toomk::schoolbook_mul(toomk::to_digits(config.base(), x.magnitude()),
                              toomk::to_digits(config.base(), y.magnitude()));
    return toomk::sign_combine(x.is_negative(), y.is_negative(),
                               toomk::SignedInt(toomk::from_digits(product)));
}

std::string format_seconds(std::chrono::steady_clock::duration elapsed) {
    const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count();
    std::string frac = std::to_string(micros % 1000000);
    frac.insert(0, 6 - frac.size(), '0');
    return std::to_string(micros / 1000000) + "." + frac;
}

// Raw fraction c*k_min/(k_min-1) before reduction, e.g. "6/2".
std::string theta_raw(const toomk::ToomConfig& config) {
    return (toomk::Natural(config.c()) * toomk::Natural(config.k_min())).to_decimal() + "/" +
           toomk::Natural(config.k_min() - 1).to_decimal();
}

int run_mul(const toomk::ToomConfig& config, const std::string& x_text, const std::string& y_text) {
    const toomk::SignedInt x = parse_operand(x_text, "x");
    const toomk::SignedInt y = parse_operand(y_text, "y");
    std::cout << toomk::multiply(config, x, y).to_string() << "\n";
    return 0;
}

int run_theta(const toomk::ToomConfig& config, bool json_mode) {
    if (json_mode) {
        nlohmann::json doc;
        doc["v_max"] = config.v_max().to_decimal();
        doc["c_x"] = config.c_x();
        doc["c_y"] = config.c_y();
        doc["c"] = config.c();
        doc["k_min"] = config.k_min();
        doc["theta"] = {{"raw", theta_raw(config)},
                        {"num", config.theta().num().to_string()},
                        {"den", config.theta().den().to_decimal()},
                        {"approx", config.theta().to_decimal_string(6)}};
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "v_max = " << config.v_max().to_decimal() << "\n";
    std::cout << "c_x = " << config.c_x() << "\n";
    std::cout << "c_y = " << config.c_y() << "\n";
    std::cout << "c = " << config.c() << "\n";
    std::cout << "k_min = " << config.k_min() << "\n";
    std::cout << "theta = " << theta_raw(config) << " = " << config.theta().to_string() << " (~"
              << config.theta().to_decimal_string(6) << ")\n";
    return 0;
}

int run_trace(const toomk::ToomConfig& config, const std::string& x_text,
              const std::string& y_text, bool expand_once_mode) {
    const toomk::SignedInt x = parse_operand(x_text, "x");
    const toomk::SignedInt y = parse_operand(y_text, "y");
    if (expand_once_mode) {
        for (const auto& [left, right] : toomk::expand_once(config, x, y)) {
            std::cout << left.to_string() << " " << right.to_string() << "\n";
        }
        return 0;
    }
    const auto [product, trace] = toomk::trace_multiply(config, x, y);
    std::cout << toomk::trace_to_json(trace, product).dump(2) << "\n";
    return 0;
}

// Test-only hook: corrupt one split coefficient so the checkers must
// report a violation. Returns false if the trace had no recursive node.
bool inject_coefficient_fault(toomk::TraceNode& node) {
    if (!node.base_case && !node.p_coeffs.coefficients.empty()) {
        node.p_coeffs.coefficients[0] = node.b_power;  // digit_count(B) = i + 1
        return true;
    }
    for (toomk::TraceNode& child : node.children) {
        if (inject_coefficient_fault(child)) return true;
    }
    return false;
}

int run_check(const toomk::ToomConfig& config, std::size_t runs, uint64_t seed,
              std::size_t max_digits, bool inject_fault) {
    std::mt19937_64 rng(seed);
    std::size_t oracle_mismatches = 0;
    std::size_t total_nodes = 0;
    std::size_t deepest = 0;
    bool fault_injected = false;
    struct Tally {
        const char* name;
        std::size_t checks = 0;
        std::size_t violations = 0;
    };
    Tally tallies[4] = {{"piece_i_bound"}, {"eval_bound"}, {"strict_decrease"}, {"depth_bound"}};
    std::vector<std::string> violation_lines;

    for (std::size_t run = 0; run < runs; ++run) {
        const toomk::SignedInt x = toomk::random_operand(rng, config.base(), max_digits);
        const toomk::SignedInt y = toomk::random_operand(rng, config.base(), max_digits);
        auto [product, trace] = toomk::trace_multiply(config, x, y);
        if (product != oracle_mul(config, x, y)) ++oracle_mismatches;
        if (inject_fault && !fault_injected) fault_injected = inject_coefficient_fault(trace);
        total_nodes += trace.count_nodes();
        deepest = std::max(deepest, trace.max_depth());

        const toomk::CheckReport reports[4] = {
            toomk::check_piece_bound(trace, config), toomk::check_eval_bounds(trace, config),
            toomk::check_strict_decrease(trace, config), toomk::check_depth_bound(trace, config)};
        for (int which = 0; which < 4; ++which) {
            tallies[which].checks += reports[which].checks_run;
            tallies[which].violations += reports[which].violations.size();
            for (const toomk::Violation& violation : reports[which].violations) {
                if (violation_lines.size() < 10) {
                    violation_lines.push_back("  run " + std::to_string(run) + " " +
                                              violation.check + " at " + violation.node_path +
                                              ": " + violation.observed + " exceeds " +
                                              violation.bound);
                }
            }
        }
    }

    if (inject_fault && !fault_injected) {
        std::cerr << "fault injection found no recursive node; raise --max-digits\n";
        return 1;
    }

    std::size_t total_violations = 0;
    std::cout << "config: base=" << config.base() << " kx=" << config.kx() << " ky=" << config.ky()
              << " points=";
    for (std::size_t index = 0; index < config.num_points(); ++index) {
        std::cout << (index == 0 ? "" : ",") << config.points()[index].to_string();
    }
    std::cout << "\n";
    std::cout << "theta = " << config.theta().to_string() << " (" << theta_raw(config) << ")\n";
    std::cout << "runs=" << runs << " seed=" << seed << " max_digits=" << max_digits << "\n";
    std::cout << "oracle mismatches: " << oracle_mismatches << "\n";
    for (const Tally& tally : tallies) {
        std::cout << tally.name << ": checks=" << tally.checks
                  << " violations=" << tally.violations << "\n";
        total_violations += tally.violations;
    }
    for (const std::string& line : violation_lines) std::cout << line << "\n";
    std::cout << "nodes=" << total_nodes << " max_depth=" << deepest << "\n";
    const bool failed = total_violations != 0 || oracle_mismatches != 0;
    std::cout << "result: " << (failed ? "FAIL" : "PASS") << "\n";
    return failed ? 1 : 0;
}

int run_bench(const toomk::ToomConfig& config, const std::string& sizes_csv, uint64_t seed) {
    std::vector<std::size_t> sizes;
    for (const toomk::SignedInt& value : parse_points(sizes_csv)) {
        if (value.is_negative() || value.is_zero() || !value.magnitude().fits_uint64()) {
            throw std::invalid_argument("--sizes entries must be positive word-sized integers");
        }
        sizes.push_back(value.magnitude().to_uint64());
    }
    std::mt19937_64 rng(seed);
    std::cout << "size_digits,toomk_nodes,toomk_time,schoolbook_time\n";
    for (const std::size_t size : sizes) {
        const toomk::SignedInt x{toomk::random_natural(rng, config.base(), size)};
        const toomk::SignedInt y{toomk::random_natural(rng, config.base(), size)};

        const auto toom_start = std::chrono::steady_clock::now();
        const toomk::SignedInt product = toomk::multiply(config, x, y);
        const auto toom_elapsed = std::chrono::steady_clock::now() - toom_start;

        const std::size_t nodes = toomk::count_multiply_nodes(config, x, y);

        const toomk::DigitVector x_digits = toomk::to_digits(config.base(), x.magnitude());
        const toomk::DigitVector y_digits = toomk::to_digits(config.base(), y.magnitude());
        const auto school_start = std::chrono::steady_clock::now();
        const toomk::DigitVector school = toomk::schoolbook_mul(x_digits, y_digits);
        const auto school_elapsed = std::chrono::steady_clock::now() - school_start;

        if (toomk::SignedInt(toomk::from_digits(school)) != product) {
            std::cerr << "bench: product mismatch at size " << size << "\n";
            return 1;
        }
        std::cout << size << "," << nodes << "," << format_seconds(toom_elapsed) << ","
                  << format_seconds(school_elapsed) << "\n";
    }
    std::cerr << "# node counts grow by about 2k-1 per kx-fold size step when kx == ky\n"
              << "# (within ~20% at sizes of 1000+ digits; timings are wall-clock and noisy)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Toom-Cook multiplication with arbitrary distinct integer "
                 "evaluation points and derived base-case thresholds"};
    app.require_subcommand(1);

    ConfigArgs mul_config;
    std::string mul_x, mul_y;
    CLI::App* mul = app.add_subcommand("mul", "Multiply two integers exactly");
    add_config_flags(mul, mul_config);
    mul->add_option("x", mul_x, "First operand (decimal or 0x hex)")->required();
    mul->add_option("y", mul_y, "Second operand (decimal or 0x hex)")->required();

    ConfigArgs theta_config;
    bool theta_json = false;
    CLI::App* theta = app.add_subcommand("theta", "Show the derived threshold constants");
    add_config_flags(theta, theta_config);
    theta->add_flag("--json", theta_json, "Emit JSON instead of plain text");

    ConfigArgs trace_config;
    std::string trace_x, trace_y;
    bool trace_expand = false;
    CLI::App* trace = app.add_subcommand("trace", "Emit the recursion tree as toom-trace/1 JSON");
    add_config_flags(trace, trace_config);
    trace->add_option("x", trace_x, "First operand (decimal or 0x hex)")->required();
    trace->add_option("y", trace_y, "Second operand (decimal or 0x hex)")->required();
    trace->add_flag("--expand-once", trace_expand,
                    "Print one unconditional split/evaluate level as factor-pair lines");

    ConfigArgs check_config;
    std::size_t check_runs = 100;
    uint64_t check_seed = 42;
    std::size_t check_max_digits = 200;
    bool check_inject = false;
    CLI::App* check = app.add_subcommand("check", "Run the bound checkers on random traces");
    add_config_flags(check, check_config);
    check->add_option("--runs", check_runs, "Number of traced multiplications");
    check->add_option("--seed", check_seed, "Random seed (reports are deterministic per seed)");
    check->add_option("--max-digits", check_max_digits, "Operand size cap in base-b digits");
    check->add_flag("--inject-fault", check_inject,
                    "Testing hook: corrupt one split coefficient and expect a violation");

    ConfigArgs bench_config;
    std::string bench_sizes = "100,1000,10000";
    uint64_t bench_seed = 42;
    CLI::App* bench = app.add_subcommand("bench", "CSV of node counts and wall times per size");
    add_config_flags(bench, bench_config);
    bench->add_option("--sizes", bench_sizes, "Comma-separated operand sizes in base-b digits");
    bench->add_option("--seed", bench_seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 2;
    }

    try {
        if (mul->parsed()) return run_mul(make_config(mul_config), mul_x, mul_y);
        if (theta->parsed()) return run_theta(make_config(theta_config), theta_json);
        if (trace->parsed()) {
            return run_trace(make_config(trace_config), trace_x, trace_y, trace_expand);
        }
        if (check->parsed()) {
            return run_check(make_config(check_config), check_runs, check_seed, check_max_digits,
                             check_inject);
        }
        if (bench->parsed()) return run_bench(make_config(bench_config), bench_sizes, bench_seed);
    } catch (const toomk::ValidationError& error) {
        std::cerr << error.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& error) {
        std::cerr << error.what() << "\n";
        return 2;
    } catch (const toomk::Error& error) {
        // SingularMatrix / NonIntegralResult: internal invariant violations
        std::cerr << error.what() << "\n";
        return 1;
    }
    return 0;
}
