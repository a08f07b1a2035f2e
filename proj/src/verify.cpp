#include "qdist/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "qdist/output.hpp"
#include "qdist/partitions.hpp"

namespace qdist {

namespace {

CheckResult check(std::string name, bool passed, std::string expected, std::string actual) {
    return {std::move(name), passed, std::move(expected), std::move(actual)};
}

CheckResult check_partition_table() {
    const std::vector<unsigned> expected{1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    const auto counts = partition_counts(10);
    std::vector<std::string> actual;
    bool ok = true;
    for (unsigned n = 1; n <= 10; ++n) {
        actual.push_back(counts[n].str());
        ok = ok && counts[n] == expected[n - 1];
    }
    const auto want = fmt::format("{}", fmt::join(expected, ","));
    return check("p(1..10)=" + want, ok, want, fmt::format("{}", fmt::join(actual, ",")));
}

CheckResult check_p100() {
    const auto p = count_partitions(100);
    return check("p(100)=190569292", p == 190569292, "190569292", p.str());
}

CheckResult check_table3(const VerifyOptions& options) {
    const char* configs[] = {"000", "001", "010", "011", "100", "101", "110", "111"};
    const double expected[] = {0, 0, 3.0 / 16, 3.0 / 16, 3.0 / 16, 3.0 / 16, 27.0 / 64, 27.0 / 64};
    bool ok = true;
    std::vector<std::string> actual;
    for (std::size_t i = 0; i < 8; ++i) {
        const double got = options.intensity(ApparatusConfig::from_string(configs[i]));
        ok = ok && std::fabs(got - expected[i]) <= 1e-12;
        actual.push_back(format_real(got, 12));
    }
    return check("n=3 intensities (000..111)", ok, "0,0,0.1875,0.1875,0.1875,0.1875,0.421875,0.421875",
                 fmt::format("{}", fmt::join(actual, ",")));
}

std::vector<CheckResult> check_example1() {
    const auto report = quantum_spectrum(3);
    std::vector<std::string> probs;
    for (const auto& c : report.classes) probs.push_back(c.probability_exact().str());
    const auto joined = fmt::format("{}", fmt::join(probs, ","));
    return {
        check("n=3 class probabilities=1/4,1/2,1/4", joined == "1/4,1/2,1/4", "1/4,1/2,1/4",
              joined),
        check("n=3 quantum entropy=1.5 bits", std::fabs(report.entropy_bits - 1.5) <= 1e-12,
              "1.5", format_real(report.entropy_bits, 15)),
    };
}

CheckResult check_conservation(unsigned n_max) {
    unsigned bad = 0;
    for (unsigned n = 1; n <= n_max; ++n) {
        BigInt total = 0;
        for (const auto& lambda : enumerate_partitions(n)) total += state_count(lambda);
        if (total != (BigInt(1) << n)) {
            bad = n;
            break;
        }
    }
    return check(fmt::format("sum of state counts = 2^n for n<={}", n_max), bad == 0, "all n",
                 bad == 0 ? "all n" : fmt::format("mismatch at n={}", bad));
}

std::vector<CheckResult> check_oracles(const VerifyOptions& options) {
    double worst = 0.0;
    for (unsigned n = 1; n <= options.oracle_n_max; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const auto config = ApparatusConfig::from_mask(n, mask);
            worst = std::max(worst, std::fabs(options.intensity(config) - simulate_intensity(config)));
        }
    }
    std::string mismatch;
    for (unsigned n = 1; n <= options.oracle_n_max && mismatch.empty(); ++n) {
        std::string why;
        if (!spectra_match(quantum_spectrum(n), brute_force_spectrum(n), 1e-12, &why)) {
            mismatch = fmt::format("n={}: {}", n, why);
        }
    }
    return {
        check(fmt::format("gap-product vs simulation, all configs n<={}", options.oracle_n_max),
              worst <= 1e-12, "max |diff| <= 1e-12", fmt::format("max |diff| = {:.3g}", worst)),
        check(fmt::format("partition spectrum vs brute force, n<={}", options.oracle_n_max),
              mismatch.empty(), "identical classes", mismatch.empty() ? "identical classes" : mismatch),
    };
}

CheckResult check_classical_bound() {
    unsigned bad = 0;
    for (unsigned n = 1; n <= 100 && bad == 0; ++n) {
        const auto r = classical_spectrum(n, 0.5);
        if (r.entropy_bits > r.bound_bits + 1e-9) bad = n;
    }
    return check("classical entropy <= log2(n+1), n<=100", bad == 0, "all n",
                 bad == 0 ? "all n" : fmt::format("violated at n={}", bad));
}

CheckResult check_zeno() {
    unsigned bad = 0;
    double previous = zeno_survival(1);
    for (unsigned n = 2; n <= 10'000 && bad == 0; ++n) {
        const double s = zeno_survival(n);
        if (s < zeno_approximation(n) || s < previous) bad = n;
        previous = s;
    }
    return check("zeno survival >= 1-pi^2/(4n), nondecreasing, n<=10000", bad == 0, "all n",
                 bad == 0 ? "all n" : fmt::format("violated at n={}", bad));
}

CheckResult check_qubit() {
    const double h = qubit_channel_information(1.0 / 3, 1.0 / 3, 1.0 / 3);
    return check("uniform three-outcome detector=1.585 bits",
                 std::fabs(h - 1.585) <= 1e-3 && std::fabs(h - std::log2(3.0)) <= 1e-12, "1.585",
                 format_real(h, 12));
}

}  // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string VerifyReport::render() const {
    std::string out;
    for (const auto& c : checks) {
        out += fmt::format("{}: {} (expected {}; actual {})\n", c.name, c.passed ? "ok" : "FAILED",
                           c.expected, c.actual);
    }
    const auto passed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    out += fmt::format("verify: {} ({}/{} checks passed)\n", all_passed() ? "PASS" : "FAIL", passed,
                       checks.size());
    return out;
}

VerifyReport run_verification(const VerifyOptions& options) {
    VerifyReport report;
    auto& checks = report.checks;
    checks.push_back(check_partition_table());
    checks.push_back(check_p100());
    checks.push_back(check_table3(options));
    for (auto& c : check_example1()) checks.push_back(std::move(c));
    checks.push_back(check_conservation(options.conservation_n_max));
    for (auto& c : check_oracles(options)) checks.push_back(std::move(c));
    checks.push_back(check_classical_bound());
    checks.push_back(check_zeno());
    checks.push_back(check_qubit());
    return report;
}

bool spectra_match(const SpectrumReport& a, const SpectrumReport& b, double tolerance,
                   std::string* why) {
    auto fail = [&](std::string message) {
        if (why) *why = std::move(message);
        return false;
    };
    if (a.n != b.n) return fail(fmt::format("n differs ({} vs {})", a.n, b.n));
    if (a.classes.size() != b.classes.size()) {
        return fail(fmt::format("class count differs ({} vs {})", a.classes.size(), b.classes.size()));
    }
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
        const auto& x = a.classes[i];
        const auto& y = b.classes[i];
        if (x.label != y.label) {
            return fail(fmt::format("class {} label {} vs {}", i, label_to_string(x.label),
                                    label_to_string(y.label)));
        }
        if (x.count != y.count) {
            return fail(fmt::format("class {} count {} vs {}", i, x.count.str(), y.count.str()));
        }
        if (std::fabs(x.intensity - y.intensity) > tolerance) {
            return fail(fmt::format("class {} intensity {} vs {}", i, x.intensity, y.intensity));
        }
    }
    return true;
}

}  // namespace qdist
