// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
//
// usage: qdist_acceptance [series-csv-path]

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "qdist/apparatus.hpp"
#include "qdist/commands.hpp"
#include "qdist/partitions.hpp"
#include "qdist/spectrum.hpp"
#include "qdist/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double time_limit_s;  // 0 = none
    std::function<Outcome()> run;
};

qdist::OutputSpec csv_spec() {
    qdist::OutputSpec s;
    s.format = qdist::OutputFormat::csv;
    return s;
}

Outcome partition_table() {
    const auto csv = qdist::cmd_partitions(10, csv_spec());
    const std::string want = "n,p(n)\n1,1\n2,2\n3,3\n4,5\n5,7\n6,11\n7,15\n8,22\n9,30\n10,42\n";
    const auto p100 = qdist::count_partitions(100);
    return {csv == want && p100 == 190569292, fmt::format("table {}, p(100)={}",
                                                          csv == want ? "matches" : "differs", p100.str())};
}

Outcome table3() {
    const char* configs[] = {"000", "001", "010", "011", "100", "101", "110", "111"};
    const double want[] = {0, 0, 3.0 / 16, 3.0 / 16, 3.0 / 16, 3.0 / 16, 27.0 / 64, 27.0 / 64};
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double got = qdist::quantum_intensity(qdist::ApparatusConfig::from_string(configs[i]));
        worst = std::max(worst, std::fabs(got - want[i]));
    }
    return {worst <= 1e-12, fmt::format("max |diff| = {:.3g}", worst)};
}

Outcome example1() {
    const auto r = qdist::quantum_spectrum(3);
    const qdist::BigRational quarter(1, 4), half(1, 2);
    const bool probs = r.classes.size() == 3 && r.classes[0].probability_exact() == quarter &&
                       r.classes[1].probability_exact() == half &&
                       r.classes[2].probability_exact() == quarter;
    const double err = std::fabs(r.entropy_bits - 1.5);
    return {probs && err <= 1e-12,
            fmt::format("probabilities {}, entropy {} (|diff| {:.3g})",
                        probs ? "1/4,1/2,1/4" : "wrong", r.entropy_bits, err)};
}

Outcome conservation() {
    for (unsigned n = 1; n <= 20; ++n) {
        qdist::BigInt total = 0;
        for (const auto& lambda : qdist::enumerate_partitions(n)) total += qdist::state_count(lambda);
        if (total != (qdist::BigInt(1) << n)) return {false, fmt::format("n={}: {}", n, total.str())};
    }
    return {true, "exact for n = 1..20"};
}

Outcome oracle_equivalence() {
    double worst = 0.0;
    for (unsigned n = 1; n <= 16; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const auto c = qdist::ApparatusConfig::from_mask(n, mask);
            worst = std::max(worst, std::fabs(qdist::quantum_intensity(c) - qdist::simulate_intensity(c)));
        }
    }
    std::size_t merges = 0;
    for (unsigned n = 1; n <= 16; ++n) {
        std::string why;
        const auto fast = qdist::quantum_spectrum(n);
        if (!qdist::spectra_match(fast, qdist::brute_force_spectrum(n), 1e-12, &why)) {
            return {false, fmt::format("n={}: {}", n, why)};
        }
        merges += fast.merges.size();
    }
    return {worst <= 1e-12, fmt::format("max |diff| = {:.3g}; spectra identical; {} coincidence merge(s)",
                                        worst, merges)};
}

Outcome classical_bound() {
    for (unsigned n = 1; n <= 100; ++n) {
        if (qdist::classical_spectrum(n, 0.5).entropy_bits > std::log2(n + 1.0)) {
            return {false, fmt::format("exceeded at n={}", n)};
        }
    }
    const double h100 = qdist::classical_spectrum(100, 0.5).entropy_bits;
    const double limit = std::log2(101.0) - 0.5;
    return {h100 < limit, fmt::format("H(100) = {:.6f} < {:.6f}", h100, limit)};
}

Outcome quantum_bound() {
    const auto counts = qdist::partition_counts(200);
    double h64 = 0.0;
    for (unsigned n = 1; n <= 64; ++n) {
        const double h = qdist::quantum_entropy(n);
        if (h > qdist::log2_exact(counts[n])) return {false, fmt::format("entropy bound fails at n={}", n)};
        h64 = h;
    }
    for (unsigned n = 1; n <= 200; ++n) {
        if (qdist::log2_exact(counts[n]) > 3.7007 * std::sqrt(static_cast<double>(n))) {
            return {false, fmt::format("partition bound fails at n={}", n)};
        }
    }
    return {true, fmt::format("H(64) = {:.4f} <= log2 p(64) = {:.4f} <= {:.4f}", h64,
                              qdist::log2_exact(counts[64]), 3.7007 * 8)};
}

Outcome zeno() {
    double previous = qdist::zeno_survival(1);
    for (unsigned n = 2; n <= 10'000; ++n) {
        const double s = qdist::zeno_survival(n);
        if (s < 1 - std::numbers::pi * std::numbers::pi / (4.0 * n) || s < previous) {
            return {false, fmt::format("fails at n={}", n)};
        }
        previous = s;
    }
    const double s = qdist::zeno_survival(10'000);
    return {s >= 0.999753, fmt::format("survival(10^4) = {:.9f}", s)};
}

Outcome qubit() {
    const double h = qdist::qubit_channel_information(1.0 / 3, 1.0 / 3, 1.0 / 3);
    return {std::fabs(h - 1.585) <= 1e-3 && std::fabs(h - std::log2(3.0)) <= 1e-12,
            fmt::format("{:.12f} bits", h)};
}

Outcome series(const std::string& path) {
    const auto csv = qdist::cmd_compare(1, 40, csv_spec());
    std::ofstream(path, std::ios::binary) << csv;
    std::istringstream in(csv);
    std::string line;
    int data_rows = -1;  // header
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') ++data_rows;
    }
    const auto rows = qdist::information_series(1, 40);
    const unsigned crossover = qdist::entropy_crossover(rows);
    bool quantum_ahead_after = crossover != 0;
    for (const auto& r : rows) {
        if (crossover != 0 && r.n >= crossover && r.h_quantum <= r.h_classical) quantum_ahead_after = false;
    }
    return {data_rows == 40 && crossover != 0,
            fmt::format("{} rows -> {}; quantum entropy first exceeds classical at n={} "
                        "(H_q={:.4f} vs H_c={:.4f}){}",
                        data_rows, path, crossover, rows[crossover - 1].h_quantum,
                        rows[crossover - 1].h_classical,
                        quantum_ahead_after ? ", and stays ahead through n=40" : "")};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string series_path = argc > 1 ? argv[1] : "information_series_1_40.csv";
    const std::vector<Criterion> criteria{
        {1, "partition table and p(100)", 1.0, partition_table},
        {2, "n=3 intensities", 1.0, table3},
        {3, "n=3 class probabilities and entropy", 0, example1},
        {4, "state counts sum to 2^n, n<=20", 0, conservation},
        {5, "gap product vs simulation and spectrum vs brute force, n<=16", 60.0, oracle_equivalence},
        {6, "classical entropy below log2(n+1)", 0, classical_bound},
        {7, "quantum entropy below log2 p(n) below 3.7007 sqrt(n)", 0, quantum_bound},
        {8, "Zeno survival bound and monotonicity", 0, zeno},
        {9, "three-outcome detector information", 0, qubit},
        {10, "information series 1..40 and crossover", 0, [&] { return series(series_path); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome outcome{false, ""};
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, fmt::format("exception: {}", e.what())};
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
            outcome.passed = false;
            outcome.detail += fmt::format(" [over time limit {}s]", c.time_limit_s);
        }
        if (!outcome.passed) ++failures;
        std::cout << fmt::format("[{}] AC{:<2} {} ({:.3f}s): {}\n", outcome.passed ? "PASS" : "FAIL", c.id,
                                 c.title, seconds, outcome.detail);
    }
    std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
