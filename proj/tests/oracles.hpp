#pragma once

// Test-only reference computations. None of these share code paths with
// the library routines they are used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

// p(n) by the coin-change recurrence over allowed part sizes 1..n.
inline BigInt partition_count(unsigned n) {
    std::vector<BigInt> ways(n + 1);
    ways[0] = 1;
    for (unsigned part = 1; part <= n; ++part) {
        for (unsigned total = part; total <= n; ++total) ways[total] += ways[total - part];
    }
    return ways[n];
}

// All partitions of n, found by sorting every one of the 2^(n-1) compositions.
inline std::set<std::vector<unsigned>> partitions_via_compositions(unsigned n) {
    std::set<std::vector<unsigned>> out;
    const std::uint32_t cuts = n - 1;
    for (std::uint32_t mask = 0; mask < (1U << cuts); ++mask) {
        std::vector<unsigned> parts;
        unsigned run = 1;
        for (unsigned i = 0; i < cuts; ++i) {
            if ((mask >> i) & 1U) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        std::sort(parts.begin(), parts.end(), std::greater<>{});
        out.insert(parts);
    }
    return out;
}

// Distinct orderings of the parts, doubled for the slot-n bit.
inline std::uint64_t state_count_by_permutation(std::vector<unsigned> parts) {
    std::sort(parts.begin(), parts.end());
    std::uint64_t orderings = 0;
    do {
        ++orderings;
    } while (std::next_permutation(parts.begin(), parts.end()));
    return 2 * orderings;
}

// Gap lengths read straight off a bit mask (bit i = slot i + 1).
inline std::vector<unsigned> gaps_of_mask(unsigned n, std::uint64_t mask) {
    std::vector<unsigned> out;
    unsigned last = 0;
    for (unsigned slot = 1; slot <= n; ++slot) {
        if ((mask >> (slot - 1)) & 1U) {
            out.push_back(slot - last);
            last = slot;
        }
    }
    if (last < n) out.push_back(n - last);
    return out;
}

inline double plain_entropy(const std::vector<double>& p) {
    double h = 0.0;
    for (double x : p) {
        if (x > 0) h += x * std::log2(1.0 / x);
    }
    return h;
}

// Classical class probabilities by popcount over all 2^n configurations.
inline std::vector<double> classical_probabilities(unsigned n) {
    std::vector<std::uint64_t> hits(n + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        ++hits[static_cast<unsigned>(__builtin_popcountll(mask))];
    }
    std::vector<double> p;
    for (auto h : hits) p.push_back(std::ldexp(static_cast<double>(h), -static_cast<int>(n)));
    return p;
}

}  // namespace oracle
