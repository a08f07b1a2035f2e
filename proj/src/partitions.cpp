#include "qdist/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "qdist/errors.hpp"

namespace qdist {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) {
        throw std::invalid_argument("partition must have at least one part");
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be non-increasing");
        }
        n_ += parts_[i];
    }
}

Partition Partition::from_unordered(std::vector<unsigned> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>{});
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    return fmt::format("{}", fmt::join(parts_, "+"));
}

std::vector<BigInt> partition_counts(unsigned n_max) {
    if (n_max > kMaxCountN) {
        throw CapacityError(fmt::format(
            "partition counting is capped at n <= {} (requested {})", kMaxCountN, n_max));
    }
    std::vector<BigInt> p(n_max + 1);
    p[0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        BigInt sum = 0;
        for (unsigned k = 1;; ++k) {
            const unsigned lo = k * (3 * k - 1) / 2;
            if (lo > n) break;
            const unsigned hi = k * (3 * k + 1) / 2;
            BigInt term = p[n - lo];
            if (hi <= n) term += p[n - hi];
            if (k % 2 == 1) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        p[n] = std::move(sum);
    }
    return p;
}

BigInt count_partitions(unsigned n) {
    return partition_counts(n).back();
}

PartitionGenerator::PartitionGenerator(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("cannot enumerate partitions of 0");
    }
    if (n > kMaxEnumerateN) {
        throw CapacityError(fmt::format(
            "partition enumeration is capped at n <= {} (requested {})", kMaxEnumerateN, n));
    }
    parts_.reserve(n);
    parts_.push_back(n);
}

bool PartitionGenerator::next() {
    unsigned freed = 0;
    while (!parts_.empty() && parts_.back() == 1) {
        parts_.pop_back();
        ++freed;
    }
    if (parts_.empty()) {
        return false;
    }
    const unsigned k = --parts_.back();
    unsigned rest = freed + 1;
    while (rest > k) {
        parts_.push_back(k);
        rest -= k;
    }
    parts_.push_back(rest);
    return true;
}

std::vector<Partition> enumerate_partitions(unsigned n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](std::span<const unsigned> parts) {
        out.emplace_back(std::vector<unsigned>(parts.begin(), parts.end()));
    });
    return out;
}

BigInt state_count(const Partition& partition) {
    // multinomial m! / prod(m_j!) as a product of binomials over runs of equal parts
    const auto parts = partition.parts();
    BigInt result = 2;
    unsigned placed = 0;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const auto run = static_cast<unsigned>(j - i);
        BigInt binom = 1;
        for (unsigned t = 1; t <= run; ++t) {
            binom *= placed + t;
            binom /= t;
        }
        result *= binom;
        placed += run;
        i = j;
    }
    return result;
}

double asymptotic_bits_constant() {
    return std::numbers::pi * std::sqrt(2.0 / 3.0) * std::numbers::log2e;
}

double asymptotic_log2_p(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("asymptotic_log2_p requires n >= 1");
    }
    return std::sqrt(static_cast<double>(n)) * asymptotic_bits_constant();
}

double log2_exact(const BigInt& value) {
    if (value <= 0) {
        throw std::invalid_argument("log2_exact requires a positive value");
    }
    const auto top = static_cast<long>(boost::multiprecision::msb(value));
    if (top < 62) {
        return std::log2(value.convert_to<double>());
    }
    const long shift = top - 62;
    const BigInt head = value >> shift;
    return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

namespace detail {

std::uint64_t state_count_small(std::span<const unsigned> parts) {
    __extension__ typedef unsigned __int128 u128;
    const unsigned total = std::accumulate(parts.begin(), parts.end(), 0u);
    if (total > kMaxEnumerateN) {
        throw CapacityError("state_count_small only covers partitions of n <= 64");
    }
    u128 result = 1;
    unsigned placed = 0;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const auto run = static_cast<unsigned>(j - i);
        u128 binom = 1;
        for (unsigned t = 1; t <= run; ++t) {
            binom = binom * (placed + t) / t;
        }
        result *= binom;
        placed += run;
        i = j;
    }
    return static_cast<std::uint64_t>(2 * result);
}

}  // namespace detail

}  // namespace qdist
