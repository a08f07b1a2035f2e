#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qdist {

using BigInt = boost::multiprecision::cpp_int;

/// Largest n accepted by count_partitions.
inline constexpr unsigned kMaxCountN = 10'000;
/// Largest n accepted by enumerate_partitions (p(64) = 1,741,630 classes).
inline constexpr unsigned kMaxEnumerateN = 64;

/// A partition of n: positive parts in non-increasing order summing to n.
class Partition {
public:
    /// Throws std::invalid_argument unless `parts` is non-empty, positive
    /// and non-increasing.
    explicit Partition(std::vector<unsigned> parts);

    /// Sorts arbitrary positive parts (e.g. a gap composition) into canonical order.
    static Partition from_unordered(std::vector<unsigned> parts);

    std::span<const unsigned> parts() const noexcept { return parts_; }
    unsigned n() const noexcept { return n_; }
    std::size_t size() const noexcept { return parts_.size(); }

    /// "2+1+1" style rendering.
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<unsigned> parts_;
    unsigned n_ = 0;
};

/// Exact p(n) via Euler's pentagonal-number recurrence. p(0) = 1.
/// Throws CapacityError for n > kMaxCountN.
BigInt count_partitions(unsigned n);

/// p(0), p(1), ..., p(n_max) in one pass.
std::vector<BigInt> partition_counts(unsigned n_max);

/// Walks the partitions of n in reverse-lexicographic order, starting at
/// [n] and ending at [1, 1, ..., 1].
class PartitionGenerator {
public:
    /// Throws CapacityError for n > kMaxEnumerateN, std::invalid_argument for n == 0.
    explicit PartitionGenerator(unsigned n);

    std::span<const unsigned> current() const noexcept { return parts_; }

    /// Advances to the next partition; false once the last one has been passed.
    bool next();

private:
    std::vector<unsigned> parts_;
};

template <class Visitor>
void for_each_partition(unsigned n, Visitor&& visit) {
    PartitionGenerator gen(n);
    do {
        visit(gen.current());
    } while (gen.next());
}

/// Every partition of n, once each, in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(unsigned n);

/// Number of apparatus configurations realizing `partition`:
/// 2 * m! / prod(m_j!) with m parts and m_j the multiplicity of each value.
BigInt state_count(const Partition& partition);

/// pi * sqrt(2/3) * log2(e), roughly 3.7007 bits.
double asymptotic_bits_constant();

/// sqrt(n) * asymptotic_bits_constant(); the large-n estimate of log2 p(n).
double asymptotic_log2_p(unsigned n);

/// log2 of a positive exact integer, accurate past the double range.
double log2_exact(const BigInt& value);

namespace detail {

/// state_count for the parts of a partition of n <= 64. Every such count is
/// below 2^64, and the incremental binomial product never exceeds the result.
std::uint64_t state_count_small(std::span<const unsigned> parts);

}  // namespace detail

}  // namespace qdist
