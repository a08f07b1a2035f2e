#include "qdist/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <fmt/format.h>

#include "qdist/apparatus.hpp"
#include "qdist/errors.hpp"

namespace qdist {

namespace {

void require_positive_n(unsigned n, const char* what) {
    if (n == 0) {
        throw std::invalid_argument(fmt::format("{} requires n >= 1", what));
    }
}

// A pre-merge class: one partition (by enumeration rank) or one configuration.
struct Candidate {
    double intensity;
    std::uint64_t weight;
    std::uint32_t key;
};

struct Group {
    double intensity;
    std::uint64_t weight;  // sum of member weights; < 2^64 for every n <= 64
    std::uint32_t key;     // smallest member key
    std::vector<std::uint32_t> members;
};

// Sort by descending intensity (ties by key) and chain-merge neighbours
// that coincide within tolerance. A group keeps the largest intensity as its
// representative and the smallest key as its identity, so the label of a
// merged class does not depend on floating-point rounding order.
std::vector<Group> merge_candidates(std::vector<Candidate> candidates, bool keep_members) {
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.intensity != b.intensity) return a.intensity > b.intensity;
        return a.key < b.key;
    });
    std::vector<Group> groups;
    double previous = 0.0;
    for (const auto& c : candidates) {
        if (!groups.empty() && intensities_coincide(previous, c.intensity)) {
            auto& g = groups.back();
            g.weight += c.weight;
            g.key = std::min(g.key, c.key);
            if (keep_members) g.members.push_back(c.key);
        } else {
            Group g{c.intensity, c.weight, c.key, {}};
            if (keep_members) g.members.push_back(c.key);
            groups.push_back(std::move(g));
        }
        previous = c.intensity;
    }
    return groups;
}

std::vector<Candidate> quantum_candidates(unsigned n) {
    std::vector<Candidate> out;
    std::uint32_t rank = 0;
    for_each_partition(n, [&](std::span<const unsigned> parts) {
        out.push_back({intensity_of_gaps(parts, n), detail::state_count_small(parts), rank++});
    });
    return out;
}

double entropy_of_groups(const std::vector<Group>& groups, unsigned n) {
    std::vector<double> probabilities;
    probabilities.reserve(groups.size());
    for (const auto& g : groups) {
        probabilities.push_back(std::ldexp(static_cast<double>(g.weight), -static_cast<int>(n)));
    }
    return entropy(probabilities);
}

}  // namespace

bool intensities_coincide(double a, double b) noexcept {
    const double diff = std::fabs(a - b);
    return diff <= kIntensityZeroFloor ||
           diff <= kIntensityMergeTolerance * std::max(std::fabs(a), std::fabs(b));
}

std::string to_string(SpectrumKind kind) {
    return kind == SpectrumKind::quantum ? "quantum" : "classical";
}

std::string label_to_string(const ClassLabel& label) {
    if (const auto* p = std::get_if<Partition>(&label)) {
        return p->to_string();
    }
    return fmt::format("k={}", std::get<unsigned>(label));
}

BigRational IntensityClass::probability_exact() const {
    BigInt denominator = 1;
    denominator <<= n;
    return BigRational(count, denominator);
}

double IntensityClass::probability() const {
    return dyadic_to_double(count, n);
}

std::string IntensityClass::probability_fraction() const {
    BigInt denominator = 1;
    denominator <<= n;
    return count.str() + "/" + denominator.str();
}

BigInt SpectrumReport::total_count() const {
    BigInt total = 0;
    for (const auto& c : classes) total += c.count;
    return total;
}

double dyadic_to_double(const BigInt& count, unsigned n) {
    if (count < 0) {
        throw std::invalid_argument("dyadic_to_double requires a nonnegative count");
    }
    if (count == 0) {
        return 0.0;
    }
    const auto top = static_cast<long>(boost::multiprecision::msb(count));
    const long shift = std::max(0L, top - 62);
    const BigInt head = count >> shift;
    return std::ldexp(head.convert_to<double>(), static_cast<int>(shift - static_cast<long>(n)));
}

double entropy(std::span<const double> probabilities) {
    double sum = 0.0;
    for (double p : probabilities) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw std::invalid_argument(fmt::format("probability {} is not a nonnegative number", p));
        }
        sum += p;
    }
    if (std::fabs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument(fmt::format("probabilities sum to {}, expected 1", sum));
    }
    double h = 0.0;
    for (double p : probabilities) {
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

SpectrumReport quantum_spectrum(unsigned n) {
    require_positive_n(n, "quantum_spectrum");
    if (n > kMaxEnumerateN) {
        throw CapacityError(fmt::format(
            "quantum spectrum is capped at n <= {} (requested {})", kMaxEnumerateN, n));
    }
    const auto groups = merge_candidates(quantum_candidates(n), /*keep_members=*/true);

    // Regenerate the partitions once to attach labels by enumeration rank.
    constexpr std::uint32_t kUnused = UINT32_MAX;
    std::vector<std::uint32_t> group_of_rank;
    std::unordered_map<std::uint32_t, std::size_t> merge_slot;
    SpectrumReport report;
    report.n = n;
    report.kind = SpectrumKind::quantum;
    report.classes.resize(groups.size());
    std::size_t total_ranks = 0;
    for (const auto& g : groups) total_ranks += g.members.size();
    group_of_rank.assign(total_ranks, kUnused);
    for (std::size_t i = 0; i < groups.size(); ++i) {
        group_of_rank[groups[i].key] = static_cast<std::uint32_t>(i);
        auto& cls = report.classes[i];
        cls.intensity = groups[i].intensity;
        cls.count = groups[i].weight;
        cls.n = n;
        for (auto member : groups[i].members) {
            if (member == groups[i].key) continue;
            merge_slot.emplace(member, report.merges.size());
            report.merges.push_back({0u, 0u, groups[i].intensity, 0.0});
        }
    }

    std::uint32_t rank = 0;
    for_each_partition(n, [&](std::span<const unsigned> parts) {
        const auto r = rank++;
        if (const auto g = group_of_rank[r]; g != kUnused) {
            report.classes[g].label = Partition(std::vector<unsigned>(parts.begin(), parts.end()));
        } else if (auto it = merge_slot.find(r); it != merge_slot.end()) {
            auto& event = report.merges[it->second];
            event.absorbed = Partition(std::vector<unsigned>(parts.begin(), parts.end()));
            event.absorbed_intensity = intensity_of_gaps(parts, n);
        }
    });
    for (std::size_t i = 0, e = 0; i < groups.size(); ++i) {
        for (std::size_t m = 1; m < groups[i].members.size(); ++m, ++e) {
            report.merges[e].kept = report.classes[i].label;
        }
    }

    report.entropy_bits = entropy_of_groups(groups, n);
    report.bound_bits = asymptotic_log2_p(n);
    report.sqrt_n_bits = std::sqrt(static_cast<double>(n));
    return report;
}

double quantum_entropy(unsigned n) {
    require_positive_n(n, "quantum_entropy");
    if (n > kMaxEnumerateN) {
        throw CapacityError(fmt::format(
            "quantum spectrum is capped at n <= {} (requested {})", kMaxEnumerateN, n));
    }
    return entropy_of_groups(merge_candidates(quantum_candidates(n), false), n);
}

SpectrumReport brute_force_spectrum(unsigned n) {
    require_positive_n(n, "brute_force_spectrum");
    if (n > kMaxBruteForceN) {
        throw CapacityError(fmt::format(
            "brute-force spectrum is capped at n <= {} (requested {})", kMaxBruteForceN, n));
    }
    const std::uint32_t configs = 1U << n;
    std::vector<Candidate> candidates;
    candidates.reserve(configs);
    for (std::uint32_t mask = 0; mask < configs; ++mask) {
        candidates.push_back({simulate_intensity(ApparatusConfig::from_mask(n, mask)), 1, mask});
    }
    const auto groups = merge_candidates(std::move(candidates), true);

    auto label_of = [n](std::uint32_t mask) {
        return Partition::from_unordered(gaps(ApparatusConfig::from_mask(n, mask)).parts);
    };

    SpectrumReport report;
    report.n = n;
    report.kind = SpectrumKind::quantum;
    for (const auto& g : groups) {
        // distinct gap partitions in the group, canonical-first one kept
        std::vector<std::pair<Partition, std::uint32_t>> distinct;
        for (auto mask : g.members) {
            auto label = label_of(mask);
            const auto seen = std::find_if(distinct.begin(), distinct.end(),
                                           [&](const auto& d) { return d.first == label; });
            if (seen == distinct.end()) distinct.emplace_back(std::move(label), mask);
        }
        std::sort(distinct.begin(), distinct.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        IntensityClass cls;
        cls.intensity = g.intensity;
        cls.label = distinct.front().first;
        cls.count = g.weight;
        cls.n = n;
        for (std::size_t d = 1; d < distinct.size(); ++d) {
            report.merges.push_back(
                {distinct.front().first, distinct[d].first, g.intensity,
                 simulate_intensity(ApparatusConfig::from_mask(n, distinct[d].second))});
        }
        report.classes.push_back(std::move(cls));
    }
    report.entropy_bits = entropy_of_groups(groups, n);
    report.bound_bits = asymptotic_log2_p(n);
    report.sqrt_n_bits = std::sqrt(static_cast<double>(n));
    return report;
}

SpectrumReport classical_spectrum(unsigned n, double alpha) {
    require_positive_n(n, "classical_spectrum");
    require_valid_alpha(alpha);
    if (n > kMaxCountN) {
        throw CapacityError(fmt::format(
            "classical spectrum is capped at n <= {} (requested {})", kMaxCountN, n));
    }
    SpectrumReport report;
    report.n = n;
    report.kind = SpectrumKind::classical;
    report.classes.reserve(n + 1);
    std::vector<double> probabilities;
    probabilities.reserve(n + 1);
    BigInt binom = 1;
    for (unsigned k = 0; k <= n; ++k) {
        IntensityClass cls;
        cls.intensity = std::pow(alpha, static_cast<double>(k));
        cls.label = k;
        cls.count = binom;
        cls.n = n;
        probabilities.push_back(cls.probability());
        report.classes.push_back(std::move(cls));
        binom *= n - k;
        binom /= k + 1;
    }
    report.entropy_bits = entropy(probabilities);
    report.bound_bits = std::log2(static_cast<double>(n) + 1.0);
    report.sqrt_n_bits = std::sqrt(static_cast<double>(n));
    return report;
}

std::vector<InformationRow> information_series(unsigned n_min, unsigned n_max) {
    require_positive_n(n_min, "information_series");
    if (n_min > n_max) {
        throw std::invalid_argument(
            fmt::format("information_series needs n_min <= n_max, got {} > {}", n_min, n_max));
    }
    if (n_max > kMaxEnumerateN) {
        throw CapacityError(fmt::format(
            "information series is capped at n <= {} (requested {})", kMaxEnumerateN, n_max));
    }
    std::vector<InformationRow> rows;
    for (unsigned n = n_min; n <= n_max; ++n) {
        InformationRow row;
        row.n = n;
        // class structure is alpha-independent, any alpha in (0, 1) will do
        row.h_classical = classical_spectrum(n, 0.5).entropy_bits;
        row.h_quantum = quantum_entropy(n);
        row.classical_bound = std::log2(static_cast<double>(n) + 1.0);
        row.quantum_bound = asymptotic_log2_p(n);
        row.ratio = row.h_quantum / row.h_classical;
        rows.push_back(row);
    }
    return rows;
}

unsigned entropy_crossover(std::span<const InformationRow> rows) {
    for (const auto& row : rows) {
        if (row.h_quantum > row.h_classical) return row.n;
    }
    return 0;
}

double qubit_channel_information(double p_h, double p_v, double p_none) {
    const double probabilities[] = {p_h, p_v, p_none};
    return entropy(probabilities);
}

}  // namespace qdist
