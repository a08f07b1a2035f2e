#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qdist/partitions.hpp"

namespace qdist {

using BigRational = boost::multiprecision::cpp_rational;

/// Largest n for the exhaustive 2^n sweep in brute_force_spectrum.
inline constexpr unsigned kMaxBruteForceN = 20;

/// Relative tolerance under which two class intensities are treated as one.
inline constexpr double kIntensityMergeTolerance = 1e-12;
/// Absolute floor for the same test, so that floating residue around a true
/// zero (e.g. cos(pi/2) from repeated rotations) still groups with 0.
inline constexpr double kIntensityZeroFloor = 1e-15;

bool intensities_coincide(double a, double b) noexcept;

enum class SpectrumKind { quantum, classical };

std::string to_string(SpectrumKind kind);

/// Quantum classes are labelled by a partition, classical ones by the
/// number of installed units.
using ClassLabel = std::variant<Partition, unsigned>;

std::string label_to_string(const ClassLabel& label);

/// One row of the detector spectrum: `count` of the 2^n configurations
/// land on `intensity`.
struct IntensityClass {
    double intensity = 0.0;
    ClassLabel label = 0u;
    BigInt count;
    unsigned n = 0;

    BigRational probability_exact() const;
    double probability() const;
    /// Unreduced "count/2^n" form, e.g. "4/8".
    std::string probability_fraction() const;
};

/// Two candidate classes whose intensities fell within tolerance of each other.
struct MergeEvent {
    ClassLabel kept = 0u;
    ClassLabel absorbed = 0u;
    double kept_intensity = 0.0;
    double absorbed_intensity = 0.0;
};

struct SpectrumReport {
    unsigned n = 0;
    SpectrumKind kind = SpectrumKind::quantum;
    std::vector<IntensityClass> classes;  // descending intensity
    double entropy_bits = 0.0;
    /// log2(n + 1) for classical spectra, asymptotic_log2_p(n) for quantum.
    double bound_bits = 0.0;
    /// sqrt(n): the constant-free rendering of the quantum estimate.
    double sqrt_n_bits = 0.0;
    std::vector<MergeEvent> merges;

    BigInt total_count() const;
};

/// -sum p log2 p. Rejects negative entries or a sum off 1 by more than 1e-9;
/// zero entries contribute nothing.
double entropy(std::span<const double> probabilities);

/// Probability count / 2^n as a double, without overflowing for large n.
double dyadic_to_double(const BigInt& count, unsigned n);

/// Exact quantum spectrum from the partitions of n. Requires n <= kMaxEnumerateN.
SpectrumReport quantum_spectrum(unsigned n);

/// Quantum entropy only, without materializing labels; same classes and
/// merges as quantum_spectrum.
double quantum_entropy(unsigned n);

/// Groups simulate_intensity over all 2^n configurations. Requires n <= kMaxBruteForceN.
SpectrumReport brute_force_spectrum(unsigned n);

/// Binomial class structure: class k has intensity alpha^k and C(n, k) members.
SpectrumReport classical_spectrum(unsigned n, double alpha);

struct InformationRow {
    unsigned n = 0;
    double h_classical = 0.0;
    double h_quantum = 0.0;
    double classical_bound = 0.0;  // log2(n + 1)
    double quantum_bound = 0.0;    // 3.7007 * sqrt(n)
    double ratio = 0.0;            // h_quantum / h_classical
};

/// One row per n in [n_min, n_max]; n_max <= kMaxEnumerateN.
std::vector<InformationRow> information_series(unsigned n_min, unsigned n_max);

/// First n in the rows where the quantum entropy strictly exceeds the
/// classical one, or 0 if none does.
unsigned entropy_crossover(std::span<const InformationRow> rows);

/// Entropy of the three-outcome detector (horizontal, vertical, no photon).
double qubit_channel_information(double p_h, double p_v, double p_none);

}  // namespace qdist
