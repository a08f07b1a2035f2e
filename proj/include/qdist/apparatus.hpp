#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qdist {

/// One of the 2^n ways to populate the n horizontal-polarizer slots of the
/// rotator chain. Slot 1 sits after the first rotator, slot n right before D.
class ApparatusConfig {
public:
    /// Throws std::invalid_argument when `present` is empty.
    explicit ApparatusConfig(std::vector<bool> present);

    /// "010" means slot 2 installed, slots 1 and 3 missing.
    static ApparatusConfig from_string(std::string_view bits);

    /// Bit i of `mask` (LSB = bit 0) is slot i + 1. Requires 1 <= n <= 64.
    static ApparatusConfig from_mask(unsigned n, std::uint64_t mask);

    unsigned n() const noexcept { return static_cast<unsigned>(present_.size()); }
    bool present(unsigned slot_index) const { return present_.at(slot_index); }
    unsigned installed_count() const noexcept;
    std::string to_string() const;

    friend bool operator==(const ApparatusConfig&, const ApparatusConfig&) = default;

private:
    std::vector<bool> present_;
};

/// Ordered distances (in rotator stages) between consecutive analyzing events.
struct GapComposition {
    std::vector<unsigned> parts;
    unsigned n = 0;

    friend bool operator==(const GapComposition&, const GapComposition&) = default;
};

/// Real Jones vector of the photon; rotations and horizontal projections keep it real.
struct PolarizationState {
    double amp_h = 1.0;
    double amp_v = 0.0;

    void rotate(double angle) noexcept;
    void project_horizontal() noexcept { amp_v = 0.0; }
    double norm_squared() const noexcept { return amp_h * amp_h + amp_v * amp_v; }
};

/// Gap structure of `config`. D always closes the last gap, so a present
/// slot n contributes nothing extra.
GapComposition gaps(const ApparatusConfig& config);

/// cos^2(g * pi / (2n)), exactly 0 when g == n.
double gap_transmission(unsigned gap, unsigned n);

/// Product of gap_transmission over any gap list (order-free).
double intensity_of_gaps(std::span<const unsigned> gap_parts, unsigned n);

/// Transmission through the chain under the gap-product rule.
double quantum_intensity(const ApparatusConfig& config);

/// Step-by-step Jones simulation: rotate by pi/(2n) per stage, project at
/// every installed polarizer, project at D, return |amp_h|^2.
double simulate_intensity(const ApparatusConfig& config);

/// alpha^k for k installed units. Throws std::invalid_argument unless 0 < alpha < 1.
double classical_intensity(const ApparatusConfig& config, double alpha);

/// (cos^2(pi / 2n))^n, the all-installed transmission.
double zeno_survival(unsigned n);

/// 1 - pi^2 / (4n), the large-n expansion of zeno_survival.
double zeno_approximation(unsigned n);

void require_valid_alpha(double alpha);

}  // namespace qdist
