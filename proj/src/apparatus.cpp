#include "qdist/apparatus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace qdist {

ApparatusConfig::ApparatusConfig(std::vector<bool> present) : present_(std::move(present)) {
    if (present_.empty()) {
        throw std::invalid_argument("apparatus needs at least one stage");
    }
}

ApparatusConfig ApparatusConfig::from_string(std::string_view bits) {
    std::vector<bool> present;
    present.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument(
                fmt::format("apparatus string may only contain 0 and 1, got '{}'", bits));
        }
        present.push_back(c == '1');
    }
    return ApparatusConfig(std::move(present));
}

ApparatusConfig ApparatusConfig::from_mask(unsigned n, std::uint64_t mask) {
    if (n == 0 || n > 64) {
        throw std::invalid_argument(fmt::format("from_mask needs 1 <= n <= 64, got {}", n));
    }
    if (n < 64 && (mask >> n) != 0) {
        throw std::invalid_argument("mask has bits beyond slot n");
    }
    std::vector<bool> present(n);
    for (unsigned i = 0; i < n; ++i) {
        present[i] = ((mask >> i) & 1U) != 0;
    }
    return ApparatusConfig(std::move(present));
}

unsigned ApparatusConfig::installed_count() const noexcept {
    return static_cast<unsigned>(std::count(present_.begin(), present_.end(), true));
}

std::string ApparatusConfig::to_string() const {
    std::string out;
    out.reserve(present_.size());
    for (bool bit : present_) out.push_back(bit ? '1' : '0');
    return out;
}

void PolarizationState::rotate(double angle) noexcept {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double h = c * amp_h - s * amp_v;
    const double v = s * amp_h + c * amp_v;
    amp_h = h;
    amp_v = v;
}

GapComposition gaps(const ApparatusConfig& config) {
    GapComposition out;
    out.n = config.n();
    unsigned run = 0;
    for (unsigned i = 0; i < config.n(); ++i) {
        ++run;
        if (config.present(i)) {
            out.parts.push_back(run);
            run = 0;
        }
    }
    if (run > 0) {
        out.parts.push_back(run);
    }
    return out;
}

double gap_transmission(unsigned gap, unsigned n) {
    if (gap == n) {
        return 0.0;
    }
    const double c = std::cos(static_cast<double>(gap) * std::numbers::pi / (2.0 * n));
    return c * c;
}

double intensity_of_gaps(std::span<const unsigned> gap_parts, unsigned n) {
    double product = 1.0;
    for (unsigned g : gap_parts) {
        product *= gap_transmission(g, n);
    }
    return product;
}

double quantum_intensity(const ApparatusConfig& config) {
    const auto composition = gaps(config);
    return intensity_of_gaps(composition.parts, composition.n);
}

double simulate_intensity(const ApparatusConfig& config) {
    const double step = std::numbers::pi / (2.0 * config.n());
    PolarizationState photon;
    for (unsigned i = 0; i < config.n(); ++i) {
        photon.rotate(step);
        if (config.present(i)) {
            photon.project_horizontal();
        }
    }
    photon.project_horizontal();  // detector D
    return photon.norm_squared();
}

void require_valid_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument(
            fmt::format("classical attenuation alpha must lie in (0, 1), got {}", alpha));
    }
}

double classical_intensity(const ApparatusConfig& config, double alpha) {
    require_valid_alpha(alpha);
    return std::pow(alpha, static_cast<double>(config.installed_count()));
}

double zeno_survival(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("zeno_survival requires n >= 1");
    }
    // n * log(cos^2 x) via log1p(-sin^2 x) keeps precision when x is tiny
    const double s = std::sin(std::numbers::pi / (2.0 * n));
    return std::exp(static_cast<double>(n) * std::log1p(-s * s));
}

double zeno_approximation(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("zeno_approximation requires n >= 1");
    }
    return 1.0 - std::numbers::pi * std::numbers::pi / (4.0 * n);
}

}  // namespace qdist
