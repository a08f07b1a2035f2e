#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qdist/apparatus.hpp"
#include "qdist/spectrum.hpp"

namespace qdist {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string expected;
    std::string actual;
};

struct VerifyOptions {
    /// Per-configuration intensity under test. Swapping it for a broken rule
    /// must make the table and oracle checks fail.
    std::function<double(const ApparatusConfig&)> intensity = quantum_intensity;
    unsigned oracle_n_max = 16;
    unsigned conservation_n_max = 20;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    /// One "name: ok|FAILED (expected ...; actual ...)" line per check plus a status line.
    std::string render() const;
};

VerifyReport run_verification(const VerifyOptions& options = {});

/// Class-for-class comparison: same labels, counts and order, intensities
/// within `tolerance`. On mismatch, `why` (if given) describes the first difference.
bool spectra_match(const SpectrumReport& a, const SpectrumReport& b, double tolerance,
                   std::string* why = nullptr);

}  // namespace qdist
