#pragma once

#include <ostream>
#include <span>
#include <string>

#include "qdist/output.hpp"
#include "qdist/spectrum.hpp"

namespace qdist {

/// Default classical attenuation per installed unit.
inline constexpr double kDefaultAlpha = 0.5;

// Each command returns its rendered output and throws on invalid input
// (std::invalid_argument, CapacityError).

std::string cmd_partitions(unsigned n_max, const OutputSpec& spec);
std::string cmd_spectrum(unsigned n, SpectrumKind kind, double alpha, const OutputSpec& spec);
std::string cmd_compare(unsigned n_min, unsigned n_max, const OutputSpec& spec);
std::string cmd_zeno(std::span<const unsigned> ns, const OutputSpec& spec);

/// Writes to spec.destination, or to `console` when no destination is set.
void write_output(const std::string& text, const OutputSpec& spec, std::ostream& console);

}  // namespace qdist
