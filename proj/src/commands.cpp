#include "qdist/commands.hpp"

#include <fstream>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace qdist {

std::string cmd_partitions(unsigned n_max, const OutputSpec& spec) {
    if (n_max == 0) {
        throw std::invalid_argument("--n-max must be at least 1");
    }
    const auto counts = partition_counts(n_max);
    return render_partition_table(counts, spec);
}

std::string cmd_spectrum(unsigned n, SpectrumKind kind, double alpha, const OutputSpec& spec) {
    const auto report =
        kind == SpectrumKind::quantum ? quantum_spectrum(n) : classical_spectrum(n, alpha);
    return render_spectrum(report, spec);
}

std::string cmd_compare(unsigned n_min, unsigned n_max, const OutputSpec& spec) {
    const auto rows = information_series(n_min, n_max);
    return render_series(rows, spec);
}

std::string cmd_zeno(std::span<const unsigned> ns, const OutputSpec& spec) {
    if (ns.empty()) {
        throw std::invalid_argument("zeno needs at least one n");
    }
    std::vector<ZenoRow> rows;
    rows.reserve(ns.size());
    for (unsigned n : ns) rows.push_back(zeno_row(n));
    return render_zeno(rows, spec);
}

void write_output(const std::string& text, const OutputSpec& spec, std::ostream& console) {
    if (spec.destination.empty()) {
        console << text;
        console.flush();
        return;
    }
    std::ofstream file(spec.destination, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::runtime_error(fmt::format("cannot open '{}' for writing", spec.destination));
    }
    file << text;
    if (!file) {
        throw std::runtime_error(fmt::format("failed writing '{}'", spec.destination));
    }
}

}  // namespace qdist
