#pragma once

#include <span>
#include <string>
#include <string_view>

#include "qdist/partitions.hpp"
#include "qdist/spectrum.hpp"

namespace qdist {

enum class OutputFormat { table, csv, json };

OutputFormat parse_output_format(std::string_view name);

struct OutputSpec {
    OutputFormat format = OutputFormat::table;
    std::string destination;  // empty means standard output
    int precision = 6;        // significant digits for reals, 1..17

    void validate() const;
};

/// Real in %.{precision}g form; exact integers never go through this.
std::string format_real(double value, int precision);

/// Rows (n, p(n)) for n = 1 .. counts.size() - 1; counts[0] is p(0) and is skipped.
std::string render_partition_table(std::span<const BigInt> counts, const OutputSpec& spec);

std::string render_spectrum(const SpectrumReport& report, const OutputSpec& spec);

std::string render_series(std::span<const InformationRow> rows, const OutputSpec& spec);

struct ZenoRow {
    unsigned n = 0;
    double survival = 0.0;
    double approximation = 0.0;
    /// False when 1 - pi^2/(4n) falls outside [0, 1], i.e. for n <= 2.
    bool approximation_in_range = true;
};

ZenoRow zeno_row(unsigned n);

std::string render_zeno(std::span<const ZenoRow> rows, const OutputSpec& spec);

}  // namespace qdist
