#include "qdist/output.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "qdist/apparatus.hpp"

namespace qdist {

namespace {

using json = nlohmann::ordered_json;

struct TextTable {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> footer;
};

std::string render_aligned(const TextTable& t) {
    std::vector<std::size_t> width(t.headers.size());
    for (std::size_t c = 0; c < t.headers.size(); ++c) width[c] = t.headers[c].size();
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    auto emit_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) out += "  ";
            out += fmt::format("{:>{}}", cells[c], width[c]);
        }
        out += '\n';
    };
    emit_row(t.headers);
    std::size_t rule = 0;
    for (auto w : width) rule += w;
    rule += 2 * (width.empty() ? 0 : width.size() - 1);
    out += std::string(rule, '-');
    out += '\n';
    for (const auto& row : t.rows) emit_row(row);
    if (!t.footer.empty()) {
        out += '\n';
        for (const auto& [key, value] : t.footer) out += fmt::format("{}: {}\n", key, value);
    }
    return out;
}

// Comma separated, header row, LF endings; footer entries become "# key=value" lines.
std::string render_csv(const TextTable& t) {
    std::string out = fmt::format("{}\n", fmt::join(t.headers, ","));
    for (const auto& row : t.rows) out += fmt::format("{}\n", fmt::join(row, ","));
    for (const auto& [key, value] : t.footer) out += fmt::format("# {}={}\n", key, value);
    return out;
}

std::string render_text(const TextTable& t, OutputFormat format) {
    return format == OutputFormat::csv ? render_csv(t) : render_aligned(t);
}

double rounded(double value, int precision) {
    return std::stod(format_real(value, precision));
}

std::string dump(const json& doc) {
    return doc.dump(2) + "\n";
}

json label_json(const ClassLabel& label) {
    if (const auto* p = std::get_if<Partition>(&label)) {
        return json(std::vector<unsigned>(p->parts().begin(), p->parts().end()));
    }
    return json(std::get<unsigned>(label));
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
    if (name == "table") return OutputFormat::table;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument(fmt::format("unknown output format '{}'", name));
}

void OutputSpec::validate() const {
    if (precision < 1 || precision > 17) {
        throw std::invalid_argument(
            fmt::format("precision must be between 1 and 17, got {}", precision));
    }
}

std::string format_real(double value, int precision) {
    if (value == 0.0) return "0";  // folds -0
    return fmt::format("{:.{}g}", value, precision);
}

std::string render_partition_table(std::span<const BigInt> counts, const OutputSpec& spec) {
    spec.validate();
    if (spec.format == OutputFormat::json) {
        json rows = json::array();
        for (std::size_t n = 1; n < counts.size(); ++n) {
            rows.push_back({{"n", n}, {"p", counts[n].str()}});
        }
        return dump(json{{"rows", rows}});
    }
    TextTable t;
    t.headers = {"n", "p(n)"};
    for (std::size_t n = 1; n < counts.size(); ++n) {
        t.rows.push_back({std::to_string(n), counts[n].str()});
    }
    return render_text(t, spec.format);
}

std::string render_spectrum(const SpectrumReport& report, const OutputSpec& spec) {
    spec.validate();
    const int prec = spec.precision;
    if (spec.format == OutputFormat::json) {
        json classes = json::array();
        for (const auto& c : report.classes) {
            classes.push_back({
                {"label", label_json(c.label)},
                {"intensity", rounded(c.intensity, prec)},
                {"count", c.count.str()},
                {"probability", rounded(c.probability(), prec)},
                {"probability_exact", c.probability_fraction()},
            });
        }
        json merges = json::array();
        for (const auto& m : report.merges) {
            merges.push_back({
                {"kept", label_json(m.kept)},
                {"absorbed", label_json(m.absorbed)},
                {"kept_intensity", rounded(m.kept_intensity, prec)},
                {"absorbed_intensity", rounded(m.absorbed_intensity, prec)},
            });
        }
        return dump(json{
            {"n", report.n},
            {"kind", to_string(report.kind)},
            {"classes", classes},
            {"entropy_bits", rounded(report.entropy_bits, prec)},
            {"bound_bits", rounded(report.bound_bits, prec)},
            {"sqrt_n_bits", rounded(report.sqrt_n_bits, prec)},
            {"merges", merges},
        });
    }
    TextTable t;
    t.headers = {"label", "intensity", "count", "probability", "probability_exact"};
    for (const auto& c : report.classes) {
        t.rows.push_back({label_to_string(c.label), format_real(c.intensity, prec), c.count.str(),
                          format_real(c.probability(), prec), c.probability_fraction()});
    }
    t.footer = {
        {"n", std::to_string(report.n)},
        {"kind", to_string(report.kind)},
        {"classes", std::to_string(report.classes.size())},
        {"entropy_bits", format_real(report.entropy_bits, prec)},
        {"bound_bits", format_real(report.bound_bits, prec)},
        {"sqrt_n_bits", format_real(report.sqrt_n_bits, prec)},
        {"merges", std::to_string(report.merges.size())},
    };
    for (const auto& m : report.merges) {
        t.footer.emplace_back("merged", fmt::format("{} into {}", label_to_string(m.absorbed),
                                                    label_to_string(m.kept)));
    }
    return render_text(t, spec.format);
}

std::string render_series(std::span<const InformationRow> rows, const OutputSpec& spec) {
    spec.validate();
    const int prec = spec.precision;
    const unsigned crossover = entropy_crossover(rows);
    if (spec.format == OutputFormat::json) {
        json out = json::array();
        for (const auto& r : rows) {
            out.push_back({
                {"n", r.n},
                {"h_classical", rounded(r.h_classical, prec)},
                {"h_quantum", rounded(r.h_quantum, prec)},
                {"log2_n_plus_1", rounded(r.classical_bound, prec)},
                {"quantum_bound", rounded(r.quantum_bound, prec)},
                {"ratio", rounded(r.ratio, prec)},
            });
        }
        json crossover_json = crossover == 0 ? json(nullptr) : json(crossover);
        return dump(json{{"rows", out}, {"crossover_n", crossover_json}});
    }
    TextTable t;
    t.headers = {"n", "h_classical", "h_quantum", "log2_n_plus_1", "quantum_bound", "ratio"};
    for (const auto& r : rows) {
        t.rows.push_back({std::to_string(r.n), format_real(r.h_classical, prec),
                          format_real(r.h_quantum, prec), format_real(r.classical_bound, prec),
                          format_real(r.quantum_bound, prec), format_real(r.ratio, prec)});
    }
    t.footer = {{"crossover_n", crossover == 0 ? "none" : std::to_string(crossover)}};
    return render_text(t, spec.format);
}

ZenoRow zeno_row(unsigned n) {
    ZenoRow row;
    row.n = n;
    row.survival = zeno_survival(n);
    row.approximation = zeno_approximation(n);
    row.approximation_in_range = row.approximation >= 0.0 && row.approximation <= 1.0;
    return row;
}

std::string render_zeno(std::span<const ZenoRow> rows, const OutputSpec& spec) {
    spec.validate();
    const int prec = spec.precision;
    if (spec.format == OutputFormat::json) {
        json out = json::array();
        for (const auto& r : rows) {
            out.push_back({
                {"n", r.n},
                {"survival", rounded(r.survival, prec)},
                {"approximation", rounded(r.approximation, prec)},
                {"approximation_in_range", r.approximation_in_range},
            });
        }
        return dump(json{{"rows", out}});
    }
    TextTable t;
    t.headers = {"n", "survival", "approximation", "approximation_in_range"};
    for (const auto& r : rows) {
        t.rows.push_back({std::to_string(r.n), format_real(r.survival, prec),
                          format_real(r.approximation, prec),
                          r.approximation_in_range ? "true" : "false"});
    }
    return render_text(t, spec.format);
}

}  // namespace qdist
