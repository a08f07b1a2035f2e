// qdist: partition tables, detector spectra, information series, Zeno
// survival and a self-check for the distributed polarizer apparatus.
//
// Exit status: 0 success, 1 computation or check failure, 2 usage error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdist/commands.hpp"
#include "qdist/errors.hpp"
#include "qdist/verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct OutputFlags {
    std::string format = "table";
    int precision = 6;
    std::string out;

    qdist::OutputSpec spec() const {
        qdist::OutputSpec s;
        s.format = qdist::parse_output_format(format);
        s.precision = precision;
        s.destination = out;
        s.validate();
        return s;
    }
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
    cmd->add_option("--format", flags.format, "table | csv | json")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--precision", flags.precision, "significant digits for reals")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    cmd->add_option("--out", flags.out, "write to PATH instead of standard output");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distributed polarizer apparatus: partition spectra and information bounds"};
    app.require_subcommand(1);

    OutputFlags flags;

    unsigned partitions_n_max = 10;
    auto* partitions = app.add_subcommand("partitions", "table of p(n) for n = 1..n-max");
    partitions->add_option("--n-max", partitions_n_max, "largest n (<= 10000)")->capture_default_str();
    add_output_flags(partitions, flags);

    unsigned spectrum_n = 3;
    std::string kind = "quantum";
    double alpha = qdist::kDefaultAlpha;
    auto* spectrum = app.add_subcommand("spectrum", "detector intensity classes for one n");
    spectrum->add_option("--n", spectrum_n, "number of stages")->capture_default_str();
    spectrum->add_option("--kind", kind, "quantum | classical")
        ->check(CLI::IsMember({"quantum", "classical"}))
        ->capture_default_str();
    spectrum->add_option("--alpha", alpha, "classical attenuation per unit, in (0, 1)")
        ->capture_default_str();
    add_output_flags(spectrum, flags);

    unsigned compare_n_min = 1;
    unsigned compare_n_max = 10;
    auto* compare = app.add_subcommand("compare", "classical vs quantum information series");
    compare->add_option("--n-min", compare_n_min, "first n")->capture_default_str();
    compare->add_option("--n-max", compare_n_max, "last n (<= 64)")->capture_default_str();
    add_output_flags(compare, flags);

    std::vector<unsigned> zeno_ns{1, 3, 10, 100, 1000, 10000};
    auto* zeno = app.add_subcommand("zeno", "all-installed survival probability");
    zeno->add_option("--n", zeno_ns, "stage counts (repeat or comma-separate)")
        ->delimiter(',')
        ->capture_default_str();
    add_output_flags(zeno, flags);

    auto* verify = app.add_subcommand("verify", "run the built-in reference checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            const auto report = qdist::run_verification();
            std::cout << report.render();
            return report.all_passed() ? 0 : kExitFailure;
        }

        const auto spec = flags.spec();
        std::string text;
        if (partitions->parsed()) {
            text = qdist::cmd_partitions(partitions_n_max, spec);
        } else if (spectrum->parsed()) {
            const auto k = kind == "quantum" ? qdist::SpectrumKind::quantum
                                             : qdist::SpectrumKind::classical;
            text = qdist::cmd_spectrum(spectrum_n, k, alpha, spec);
        } else if (compare->parsed()) {
            text = qdist::cmd_compare(compare_n_min, compare_n_max, spec);
        } else if (zeno->parsed()) {
            text = qdist::cmd_zeno(zeno_ns, spec);
        }
        qdist::write_output(text, spec, std::cout);
        return 0;
    } catch (const qdist::CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}
