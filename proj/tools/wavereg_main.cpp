// wavereg: multi-scale wavelet regression from the command line.
//
// Subcommands:
//   decompose     write year,raw,S_j,D_j components of one CSV column
//   analyze       fit one regression per time scale and write the report
//   gen-synthetic write a deterministic synthetic dataset for experiments
//
// Exit codes: 0 success, 1 data/numeric failure, 2 usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wavereg/wavereg.hpp"

namespace {

/// Write to the named file (atomically) or to stdout when no path given.
void emit(const std::string& path, const std::string& text) {
    if (path.empty())
        std::cout << text;
    else
        wavereg::write_text_atomic(path, text);
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

struct DecomposeArgs {
    std::string input, column, output;
    std::string wavelet = "sym8";
    std::string boundary = "periodic";
    int level = -1;  // -1: use min(5, j_max)
};

int run_decompose(const DecomposeArgs& args) {
    std::vector<std::string> warnings;
    const wavereg::TimeSeries series = wavereg::load_series(args.input, args.column, &warnings);
    print_warnings(warnings);
    if (series.size() < 2) throw wavereg::Error("need at least 2 samples to decompose");

    const wavereg::FilterBank bank = wavereg::filter_bank(args.wavelet);
    const wavereg::MaxLevels caps = wavereg::max_level(series.size(), bank.length());
    const int level = args.level >= 0 ? args.level : std::min(5, caps.j_max);
    if (level < 1) throw wavereg::Error("decomposition depth must be at least 1");
    if (level > caps.j_max) throw wavereg::LevelTooDeepError(level, caps.j_max);
    if (level > caps.j_clean)
        std::cerr << "warning: levels beyond j_clean = " << caps.j_clean
                  << " have boundary-contaminated components\n";

    const wavereg::MraDecomposition decomposition =
        wavereg::mra(series.values(), bank, level,
                     wavereg::boundary_from_string(args.boundary), series.name());
    emit(args.output, wavereg::render_decompose_csv(series, decomposition));
    return 0;
}

struct AnalyzeArgs {
    std::string input, dependent, output;
    std::vector<std::string> independents;
    std::string wavelet = "sym8";
    std::string boundary = "periodic";
    std::string format = "markdown";
    int levels = -1;  // -1: use min(5, j_max)
    std::vector<std::string> squares;
    std::vector<std::string> products;  // "A,B" pairs
    bool count_error_variance = false;
    bool aic_without_n = false;
};

int run_analyze(const AnalyzeArgs& args) {
    std::vector<std::string> warnings;
    const wavereg::AlignedDataset data =
        wavereg::load_csv(args.input, args.dependent, args.independents, &warnings);
    print_warnings(warnings);

    wavereg::AnalysisConfig config;
    config.wavelet = args.wavelet;
    if (args.levels >= 0) config.levels = args.levels;
    config.boundary = wavereg::boundary_from_string(args.boundary);
    config.basis.squares = args.squares;
    for (const auto& pair : args.products) {
        const auto comma = pair.find(',');
        if (comma == std::string::npos || comma == 0 || comma + 1 == pair.size())
            throw wavereg::Error("--product expects two column names as \"A,B\", got \"" + pair +
                                 "\"");
        config.basis.products.emplace_back(pair.substr(0, comma), pair.substr(comma + 1));
    }
    config.stats.count_error_variance = args.count_error_variance;
    config.stats.aic_without_n = args.aic_without_n;

    const wavereg::MultiScaleReport report =
        wavereg::analyze_multiscale(data, config, args.input);
    for (const auto& row : report.rows) {
        for (const auto& w : row.warnings)
            std::cerr << "warning: " << wavereg::scale_label(row.scale) << ": " << w << '\n';
        if (row.status == wavereg::RowStatus::failed) std::cerr << "error: " << row.error << '\n';
    }

    std::string text;
    if (args.format == "markdown")
        text = wavereg::render_markdown(report);
    else if (args.format == "json")
        text = wavereg::render_json(report);
    else
        text = wavereg::render_csv(report);
    emit(args.output, text);

    if (report.ranking.ranked.empty() && report.ranking.exact_fit.empty()) {
        std::cerr << "error: no scale succeeded\n";
        return 1;
    }
    return 0;
}

struct GenArgs {
    std::uint64_t seed = 42;
    std::size_t n = 128;
    double trend = 0.05;
    double noise_sd = 0.5;
    double intercept = 5.0;
    std::string output;
};

int run_gen(const GenArgs& args) {
    wavereg::GeneratorSpec spec;
    spec.n = args.n;
    spec.trend = args.trend;
    spec.noise_sd = args.noise_sd;
    spec.intercept = args.intercept;
    const wavereg::AlignedDataset data = wavereg::gen_synthetic(spec, args.seed);
    emit(args.output, wavereg::render_dataset_csv(data));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-scale wavelet regression toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Key=value config file (flags take precedence)");

    DecomposeArgs dargs;
    auto* dec = app.add_subcommand("decompose",
                                   "Decompose one column into per-scale components");
    dec->add_option("--input", dargs.input, "Input CSV path")->required();
    dec->add_option("--column", dargs.column, "Column to decompose")->required();
    dec->add_option("--wavelet", dargs.wavelet, "Filter bank")
        ->check(CLI::IsMember({"haar", "db4", "sym8"}))
        ->capture_default_str();
    dec->add_option("--level", dargs.level, "Depth J (default min(5, j_max))");
    dec->add_option("--boundary", dargs.boundary, "Boundary extension")
        ->check(CLI::IsMember({"periodic", "symmetric"}))
        ->capture_default_str();
    dec->add_option("--output", dargs.output, "Output CSV path (stdout when omitted)");

    AnalyzeArgs aargs;
    auto* ana = app.add_subcommand("analyze", "Fit one regression per time scale");
    ana->add_option("--input", aargs.input, "Input CSV path")->required();
    ana->add_option("--dependent", aargs.dependent, "Dependent column")->required();
    ana->add_option("--independent", aargs.independents, "Independent columns (comma-separated)")
        ->required()
        ->delimiter(',');
    ana->add_option("--levels", aargs.levels, "Max level J; 0 fits raw data only "
                                              "(default min(5, j_max))");
    ana->add_option("--wavelet", aargs.wavelet, "Filter bank")
        ->check(CLI::IsMember({"haar", "db4", "sym8"}))
        ->capture_default_str();
    ana->add_option("--boundary", aargs.boundary, "Boundary extension")
        ->check(CLI::IsMember({"periodic", "symmetric"}))
        ->capture_default_str();
    ana->add_option("--format", aargs.format, "Report format")
        ->check(CLI::IsMember({"markdown", "json", "csv"}))
        ->capture_default_str();
    ana->add_option("--square", aargs.squares, "Add a squared term of this column (repeatable)")
        ->delimiter(',');
    ana->add_option("--product", aargs.products,
                    "Add a product term of two columns as \"A,B\" (repeatable)");
    ana->add_flag("--count-error-variance", aargs.count_error_variance,
                  "Count the error variance in AIC's k (k = m + 2)");
    ana->add_flag("--aic-without-n", aargs.aic_without_n,
                  "Use the 2k + ln(rss/n) AIC variant");
    ana->add_option("--output", aargs.output, "Report path (stdout when omitted)");

    GenArgs gargs;
    auto* gen = app.add_subcommand("gen-synthetic", "Write a deterministic synthetic dataset");
    gen->add_option("--seed", gargs.seed, "RNG seed")->capture_default_str();
    gen->add_option("--n", gargs.n, "Sample count")->capture_default_str();
    gen->add_option("--trend", gargs.trend, "Shared trend per step")->capture_default_str();
    gen->add_option("--noise-sd", gargs.noise_sd, "Noise standard deviation")
        ->capture_default_str();
    gen->add_option("--intercept", gargs.intercept, "Dependent intercept")->capture_default_str();
    gen->add_option("--output", gargs.output, "Output CSV path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dec->parsed()) return run_decompose(dargs);
        if (ana->parsed()) return run_analyze(aargs);
        return run_gen(gargs);
    } catch (const wavereg::InvalidSpecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const wavereg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
