#include "cli_app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "betscan/csv_io.hpp"
#include "betscan/fixture.hpp"
#include "betscan/pipeline.hpp"
#include "betscan/report_json.hpp"

namespace betscan::cli {
namespace {

namespace fs = std::filesystem;

struct ConfigFlags {
    std::size_t min_points = Config{}.min_points;
    double min_r2 = Config{}.min_r_squared;
    double tolerance_pct = Config{}.monolayer_tolerance_pct;
    double cross_section = Config{}.cross_section_nm2;
    UptakeUnit unit = UptakeUnit::MmolPerGram;

    Config to_config() const {
        Config cfg;
        cfg.min_points = min_points;
        cfg.min_r_squared = min_r2;
        cfg.monolayer_tolerance_pct = tolerance_pct;
        cfg.cross_section_nm2 = cross_section;
        cfg.uptake_unit_scale = uptake_unit_scale(unit);
        return cfg;
    }
};

void add_config_flags(CLI::App& cmd, ConfigFlags& flags) {
    cmd.add_option("--min-points", flags.min_points, "Minimum points per fitting window")->capture_default_str();
    cmd.add_option("--min-r2", flags.min_r2, "Minimum coefficient of determination")->capture_default_str();
    cmd.add_option("--tolerance-pct", flags.tolerance_pct, "Monolayer pressure tolerance in percent")
        ->capture_default_str();
    cmd.add_option("--cross-section", flags.cross_section, "Adsorbate cross-section in nm^2")->capture_default_str();
    const std::map<std::string, UptakeUnit> units{{"mmol_g", UptakeUnit::MmolPerGram},
                                                  {"mol_g", UptakeUnit::MolPerGram},
                                                  {"cm3stp_g", UptakeUnit::Cm3StpPerGram}};
    cmd.add_option("--uptake-unit", flags.unit, "Uptake unit of the input (mmol_g, mol_g, cm3stp_g)")
        ->transform(CLI::CheckedTransformer(units, CLI::ignore_case))
        ->default_str("mmol_g");
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

int run_analyze(const std::string& input, const std::string& out_path, const std::string& plot_path,
                const std::string& candidates_path, const Config& cfg, std::ostream& out, std::ostream& err) {
    AnalysisReport report;
    Isotherm iso;
    try {
        iso = parse_isotherm_csv(read_file(input));
        report = analyze(iso, cfg);
    } catch (const std::exception& e) {
        err << "error: " << input << ": " << e.what() << '\n';
        return kInputError;
    }

    try {
        const std::string json = write_report_json(report);
        if (out_path.empty()) {
            out << json;
        } else {
            write_file(out_path, json);
        }
        if (!candidates_path.empty()) write_file(candidates_path, write_candidates_csv(report.candidates));
        if (!plot_path.empty()) {
            if (report.chosen) {
                write_file(plot_path, write_bet_plot_csv(iso, *report.chosen));
            } else {
                err << "warning: no admissible window; plot data not written\n";
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return report.chosen ? kSuccess : kNoAdmissibleWindow;
}

int run_compare(const std::string& reference_path, const std::string& inputs_dir, const std::string& out_path,
                const Config& cfg, std::ostream& out, std::ostream& err) {
    std::string reference_text;
    std::vector<fs::path> files;
    try {
        reference_text = read_file(reference_path);
        parse_reference_csv(reference_text);
        for (const auto& entry : fs::directory_iterator(inputs_dir)) {
            if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    std::sort(files.begin(), files.end());

    std::map<std::string, double> computed;
    for (const auto& file : files) {
        try {
            const auto report = analyze(parse_isotherm_csv(read_file(file)), cfg);
            if (report.surface_area_m2_per_g) {
                computed[file.stem().string()] = *report.surface_area_m2_per_g;
            } else {
                err << "warning: " << file.filename().string() << ": no admissible window\n";
            }
        } catch (const std::exception& e) {
            err << "warning: " << file.filename().string() << ": " << e.what() << '\n';
        }
    }

    const std::string table = write_fixture_csv(compare_fixture(reference_text, computed));
    try {
        if (out_path.empty()) {
            out << table;
        } else {
            write_file(out_path, table);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"BET surface area from adsorption isotherms by exhaustive window search", "betscan"};
    app.require_subcommand(1);

    ConfigFlags analyze_flags;
    std::string input;
    std::string out_path;
    std::string plot_path;
    std::string candidates_path;
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one isotherm CSV and emit a JSON report");
    analyze_cmd->add_option("input", input, "Isotherm CSV (relative pressure, uptake)")->required();
    add_config_flags(*analyze_cmd, analyze_flags);
    analyze_cmd->add_option("--out", out_path, "JSON report path (default: stdout)");
    analyze_cmd->add_option("--plot-data", plot_path, "Write BET plot data CSV for the chosen window");
    analyze_cmd->add_option("--candidates", candidates_path, "Write the full candidate table as CSV");

    ConfigFlags compare_flags;
    std::string reference_path;
    std::string inputs_dir;
    std::string compare_out;
    auto* compare_cmd = app.add_subcommand("compare", "Compare computed areas with a reference table");
    compare_cmd->add_option("--reference", reference_path, "Reference CSV with columns name, area")->required();
    compare_cmd->add_option("--inputs", inputs_dir, "Directory of isotherm CSVs; file stem is the name")->required();
    compare_cmd->add_option("--out", compare_out, "Comparison CSV path (default: stdout)");
    add_config_flags(*compare_cmd, compare_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    const ConfigFlags& flags = analyze_cmd->parsed() ? analyze_flags : compare_flags;
    const Config cfg = flags.to_config();
    try {
        validate_config(cfg);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    if (analyze_cmd->parsed()) return run_analyze(input, out_path, plot_path, candidates_path, cfg, out, err);
    return run_compare(reference_path, inputs_dir, compare_out, cfg, out, err);
}

}  // namespace betscan::cli
