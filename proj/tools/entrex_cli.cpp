#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "entrex/entropy.hpp"
#include "entrex/image_io.hpp"
#include "entrex/numformat.hpp"
#include "entrex/report_io.hpp"
#include "entrex/retinex.hpp"
#include "entrex/sweep.hpp"

namespace fs = std::filesystem;

namespace {

// Exit codes: 0 success, 1 runtime/IO failure, 2 usage error.
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

std::vector<entrex::RetinexLevel> parse_levels(const std::vector<std::string>& names) {
    std::vector<entrex::RetinexLevel> levels;
    for (const auto& name : names) levels.push_back(entrex::level_from_string(name));
    return levels;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw entrex::IoError(path + ": cannot open for writing");
    return out;
}

int run_filter(const std::string& input, const std::string& output,
               const entrex::RetinexParams& params) {
    const entrex::ImageRgb8 image = entrex::load_image(input);
    const entrex::ImageRgb8 filtered = entrex::msrcr(image, params);
    entrex::save_image(filtered, output);
    const double s = entrex::shannon(entrex::to_distribution(entrex::grey_histogram(filtered)));
    std::cout << "shannon=" << entrex::format_fixed9(s) << '\n';
    return 0;
}

int run_entropy(const std::string& input, const std::optional<double>& q,
                const std::optional<double>& kappa) {
    const entrex::ImageRgb8 image = entrex::load_image(input);
    const entrex::ProbDist dist =
        entrex::to_distribution(entrex::grey_histogram(image));
    std::cout << "shannon=" << entrex::format_fixed9(entrex::shannon(dist)) << '\n';
    if (q) {
        std::cout << "tsallis=" << entrex::format_fixed9(entrex::tsallis(dist, *q)) << '\n';
    }
    if (kappa) {
        std::cout << "kaniadakis=" << entrex::format_fixed9(entrex::kaniadakis(dist, *kappa))
                  << '\n';
    }
    return 0;
}

int run_curve(const std::vector<std::string>& inputs, double kappa_max, int kappa_steps,
              const std::string& out_csv) {
    std::vector<entrex::EntropyCurve> curves;
    curves.reserve(inputs.size());
    for (const auto& path : inputs) {
        const entrex::ImageRgb8 image = entrex::load_image(path);
        curves.push_back(entrex::entropy_curve(
            entrex::to_distribution(entrex::grey_histogram(image)), kappa_max, kappa_steps));
    }
    std::vector<std::pair<std::string, const entrex::EntropyCurve*>> columns;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        columns.emplace_back(inputs[i], &curves[i]);
    }
    if (out_csv.empty()) {
        entrex::write_curve_csv(std::cout, columns);
    } else {
        auto out = open_out(out_csv);
        entrex::write_curve_csv(out, columns);
    }
    return 0;
}

struct SweepArgs {
    std::string input;
    std::vector<std::string> levels{"uniform", "low", "high"};
    std::vector<int> scales{240};
    std::vector<int> scale_divs{3};
    std::vector<double> dynamics{1.2};
    double kappa_max = 0.1;
    int kappa_steps = 11;
    std::string out_dir = ".";
    std::string report_path;  // default: <out-dir>/report.json
    std::string csv_path;     // default: <out-dir>/curves.csv
    bool save_images = false;
};

int run_sweep_cmd(const SweepArgs& args) {
    entrex::GridSpec grid;
    grid.levels = parse_levels(args.levels);
    grid.scales = args.scales;
    grid.scale_divisions = args.scale_divs;
    grid.dynamics = args.dynamics;
    grid.kappa_max = args.kappa_max;
    grid.kappa_steps = args.kappa_steps;
    entrex::validate(grid);

    const entrex::ImageRgb8 image = entrex::load_image(args.input);

    fs::path out_dir(args.out_dir);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw entrex::IoError(args.out_dir + ": cannot create output directory");
    const std::string report_path =
        args.report_path.empty() ? (out_dir / "report.json").string() : args.report_path;
    const std::string csv_path =
        args.csv_path.empty() ? (out_dir / "curves.csv").string() : args.csv_path;

    const entrex::SweepReport report = entrex::run_sweep(image, grid);

    {
        auto out = open_out(report_path);
        entrex::write_report_json(out, grid, report);
    }
    {
        std::vector<std::pair<std::string, const entrex::EntropyCurve*>> columns;
        columns.emplace_back("original", &report.original.curve);
        for (const auto& rec : report.records) {
            columns.emplace_back(entrex::variant_id(*rec.params), &rec.curve);
        }
        auto out = open_out(csv_path);
        entrex::write_curve_csv(out, columns);
    }
    if (args.save_images) {
        for (const auto& rec : report.records) {
            const entrex::ImageRgb8 filtered = entrex::msrcr(image, *rec.params);
            const fs::path path = out_dir / (entrex::variant_id(*rec.params) + ".png");
            entrex::save_image(filtered, path.string());
        }
    }

    const entrex::SweepRecord& winner = report.records[report.ranking[0]];
    const entrex::RetinexParams& wp = *winner.params;
    std::cout << "winner: level=" << entrex::to_string(wp.level) << " scale=" << wp.scale
              << " scale-div=" << wp.scale_division
              << " dynamic=" << entrex::format_shortest(wp.dynamic)
              << " shannon=" << entrex::format_fixed9(winner.shannon) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-scale retinex filtering ranked by image entropy"};
    app.require_subcommand(1);

    const std::vector<std::string> level_names{"uniform", "low", "high"};

    // filter
    auto* filter = app.add_subcommand("filter", "Apply the retinex filter to one image");
    std::string f_input, f_output, f_level = "uniform";
    entrex::RetinexParams f_params;
    filter->add_option("--input", f_input, "Input image (PNG or PPM)")->required();
    filter->add_option("--output", f_output, "Output image (.png or .ppm)")->required();
    filter->add_option("--level", f_level, "Filtering level")
        ->check(CLI::IsMember(level_names))
        ->capture_default_str();
    filter->add_option("--scale", f_params.scale, "Maximum surround scale")
        ->check(CLI::Range(3, 1 << 20))
        ->capture_default_str();
    filter->add_option("--scale-div", f_params.scale_division, "Number of scales")
        ->check(CLI::Range(1, 8))
        ->capture_default_str();
    filter->add_option("--dynamic", f_params.dynamic, "Output stretch width in std deviations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // entropy
    auto* entropy = app.add_subcommand("entropy", "Print grey-tone entropies of an image");
    std::string e_input;
    std::optional<double> e_q, e_kappa;
    entropy->add_option("--input", e_input, "Input image")->required();
    entropy->add_option("--q", e_q, "Also print the Tsallis entropy with index q")
        ->check(CLI::PositiveNumber);
    entropy->add_option("--kappa", e_kappa, "Also print the Kaniadakis entropy with index kappa")
        ->check(CLI::NonNegativeNumber);

    // curve
    auto* curve = app.add_subcommand("curve", "Entropy-vs-kappa curves as CSV");
    std::vector<std::string> c_inputs;
    double c_kappa_max = 0.1;
    int c_kappa_steps = 11;
    std::string c_out_csv;
    curve->add_option("--input", c_inputs, "Input image(s); repeatable")->required();
    curve->add_option("--kappa-max", c_kappa_max, "Upper end of the kappa grid")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    curve->add_option("--kappa-steps", c_kappa_steps, "Number of kappa samples")
        ->check(CLI::Range(2, 1 << 20))
        ->capture_default_str();
    curve->add_option("--out-csv", c_out_csv, "CSV path (stdout when omitted)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Grid-sweep the filter and rank by entropy");
    SweepArgs s_args;
    sweep->add_option("--input", s_args.input, "Input image")->required();
    sweep->add_option("--levels", s_args.levels, "Comma-separated levels")
        ->delimiter(',')
        ->check(CLI::IsMember(level_names))
        ->capture_default_str();
    sweep->add_option("--scales", s_args.scales, "Comma-separated scales")
        ->delimiter(',')
        ->check(CLI::Range(3, 1 << 20))
        ->capture_default_str();
    sweep->add_option("--scale-divs", s_args.scale_divs, "Comma-separated scale divisions")
        ->delimiter(',')
        ->check(CLI::Range(1, 8))
        ->capture_default_str();
    sweep->add_option("--dynamics", s_args.dynamics, "Comma-separated dynamic values")
        ->delimiter(',')
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep->add_option("--kappa-max", s_args.kappa_max, "Upper end of the kappa grid")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep->add_option("--kappa-steps", s_args.kappa_steps, "Number of kappa samples")
        ->check(CLI::Range(2, 1 << 20))
        ->capture_default_str();
    sweep->add_option("--out-dir", s_args.out_dir, "Directory for reports and images")
        ->capture_default_str();
    sweep->add_option("--report", s_args.report_path, "Report JSON path");
    sweep->add_option("--csv", s_args.csv_path, "Curve CSV path");
    sweep->add_flag("--save-images", s_args.save_images, "Write each filtered variant as PNG");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (filter->parsed()) {
            f_params.level = entrex::level_from_string(f_level);
            return run_filter(f_input, f_output, f_params);
        }
        if (entropy->parsed()) return run_entropy(e_input, e_q, e_kappa);
        if (curve->parsed()) return run_curve(c_inputs, c_kappa_max, c_kappa_steps, c_out_csv);
        if (sweep->parsed()) return run_sweep_cmd(s_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return 0;
}
