// Command-line driver: approx1d, image, reproduce-tables.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "kantorovich/csv.hpp"
#include "kantorovich/error.hpp"
#include "kantorovich/experiments.hpp"
#include "kantorovich/parallel.hpp"
#include "kantorovich/pgm.hpp"

namespace fs = std::filesystem;
using namespace kantorovich;

namespace {

constexpr int kExitError = 2;
constexpr int kExitGateFailed = 3;

std::string in_dir(const std::string& dir, const std::string& path, const std::string& fallback) {
    if (!path.empty()) return path;
    return (fs::path(dir) / fallback).string();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sampling Kantorovich operators: classical and noise-perturbed reconstruction"};
    app.require_subcommand(1);

    std::uint64_t seed = 42;
    int threads = 0;
    std::string out_dir = ".";
    app.add_option("--seed", seed, "Master seed of the noise streams")->capture_default_str();
    app.add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--out-dir", out_dir, "Directory for all outputs")->capture_default_str();

    // approx1d
    Approx1dConfig a1;
    std::string quad_name = "simpson";
    int panels = 8;
    std::string a1_mode = "both", a1_placement = "cell", a1_schedule = "fixed";
    std::string a1_csv, a1_curves;
    auto* approx = app.add_subcommand("approx1d", "Approximate a 1D function with S_n and P_n");
    approx->add_option("--fn", a1.function, "expgauss | zero | one")->capture_default_str();
    approx->add_option("--a", a1.domain.a, "Left endpoint")->capture_default_str();
    approx->add_option("--b", a1.domain.b, "Right endpoint")->capture_default_str();
    approx->add_option("--points", a1.domain.grid_points, "Evaluation grid size")->capture_default_str();
    approx->add_option("--n", a1.densities, "Sampling densities")->delimiter(',')->capture_default_str();
    approx->add_option("--kernel", a1.kernel, "box | bspline2 | bspline3")->capture_default_str();
    approx->add_option("--quad", quad_name, "midpoint | simpson")->capture_default_str();
    approx->add_option("--panels", panels, "Quadrature panels per cell")->capture_default_str();
    approx->add_option("--mode", a1_mode, "classical | probabilistic | both")->capture_default_str();
    approx->add_option("--noise-std", a1.noise.std, "Noise standard deviation tau")->capture_default_str();
    approx->add_option("--noise-placement", a1_placement, "cell | sample")->capture_default_str();
    approx->add_option("--noise-schedule", a1_schedule, "fixed | inv-sqrt-n")->capture_default_str();
    approx->add_option("--trials", a1.trials, "Monte Carlo trials")->capture_default_str();
    approx->add_option("--out-csv", a1_csv, "Summary CSV (default <out-dir>/approx1d_summary.csv)");
    approx->add_option("--out-curves", a1_curves, "Curves CSV (default <out-dir>/approx1d_curves.csv)");

    // image
    ImageRunConfig im;
    std::string im_mode = "classical", im_ssim = "gauss11", im_report;
    double im_peak = 1.0;
    auto* image = app.add_subcommand("image", "Window-average an image with S_n and P_n");
    image->add_option("--in", im.input, "Input PGM (omit for the synthetic test image)");
    image->add_option("--windows", im.windows, "Window sizes")->delimiter(',')->capture_default_str();
    image->add_option("--mode", im_mode, "classical | probabilistic | both")->capture_default_str();
    image->add_option("--noise-std", im.noise.std, "Pixel noise standard deviation")->capture_default_str();
    image->add_option("--trials", im.trials, "Monte Carlo trials")->capture_default_str();
    image->add_option("--ssim-window", im_ssim, "gauss11 | uniform8")->capture_default_str();
    image->add_option("--peak", im_peak, "Peak signal value")->capture_default_str();
    image->add_option("--report", im_report, "Metrics CSV (default <out-dir>/image_report.csv)");

    // reproduce-tables
    ReproduceConfig rt;
    std::string rt_ssim = "gauss11";
    double rt_peak = 1.0;
    bool strict = false;
    auto* repro = app.add_subcommand("reproduce-tables", "Regenerate the three comparison tables");
    repro->add_option("--table1-trials", rt.table1_trials, "Trials for the 1D probabilistic column")
        ->capture_default_str();
    repro->add_option("--trials", rt.table3_trials, "Trials for the expected image metrics")->capture_default_str();
    repro->add_option("--noise-std", rt.noise_std, "Noise standard deviation")->capture_default_str();
    repro->add_option("--windows", rt.windows, "Window sizes")->delimiter(',')->capture_default_str();
    repro->add_option("--in", rt.image, "Input PGM (omit for the synthetic test image)");
    repro->add_option("--ssim-window", rt_ssim, "gauss11 | uniform8")->capture_default_str();
    repro->add_option("--peak", rt_peak, "Peak signal value")->capture_default_str();
    repro->add_flag("--strict", strict, "Exit non-zero when a reference gate fails");

    CLI11_PARSE(app, argc, argv);

    try {
        set_thread_count(threads);
        fs::create_directories(out_dir);

        if (*approx) {
            a1.quadrature = Quadrature::parse(quad_name, panels);
            a1.mode = parse_run_mode(a1_mode);
            a1.noise.placement = parse_noise_placement(a1_placement);
            a1.noise.schedule = parse_noise_schedule(a1_schedule);
            a1.noise.master_seed = seed;
            const Approx1dOutput out = run_approx1d(a1);
            write_csv_report(out.summary, in_dir(out_dir, a1_csv, "approx1d_summary.csv"));
            write_csv_report(out.curves, in_dir(out_dir, a1_curves, "approx1d_curves.csv"));
            return 0;
        }
        if (*image) {
            im.mode = parse_run_mode(im_mode);
            im.ssim = SsimConfig::parse(im_ssim, im_peak);
            im.noise.master_seed = seed;
            const GrayImage input = im.input.empty() ? synthetic_test_image() : load_pgm(im.input);
            const ImageRunOutput out = run_image(im, input);
            for (const auto& [name, img] : out.images) save_pgm(img, (fs::path(out_dir) / name).string());
            write_csv_report(out.report, in_dir(out_dir, im_report, "image_report.csv"));
            return 0;
        }
        rt.seed = seed;
        rt.ssim = SsimConfig::parse(rt_ssim, rt_peak);
        const ReproduceOutcome outcome = reproduce_tables(rt, out_dir);
        std::cout << "table1 classical within band:   " << (outcome.table1_band ? "yes" : "no") << '\n'
                  << "table1 classical decreasing:    " << (outcome.table1_decreasing ? "yes" : "no") << '\n'
                  << "table1 probabilistic > classic: " << (outcome.table1_probabilistic_above ? "yes" : "no") << '\n'
                  << "table2 trends:                  " << (outcome.table2_trends ? "yes" : "no") << '\n'
                  << "table3 variance decreasing:     " << (outcome.table3_variance_decreasing ? "yes" : "no")
                  << '\n';
        if (strict && !outcome.all_pass()) return kExitGateFailed;
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
}
