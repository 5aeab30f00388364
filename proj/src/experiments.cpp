#include "kantorovich/experiments.hpp"

#include <cmath>
#include <filesystem>
#include <string>

#include "kantorovich/error.hpp"
#include "kantorovich/pgm.hpp"
#include "kantorovich/reference_values.hpp"

namespace kantorovich {
namespace {

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string placement_name(NoisePlacement p) { return p == NoisePlacement::PerCell ? "cell" : "sample"; }
std::string schedule_name(NoiseSchedule s) { return s == NoiseSchedule::Fixed ? "fixed" : "inv-sqrt-n"; }
std::string scheme_name(QuadratureScheme s) { return s == QuadratureScheme::Simpson ? "simpson" : "midpoint"; }
std::string ssim_name(const SsimConfig& c) {
    return c.window == SsimWindow::Gaussian11 ? "gauss11" : "uniform" + std::to_string(c.uniform_side);
}
std::string mode_name(RunMode m) {
    switch (m) {
        case RunMode::Classical: return "classical";
        case RunMode::Probabilistic: return "probabilistic";
        case RunMode::Both: return "both";
    }
    return "both";
}

CsvCell optional_cell(const std::optional<double>& v) {
    if (v) return *v;
    return std::string("na");
}
CsvCell optional_cell(const std::optional<bool>& v) {
    if (v) return *v;
    return std::string("na");
}

template <std::size_t N>
const reference::WindowEntry* find_window(const std::array<reference::WindowEntry, N>& table, int w) {
    for (const auto& e : table)
        if (e.window == w) return &e;
    return nullptr;
}

std::optional<double> ref_field(const reference::WindowEntry* e, double reference::WindowEntry::*field) {
    if (!e) return std::nullopt;
    return e->*field;
}

std::optional<bool> trend(const std::vector<WindowRow>& rows, std::size_t i, double (*get)(const WindowRow&),
                          bool increasing) {
    if (i == 0) return std::nullopt;
    const double prev = get(rows[i - 1]);
    const double cur = get(rows[i]);
    return increasing ? cur > prev : cur < prev;
}

double psnr_of(const WindowRow& r) { return r.metrics.psnr; }
double ssim_of(const WindowRow& r) { return r.metrics.ssim; }
double mae_of(const WindowRow& r) { return r.metrics.mae; }
double noise_var_of(const WindowRow& r) { return r.metrics.expected ? r.metrics.expected->var_abs_err_noise : 0.0; }

}  // namespace

RealFunction named_function(const std::string& name) {
    if (name == "expgauss") return [](double x) { return std::exp(-x * x); };
    if (name == "zero") return [](double) { return 0.0; };
    if (name == "one") return [](double) { return 1.0; };
    throw InvalidArgument("unknown function '" + name + "' (expected expgauss, zero or one)");
}

RunMode parse_run_mode(const std::string& name) {
    if (name == "classical") return RunMode::Classical;
    if (name == "probabilistic") return RunMode::Probabilistic;
    if (name == "both") return RunMode::Both;
    throw InvalidArgument("unknown mode '" + name + "'");
}

std::vector<std::string> Approx1dConfig::describe() const {
    return {
        "command=approx1d",
        "fn=" + function,
        "a=" + format_double(domain.a),
        "b=" + format_double(domain.b),
        "points=" + std::to_string(domain.grid_points),
        "n=" + join_ints(densities),
        "kernel=" + kernel,
        "quad=" + scheme_name(quadrature.scheme),
        "panels=" + std::to_string(quadrature.panels_per_cell),
        "mode=" + mode_name(mode),
        "noise_std=" + format_double(noise.std),
        "noise_placement=" + placement_name(noise.placement),
        "noise_schedule=" + schedule_name(noise.schedule),
        "seed=" + std::to_string(noise.master_seed),
        "trials=" + std::to_string(trials),
    };
}

Approx1dOutput run_approx1d(const Approx1dConfig& cfg) {
    cfg.domain.validate();
    cfg.noise.validate();
    if (cfg.densities.empty()) throw InvalidArgument("at least one n is required");
    for (int n : cfg.densities)
        if (n < 1) throw InvalidArgument("n values must be >= 1");
    if (cfg.trials < 1) throw InvalidArgument("trials must be >= 1");
    const Kernel kernel = Kernel::parse(cfg.kernel);
    const RealFunction f = named_function(cfg.function);
    const bool classical = cfg.mode != RunMode::Probabilistic;
    const bool probabilistic = cfg.mode != RunMode::Classical;

    Approx1dOutput out;
    out.summary.comments = cfg.describe();
    out.summary.columns = {"mode", "n", "l1_error", "max_error", "min_error", "discrete_mean_error",
                           "noise_std", "trials", "l1_std_error"};
    out.curves.comments = cfg.describe();
    out.curves.columns = {"x", "f"};

    const GridFunction1D exact = sample_function(f, cfg.domain);
    std::vector<GridFunction1D> curves;

    if (classical) {
        for (int n : cfg.densities) {
            const GridFunction1D approx =
                apply_sk(compute_cell_means(f, cfg.domain, n, cfg.quadrature, kernel), kernel, cfg.domain);
            const ErrorSummary s = error_summary(pointwise_error(approx, exact));
            out.summary.add_row({std::string("classical"), static_cast<long long>(n), s.l1_total, s.max, s.min,
                                 s.discrete_mean, 0.0, 0LL, 0.0});
            out.curves.columns.push_back("sk_n" + std::to_string(n));
            curves.push_back(approx);
        }
    }
    if (probabilistic) {
        for (int n : cfg.densities) {
            const ExpectedErrors e =
                expected_errors(f, cfg.domain, n, kernel, cfg.noise, cfg.trials, cfg.quadrature);
            out.summary.add_row({std::string("probabilistic"), static_cast<long long>(n), e.l1_total.mean,
                                 e.max.mean, e.min.mean, e.discrete_mean.mean, cfg.noise.std_at(n),
                                 static_cast<long long>(cfg.trials), e.l1_total.std_error});
            out.curves.columns.push_back("psk_n" + std::to_string(n));
            curves.push_back(apply_psk(f, cfg.domain, n, kernel, cfg.noise, TrialContext{0}, cfg.quadrature));
        }
    }
    for (int i = 0; i < cfg.domain.grid_points; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        std::vector<CsvCell> row{cfg.domain.point(i), exact.samples[idx]};
        for (const auto& c : curves) row.emplace_back(c.samples[idx]);
        out.curves.add_row(std::move(row));
    }
    return out;
}

std::vector<std::string> ImageRunConfig::describe() const {
    return {
        "command=image",
        "in=" + (input.empty() ? std::string("synthetic") : input),
        "windows=" + join_ints(windows),
        "mode=" + mode_name(mode),
        "noise_std=" + format_double(noise.std),
        "seed=" + std::to_string(noise.master_seed),
        "trials=" + std::to_string(trials),
        "ssim_window=" + ssim_name(ssim),
        "peak=" + format_double(ssim.peak),
    };
}

ImageRunOutput run_image(const ImageRunConfig& cfg, const GrayImage& input) {
    input.validate();
    if (cfg.windows.empty()) throw InvalidArgument("at least one window is required");
    for (int w : cfg.windows) WindowSpec{w}.validate_for(input.height, input.width);
    const bool classical = cfg.mode != RunMode::Probabilistic;
    const bool probabilistic = cfg.mode != RunMode::Classical;
    NoiseModel noise = cfg.noise;
    noise.placement = NoisePlacement::PerSample;

    ImageRunOutput out;
    out.report.comments = cfg.describe();
    out.report.columns = {"mode", "window", "psnr", "ssim", "mae", "var_abs_err"};
    if (probabilistic)
        for (const char* c : {"var_abs_err_noise", "psnr_std_error", "ssim_std_error", "mae_std_error", "trials"})
            out.report.columns.emplace_back(c);
    const std::size_t extra = out.report.columns.size() - 6;

    for (int w : cfg.windows) {
        const WindowSpec win{w};
        if (classical) {
            GrayImage recon = apply_sk_image(input, win);
            const MetricsReport m = reconstruction_metrics(input, recon, cfg.ssim);
            std::vector<CsvCell> row{std::string("classical"), static_cast<long long>(w), m.psnr, m.ssim, m.mae,
                                     m.var_abs_err};
            for (std::size_t i = 0; i < extra; ++i) row.emplace_back(std::string("na"));
            out.report.add_row(std::move(row));
            out.images.emplace_back("sk_w" + std::to_string(w) + ".pgm", std::move(recon));
        }
        if (probabilistic) {
            const MetricsReport m = expected_reconstruction_metrics(input, win, noise, cfg.trials, cfg.ssim);
            const ExpectedBlock& e = *m.expected;
            out.report.add_row({std::string("probabilistic"), static_cast<long long>(w), m.psnr, m.ssim, m.mae,
                                m.var_abs_err, e.var_abs_err_noise, e.psnr_std_error, e.ssim_std_error,
                                e.mae_std_error, static_cast<long long>(e.trials)});
            out.images.emplace_back("psk_w" + std::to_string(w) + "_trial0.pgm",
                                    apply_psk_image(input, win, noise, TrialContext{0}));
        }
    }
    return out;
}

std::vector<std::string> ReproduceConfig::describe() const {
    return {
        "command=reproduce-tables",
        "seed=" + std::to_string(seed),
        "table1_trials=" + std::to_string(table1_trials),
        "table3_trials=" + std::to_string(table3_trials),
        "noise_std=" + format_double(noise_std),
        "windows=" + join_ints(windows),
        "image=" + (image.empty() ? std::string("synthetic") : image),
        "ssim_window=" + ssim_name(ssim),
        "peak=" + format_double(ssim.peak),
    };
}

std::vector<Table1Row> run_table1(const ReproduceConfig& cfg) {
    const RealFunction f = named_function("expgauss");
    const Domain1D domain{-3.0, 3.0, 1000};
    const Kernel kernel = Kernel::box();
    const Quadrature quad{};
    const NoiseModel noise{cfg.noise_std, NoisePlacement::PerCell, cfg.seed, NoiseSchedule::Fixed};
    const GridFunction1D exact = sample_function(f, domain);

    std::vector<Table1Row> rows;
    for (int n : {5, 15, 25, 35, 45}) {
        Table1Row row;
        row.n = n;
        for (const auto& ref : reference::kTable1) {
            if (ref.n != n) continue;
            row.reference_classical = ref.classical_l1;
            row.reference_probabilistic = ref.probabilistic_l1;
        }
        const auto approx = apply_sk(compute_cell_means(f, domain, n, quad, kernel), kernel, domain);
        row.classical = error_summary(pointwise_error(approx, exact)).l1_total;
        row.probabilistic = expected_error(f, domain, n, kernel, noise, cfg.table1_trials, ErrorKind::L1Total, quad);
        if (row.reference_classical)
            row.within_band =
                std::abs(row.classical - *row.reference_classical) <= reference::kTable1RelativeBand * *row.reference_classical;
        row.decreasing = rows.empty() || row.classical < rows.back().classical;
        row.probabilistic_above = row.probabilistic.mean - 3.0 * row.probabilistic.std_error > row.classical;
        rows.push_back(row);
    }
    return rows;
}

std::vector<WindowRow> run_table2(const ReproduceConfig& cfg, const GrayImage& img) {
    std::vector<WindowRow> rows;
    for (int w : cfg.windows) rows.push_back({w, reconstruction_metrics(img, apply_sk_image(img, WindowSpec{w}), cfg.ssim)});
    return rows;
}

std::vector<WindowRow> run_table3(const ReproduceConfig& cfg, const GrayImage& img) {
    const NoiseModel noise{cfg.noise_std, NoisePlacement::PerSample, cfg.seed, NoiseSchedule::Fixed};
    std::vector<WindowRow> rows;
    for (int w : cfg.windows)
        rows.push_back({w, expected_reconstruction_metrics(img, WindowSpec{w}, noise, cfg.table3_trials, cfg.ssim)});
    return rows;
}

CsvTable table1_csv(const std::vector<Table1Row>& rows, const ReproduceConfig& cfg) {
    CsvTable t;
    t.comments = cfg.describe();
    t.columns = {"n", "reference_classical", "ours_classical", "within_band", "decreasing", "reference_probabilistic",
                 "ours_probabilistic", "ours_probabilistic_std_error", "probabilistic_above"};
    for (const auto& r : rows)
        t.add_row({static_cast<long long>(r.n), optional_cell(r.reference_classical), r.classical,
                   optional_cell(r.within_band), r.decreasing, optional_cell(r.reference_probabilistic),
                   r.probabilistic.mean, r.probabilistic.std_error, r.probabilistic_above});
    return t;
}

CsvTable table2_csv(const std::vector<WindowRow>& rows, const ReproduceConfig& cfg) {
    using reference::WindowEntry;
    CsvTable t;
    t.comments = cfg.describe();
    t.columns = {"window",    "reference_psnr", "ours_psnr",       "reference_ssim",      "ours_ssim",
                 "reference_mae", "ours_mae",   "reference_var",       "ours_var",        "psnr_decreasing",
                 "ssim_decreasing", "mae_increasing"};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        const auto* ref = find_window(reference::kTable2, r.window);
        t.add_row({static_cast<long long>(r.window), optional_cell(ref_field(ref, &WindowEntry::psnr)), r.metrics.psnr,
                   optional_cell(ref_field(ref, &WindowEntry::ssim)), r.metrics.ssim,
                   optional_cell(ref_field(ref, &WindowEntry::mae)), r.metrics.mae,
                   optional_cell(ref_field(ref, &WindowEntry::var_abs_err)), r.metrics.var_abs_err,
                   optional_cell(trend(rows, i, psnr_of, false)), optional_cell(trend(rows, i, ssim_of, false)),
                   optional_cell(trend(rows, i, mae_of, true))});
    }
    return t;
}

CsvTable table3_csv(const std::vector<WindowRow>& rows, const ReproduceConfig& cfg) {
    using reference::WindowEntry;
    CsvTable t;
    t.comments = cfg.describe();
    t.columns = {"window",   "reference_psnr",     "ours_psnr", "ours_psnr_std_error", "reference_ssim",
                 "ours_ssim", "ours_ssim_std_error", "reference_mae", "ours_mae", "ours_mae_std_error",
                 "reference_var", "ours_var_noise", "ours_var_pooled", "var_decreasing"};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        const auto& e = *r.metrics.expected;
        const auto* ref = find_window(reference::kTable3, r.window);
        t.add_row({static_cast<long long>(r.window), optional_cell(ref_field(ref, &WindowEntry::psnr)), r.metrics.psnr,
                   e.psnr_std_error, optional_cell(ref_field(ref, &WindowEntry::ssim)), r.metrics.ssim,
                   e.ssim_std_error, optional_cell(ref_field(ref, &WindowEntry::mae)), r.metrics.mae,
                   e.mae_std_error, optional_cell(ref_field(ref, &WindowEntry::var_abs_err)), e.var_abs_err_noise,
                   r.metrics.var_abs_err, optional_cell(trend(rows, i, noise_var_of, false))});
    }
    return t;
}

bool ReproduceOutcome::all_pass() const {
    return table1_band && table1_decreasing && table1_probabilistic_above && table2_trends &&
           table3_variance_decreasing;
}

ReproduceOutcome reproduce_tables(const ReproduceConfig& cfg, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    const GrayImage img = cfg.image.empty() ? synthetic_test_image() : load_pgm(cfg.image);

    const auto t1 = run_table1(cfg);
    const auto t2 = run_table2(cfg, img);
    const auto t3 = run_table3(cfg, img);
    write_csv_report(table1_csv(t1, cfg), (dir / "table1.csv").string());
    write_csv_report(table2_csv(t2, cfg), (dir / "table2.csv").string());
    write_csv_report(table3_csv(t3, cfg), (dir / "table3.csv").string());

    save_pgm(img, (dir / "input.pgm").string());
    const NoiseModel noise{cfg.noise_std, NoisePlacement::PerSample, cfg.seed, NoiseSchedule::Fixed};
    for (int w : cfg.windows) {
        save_pgm(apply_sk_image(img, WindowSpec{w}), (dir / ("table2_sk_w" + std::to_string(w) + ".pgm")).string());
        save_pgm(apply_psk_image(img, WindowSpec{w}, noise, TrialContext{0}),
                 (dir / ("table3_psk_w" + std::to_string(w) + "_trial0.pgm")).string());
    }

    ReproduceOutcome o;
    o.table1_band = true;
    o.table1_decreasing = true;
    o.table1_probabilistic_above = true;
    for (const auto& r : t1) {
        if (r.within_band && !*r.within_band) o.table1_band = false;
        if (!r.decreasing) o.table1_decreasing = false;
        if (r.reference_probabilistic && !r.probabilistic_above) o.table1_probabilistic_above = false;
    }
    o.table2_trends = strictly_ordered(t2, [](const WindowRow& a, const WindowRow& b) {
        return a.metrics.psnr > b.metrics.psnr && a.metrics.ssim > b.metrics.ssim && a.metrics.mae < b.metrics.mae;
    });
    o.table3_variance_decreasing = strictly_ordered(t3, [](const WindowRow& a, const WindowRow& b) {
        return a.metrics.expected->var_abs_err_noise > b.metrics.expected->var_abs_err_noise;
    });
    return o;
}

}  // namespace kantorovich
