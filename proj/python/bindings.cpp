#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "kantorovich/error.hpp"
#include "kantorovich/experiments.hpp"
#include "kantorovich/image.hpp"
#include "kantorovich/kernel.hpp"
#include "kantorovich/metrics.hpp"
#include "kantorovich/parallel.hpp"
#include "kantorovich/pgm.hpp"
#include "kantorovich/psk1d.hpp"
#include "kantorovich/sk1d.hpp"

namespace py = pybind11;
using namespace kantorovich;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

// Holds a Python callable so RealFunction copies never touch Python refcounts;
// worker threads take the GIL only for the call itself.
struct PyCallable {
    py::function fn;
    explicit PyCallable(py::function f) : fn(std::move(f)) {}
    ~PyCallable() {
        py::gil_scoped_acquire gil;
        fn = py::function();
    }
};

RealFunction to_function(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return named_function(obj.cast<std::string>());
    if (!PyCallable_Check(obj.ptr())) throw InvalidArgument("f must be a callable or a function name");
    auto holder = std::make_shared<PyCallable>(obj.cast<py::function>());
    return [holder](double x) {
        py::gil_scoped_acquire gil;
        return holder->fn(x).cast<double>();
    };
}

Array to_array(const std::vector<double>& v) {
    Array out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

Array to_array(const GrayImage& img) {
    Array out({img.height, img.width});
    std::copy(img.pixels.begin(), img.pixels.end(), out.mutable_data());
    return out;
}

GrayImage to_image(const Array& a) {
    if (a.ndim() != 2) throw ShapeMismatch("image must be a 2-D array");
    GrayImage img(static_cast<int>(a.shape(0)), static_cast<int>(a.shape(1)),
                  std::vector<double>(a.data(), a.data() + a.size()));
    return img;
}

NoiseModel make_noise(double std, const std::string& placement, std::uint64_t seed, const std::string& schedule) {
    NoiseModel m{std, parse_noise_placement(placement), seed, parse_noise_schedule(schedule)};
    m.validate();
    return m;
}

py::dict report_dict(const MetricsReport& m) {
    py::dict d;
    d["mae"] = m.mae;
    d["mse"] = m.mse;
    d["psnr"] = m.psnr;
    d["ssim"] = m.ssim;
    d["var_abs_err"] = m.var_abs_err;
    if (m.expected) {
        d["trials"] = m.expected->trials;
        d["var_abs_err_noise"] = m.expected->var_abs_err_noise;
        d["psnr_std_error"] = m.expected->psnr_std_error;
        d["ssim_std_error"] = m.expected->ssim_std_error;
        d["mae_std_error"] = m.expected->mae_std_error;
        d["mse_std_error"] = m.expected->mse_std_error;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_kantorovich, m) {
    m.doc() = "Sampling Kantorovich operators and their noisy counterparts";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<ShapeMismatch>(m, "ShapeMismatch", PyExc_ValueError);
    py::register_exception<NonFiniteIntegrand>(m, "NonFiniteIntegrand", error.ptr());
    py::register_exception<CoverageError>(m, "CoverageError", error.ptr());
    py::register_exception<DegenerateTrial>(m, "DegenerateTrial", error.ptr());
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("set_thread_count", &set_thread_count, py::arg("threads"));
    m.def("thread_count", &thread_count);

    py::class_<Kernel>(m, "Kernel")
        .def_static("box", &Kernel::box)
        .def_static("bspline", &Kernel::bspline, py::arg("order"))
        .def_static("parse", [](const std::string& s) { return Kernel::parse(s); })
        .def("__call__", [](const Kernel& k, double x) { return k.evaluate(x); })
        .def("__call__", [](const Kernel& k, const Array& xs) {
            std::vector<double> out(static_cast<std::size_t>(xs.size()));
            for (py::ssize_t i = 0; i < xs.size(); ++i) out[static_cast<std::size_t>(i)] = k.evaluate(xs.data()[i]);
            return to_array(out);
        })
        .def("evaluate_left_limit", &Kernel::evaluate_left_limit)
        .def_property_readonly("name", &Kernel::name)
        .def_property_readonly("order", &Kernel::order)
        .def_property_readonly("support_radius", &Kernel::support_radius)
        .def_property_readonly("l1_norm", &Kernel::l1_norm)
        .def_property_readonly("sup_norm", &Kernel::sup_norm)
        .def("__repr__", [](const Kernel& k) { return "Kernel('" + k.name() + "')"; });

    py::class_<Domain1D>(m, "Domain1D")
        .def(py::init([](double a, double b, int points) {
                 Domain1D d{a, b, points};
                 d.validate();
                 return d;
             }),
             py::arg("a") = -3.0, py::arg("b") = 3.0, py::arg("points") = 1000)
        .def_readonly("a", &Domain1D::a)
        .def_readonly("b", &Domain1D::b)
        .def_readonly("points", &Domain1D::grid_points)
        .def("grid", [](const Domain1D& d) { return to_array(d.grid()); });

    py::class_<CellMeans>(m, "CellMeans")
        .def_readonly("n", &CellMeans::n)
        .def_readonly("k_min", &CellMeans::k_min)
        .def_readonly("k_max", &CellMeans::k_max)
        .def_property_readonly("values", [](const CellMeans& c) { return to_array(c.values); });

    m.def(
        "cell_means",
        [](const py::object& f, const Domain1D& dom, int n, const Kernel& kernel, const std::string& quad,
           int panels) {
            const RealFunction fn = to_function(f);
            const Quadrature q = Quadrature::parse(quad, panels);
            py::gil_scoped_release release;
            return compute_cell_means(fn, dom, n, q, kernel);
        },
        py::arg("f"), py::arg("domain"), py::arg("n"), py::arg("kernel") = Kernel::box(),
        py::arg("quad") = "simpson", py::arg("panels") = 8);

    m.def(
        "apply_sk",
        [](const CellMeans& means, const Kernel& kernel, const Domain1D& dom) {
            return to_array(apply_sk(means, kernel, dom).samples);
        },
        py::arg("means"), py::arg("kernel"), py::arg("domain"));

    m.def(
        "sk",
        [](const py::object& f, const Domain1D& dom, int n, const Kernel& kernel, const std::string& quad,
           int panels) {
            const RealFunction fn = to_function(f);
            const Quadrature q = Quadrature::parse(quad, panels);
            std::vector<double> out;
            {
                py::gil_scoped_release release;
                out = apply_sk(compute_cell_means(fn, dom, n, q, kernel), kernel, dom).samples;
            }
            return to_array(out);
        },
        py::arg("f"), py::arg("domain"), py::arg("n"), py::arg("kernel") = Kernel::box(),
        py::arg("quad") = "simpson", py::arg("panels") = 8);

    m.def(
        "psk",
        [](const py::object& f, const Domain1D& dom, int n, const Kernel& kernel, double noise_std,
           const std::string& placement, std::uint64_t seed, std::uint64_t trial, const std::string& schedule) {
            const RealFunction fn = to_function(f);
            const NoiseModel noise = make_noise(noise_std, placement, seed, schedule);
            std::vector<double> out;
            {
                py::gil_scoped_release release;
                out = apply_psk(fn, dom, n, kernel, noise, TrialContext{trial}).samples;
            }
            return to_array(out);
        },
        py::arg("f"), py::arg("domain"), py::arg("n"), py::arg("kernel") = Kernel::box(),
        py::arg("noise_std") = 0.02, py::arg("placement") = "cell", py::arg("seed") = 42, py::arg("trial") = 0,
        py::arg("schedule") = "fixed");

    m.def(
        "error_summary",
        [](const Array& approx, const Array& exact, const Domain1D& dom) {
            const std::vector<double> a(approx.data(), approx.data() + approx.size());
            const std::vector<double> e(exact.data(), exact.data() + exact.size());
            const auto s = error_summary(pointwise_error({dom, a}, {dom, e}));
            py::dict d;
            d["max"] = s.max;
            d["min"] = s.min;
            d["mean_l1"] = s.mean_l1;
            d["discrete_mean"] = s.discrete_mean;
            d["l1_total"] = s.l1_total;
            return d;
        },
        py::arg("approx"), py::arg("exact"), py::arg("domain"));

    m.def(
        "expected_l1_error",
        [](const py::object& f, const Domain1D& dom, int n, const Kernel& kernel, double noise_std,
           const std::string& placement, std::uint64_t seed, int trials, const std::string& schedule) {
            const RealFunction fn = to_function(f);
            const NoiseModel noise = make_noise(noise_std, placement, seed, schedule);
            MonteCarloEstimate est;
            {
                py::gil_scoped_release release;
                est = expected_error(fn, dom, n, kernel, noise, trials, ErrorKind::L1Total);
            }
            return py::make_tuple(est.mean, est.std_error);
        },
        py::arg("f"), py::arg("domain"), py::arg("n"), py::arg("kernel") = Kernel::box(),
        py::arg("noise_std") = 0.02, py::arg("placement") = "cell", py::arg("seed") = 42,
        py::arg("trials") = 100, py::arg("schedule") = "fixed");

    m.def(
        "block_means",
        [](const Array& img, int w) {
            const auto c = block_means(to_image(img), {w});
            Array out({c.block_rows, c.block_cols});
            std::copy(c.values.begin(), c.values.end(), out.mutable_data());
            return out;
        },
        py::arg("image"), py::arg("window"));
    m.def(
        "sk_image", [](const Array& img, int w) { return to_array(apply_sk_image(to_image(img), {w})); },
        py::arg("image"), py::arg("window"));
    m.def(
        "psk_image",
        [](const Array& img, int w, double noise_std, std::uint64_t seed, std::uint64_t trial) {
            const NoiseModel noise = make_noise(noise_std, "sample", seed, "fixed");
            return to_array(apply_psk_image(to_image(img), {w}, noise, TrialContext{trial}));
        },
        py::arg("image"), py::arg("window"), py::arg("noise_std") = 0.02, py::arg("seed") = 42,
        py::arg("trial") = 0);
    m.def(
        "reconstruction_metrics",
        [](const Array& original, const Array& recon, const std::string& ssim_window, double peak) {
            return report_dict(reconstruction_metrics(to_image(original), to_image(recon),
                                                      SsimConfig::parse(ssim_window, peak)));
        },
        py::arg("original"), py::arg("reconstructed"), py::arg("ssim_window") = "gauss11", py::arg("peak") = 1.0);
    m.def(
        "expected_metrics",
        [](const Array& img, int w, double noise_std, std::uint64_t seed, int trials, const std::string& ssim_window,
           double peak) {
            const GrayImage image = to_image(img);
            const NoiseModel noise = make_noise(noise_std, "sample", seed, "fixed");
            const SsimConfig cfg = SsimConfig::parse(ssim_window, peak);
            MetricsReport r;
            {
                py::gil_scoped_release release;
                r = expected_reconstruction_metrics(image, {w}, noise, trials, cfg);
            }
            return report_dict(r);
        },
        py::arg("image"), py::arg("window"), py::arg("noise_std") = 0.02, py::arg("seed") = 42,
        py::arg("trials") = 100, py::arg("ssim_window") = "gauss11", py::arg("peak") = 1.0);
    m.def(
        "synthetic_image", [](int size) { return to_array(synthetic_test_image(size)); }, py::arg("size") = 256);

    m.def("mae", [](const Array& f, const Array& g) { return mae(to_image(f), to_image(g)); });
    m.def("mse", [](const Array& f, const Array& g) { return mse(to_image(f), to_image(g)); });
    m.def(
        "psnr", [](const Array& f, const Array& g, double peak) { return psnr(to_image(f), to_image(g), peak); },
        py::arg("f"), py::arg("g"), py::arg("peak") = 1.0);
    m.def("psnr_from_mse", &psnr_from_mse, py::arg("mse"), py::arg("peak") = 1.0);
    m.def(
        "ssim",
        [](const Array& f, const Array& g, const std::string& window, double peak) {
            return ssim(to_image(f), to_image(g), SsimConfig::parse(window, peak));
        },
        py::arg("f"), py::arg("g"), py::arg("window") = "gauss11", py::arg("peak") = 1.0);
    m.def(
        "ssim_global",
        [](const Array& f, const Array& g, double peak) {
            return ssim_global(to_image(f), to_image(g), SsimConfig::parse("gauss11", peak));
        },
        py::arg("f"), py::arg("g"), py::arg("peak") = 1.0);
    m.def("variance_abs_error", [](const Array& v) {
        return variance_abs_error(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
    });

    m.def("load_pgm", [](const std::string& path) { return to_array(load_pgm(path)); }, py::arg("path"));
    m.def(
        "save_pgm", [](const Array& img, const std::string& path, int bits) { save_pgm(to_image(img), path, bits); },
        py::arg("image"), py::arg("path"), py::arg("bits") = 8);
    m.def("parse_pgm", [](const py::bytes& data) { return to_array(parse_pgm(std::string(data))); });
    m.def(
        "encode_pgm",
        [](const Array& img, int bits, bool ascii) {
            return py::bytes(encode_pgm(to_image(img), bits, ascii ? PgmEncoding::Ascii : PgmEncoding::Binary));
        },
        py::arg("image"), py::arg("bits") = 8, py::arg("ascii") = false);

    m.def(
        "reproduce_tables",
        [](const std::string& out_dir, std::uint64_t seed, int table1_trials, int trials) {
            ReproduceConfig cfg;
            cfg.seed = seed;
            cfg.table1_trials = table1_trials;
            cfg.table3_trials = trials;
            ReproduceOutcome o;
            {
                py::gil_scoped_release release;
                o = reproduce_tables(cfg, out_dir);
            }
            py::dict d;
            d["table1_band"] = o.table1_band;
            d["table1_decreasing"] = o.table1_decreasing;
            d["table1_probabilistic_above"] = o.table1_probabilistic_above;
            d["table2_trends"] = o.table2_trends;
            d["table3_variance_decreasing"] = o.table3_variance_decreasing;
            return d;
        },
        py::arg("out_dir"), py::arg("seed") = 42, py::arg("table1_trials") = 2000, py::arg("trials") = 100);
}
