/*
 * Copyright 2026 The sirsde Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "sirsde/boundary.hpp"
#include "sirsde/error.hpp"
#include "sirsde/estimators.hpp"
#include "sirsde/params.hpp"
#include "sirsde/scenario.hpp"
#include "sirsde/sde.hpp"
#include "sirsde/support.hpp"

#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace sirsde;

namespace {

py::array_t<double> to_array(const std::vector<double>& v)
{
    return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

py::dict trajectory_dict(const Trajectory& tr)
{
    py::dict d;
    d["t"] = to_array(tr.times);
    d["S"] = to_array(tr.s);
    if (!tr.i.empty()) {
        d["I"] = to_array(tr.i);
        d["log_I"] = to_array(tr.log_i);
    }
    if (!tr.r.empty()) {
        d["R"] = to_array(tr.r);
    }
    return d;
}

PathConfig path_config(double dt, double t_final, const std::string& scheme, std::size_t record_stride)
{
    PathConfig cfg{dt, t_final, scheme_from_string(scheme), record_stride};
    cfg.check();
    return cfg;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Stochastic SIR toolkit: thresholds, stationary law, path simulation and estimators.";

    static py::exception<Error> error(m, "SirsdeError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    py::class_<SirParams>(m, "SirParams")
        .def(py::init<double, double, double, double, double, double, double>(), py::arg("alpha"),
             py::arg("beta"), py::arg("mu"), py::arg("rho"), py::arg("gamma"), py::arg("sigma1"),
             py::arg("sigma2"))
        .def_readwrite("alpha", &SirParams::alpha)
        .def_readwrite("beta", &SirParams::beta)
        .def_readwrite("mu", &SirParams::mu)
        .def_readwrite("rho", &SirParams::rho)
        .def_readwrite("gamma", &SirParams::gamma)
        .def_readwrite("sigma1", &SirParams::sigma1)
        .def_readwrite("sigma2", &SirParams::sigma2)
        .def(py::self == py::self)
        .def("__repr__", [](const SirParams& p) {
            return "SirParams(alpha=" + std::to_string(p.alpha) + ", beta=" + std::to_string(p.beta) +
                   ", mu=" + std::to_string(p.mu) + ", rho=" + std::to_string(p.rho) +
                   ", gamma=" + std::to_string(p.gamma) + ", sigma1=" + std::to_string(p.sigma1) +
                   ", sigma2=" + std::to_string(p.sigma2) + ")";
        });

    m.def("example", [](int n) {
        switch (n) {
        case 1: return presets::example1;
        case 2: return presets::example2;
        case 3: return presets::example3;
        default: throw Error(ErrorCode::ConfigError, "examples are numbered 1 to 3");
        }
    }, py::arg("n"), "Parameters of worked example n (1, 2 or 3).");

    m.def("validate", &validate, py::arg("params"));
    m.def("threshold_lambda", &threshold_lambda, py::arg("params"));
    m.def("threshold_lambda_deterministic", &threshold_lambda_deterministic, py::arg("params"));
    m.def("reproduction_number", &reproduction_number, py::arg("params"));
    m.def("compute_dstar", [](const SirParams& p) { return compute_dstar(p).value; }, py::arg("params"));
    m.def("compute_cstar", py::overload_cast<const SirParams&>(&compute_cstar), py::arg("params"));
    m.def("classify", [](const SirParams& p) { return dump_json(classification_report(p)); }, py::arg("params"),
          "Classification report as a JSON string.");
    m.def("lie_bracket_rank", [](const SirParams& p, double x, double y) { return lie_bracket_rank(p, x, y).rank; },
          py::arg("params"), py::arg("x"), py::arg("y"));
    m.def("generator_LU", &generator_LU, py::arg("params"), py::arg("p_star"), py::arg("u"), py::arg("v"));

    py::class_<StationaryDensity>(m, "StationaryDensity")
        .def(py::init<double, double>(), py::arg("shape"), py::arg("scale"))
        .def_static("from_params", &StationaryDensity::from_params, py::arg("params"))
        .def_property_readonly("shape", &StationaryDensity::shape)
        .def_property_readonly("scale", &StationaryDensity::scale)
        .def("density", py::vectorize(&StationaryDensity::density_at), py::arg("x"))
        .def("cdf", py::vectorize(&StationaryDensity::cdf), py::arg("x"))
        .def("quantile", &StationaryDensity::quantile, py::arg("p"))
        .def("mean", &StationaryDensity::mean)
        .def("sample", [](const StationaryDensity& d, std::size_t n, std::uint64_t seed, std::uint32_t stream) {
            RngStream rng(seed, stream);
            return to_array(d.sample(rng, n));
        }, py::arg("n"), py::arg("seed") = 1, py::arg("stream") = 0);

    m.def("simulate", [](const SirParams& p, double s0, double i0, double dt, double t_final, std::size_t stride,
                         const std::string& scheme, std::uint64_t seed, std::uint32_t stream) {
        const PathConfig cfg = path_config(dt, t_final, scheme, stride);
        Trajectory tr;
        {
            py::gil_scoped_release release;
            tr = simulate_degenerate(p, s0, i0, cfg, RngStream(seed, stream));
        }
        return trajectory_dict(tr);
    }, py::arg("params"), py::arg("s0") = 1.0, py::arg("i0") = 1.0, py::arg("dt") = 1e-3,
       py::arg("t_final") = 10.0, py::arg("record_stride") = 1, py::arg("scheme") = "log_euler",
       py::arg("seed") = 1, py::arg("stream") = 0,
       "Simulate the two-dimensional model; returns a dict of numpy arrays.");

    m.def("simulate_boundary", [](const SirParams& p, double s0, double dt, double t_final, std::size_t stride,
                                  std::uint64_t seed, std::uint32_t stream) {
        const PathConfig cfg = path_config(dt, t_final, "log_euler", stride);
        return trajectory_dict(simulate_boundary(p, s0, cfg, RngStream(seed, stream)));
    }, py::arg("params"), py::arg("s0") = 1.0, py::arg("dt") = 1e-3, py::arg("t_final") = 10.0,
       py::arg("record_stride") = 1, py::arg("seed") = 1, py::arg("stream") = 0);

    m.def("lyapunov_exponent", [](const py::array_t<double>& t, const py::array_t<double>& log_i, double burn_in) {
        const auto tv = t.cast<std::vector<double>>();
        const auto lv = log_i.cast<std::vector<double>>();
        const SlopeEstimate e = fit_log_slope(tv, lv, burn_in);
        return py::make_tuple(e.slope, e.std_error);
    }, py::arg("t"), py::arg("log_i"), py::arg("burn_in") = 0.0, "Least-squares slope and its standard error.");

    m.def("tv_decay", [](const SirParams& p, std::vector<double> checkpoints, double reference_time,
                         std::size_t n_paths, double dt, std::uint64_t seed) {
        const PathConfig cfg = path_config(dt, reference_time, "log_euler", 1);
        std::vector<TvPoint> series;
        {
            py::gil_scoped_release release;
            series = tv_decay_series(p, 1.0, 1.0, n_paths, checkpoints, reference_time, cfg, seed);
        }
        std::vector<std::pair<double, double>> out;
        for (const auto& x : series) {
            out.emplace_back(x.t, x.tv);
        }
        return out;
    }, py::arg("params"), py::arg("checkpoints"), py::arg("reference_time"), py::arg("n_paths") = 1000,
       py::arg("dt") = 1e-3, py::arg("seed") = 1);

    m.def("run_example", [](int n, std::uint64_t seed, const std::filesystem::path& out,
                            std::optional<std::size_t> n_paths) {
        py::gil_scoped_release release;
        return run_example(n, seed, out, n_paths);
    }, py::arg("n"), py::arg("seed"), py::arg("out"), py::arg("n_paths") = py::none());
}
