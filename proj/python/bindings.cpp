#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstdint>

#include "modrad/checks.hpp"
#include "modrad/linalg.hpp"
#include "modrad/radius.hpp"
#include "modrad/report.hpp"
#include "modrad/rng.hpp"

namespace py = pybind11;

namespace {

using modrad::AlgebraElement;
using modrad::CMatrix;
using modrad::Complex;
using modrad::ModuleElement;
using modrad::ModuleShape;
using modrad::RadiusConfig;
using modrad::RadiusResult;

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

CMatrix to_matrix(const ComplexArray& arr) {
    if (arr.ndim() != 2) throw modrad::UsageError("expected a 2-D complex array");
    const auto view = arr.unchecked<2>();
    CMatrix m(static_cast<std::size_t>(view.shape(0)), static_cast<std::size_t>(view.shape(1)));
    for (py::ssize_t i = 0; i < view.shape(0); ++i)
        for (py::ssize_t j = 0; j < view.shape(1); ++j)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = view(i, j);
    return m;
}

py::array_t<Complex> from_matrix(const CMatrix& m) {
    py::array_t<Complex> arr({m.rows(), m.cols()});
    auto view = arr.mutable_unchecked<2>();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            view(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = m(i, j);
    return arr;
}

// Module elements are m x n arrays: rows live in the module fiber, columns
// in the coefficient algebra.
ModuleElement to_element(const ComplexArray& arr) {
    CMatrix m = to_matrix(arr);
    const ModuleShape shape{m.cols(), m.rows()};
    return ModuleElement(shape, std::move(m));
}

AlgebraElement to_algebra(const ComplexArray& arr, std::size_t m_rows) {
    CMatrix m = to_matrix(arr);
    const ModuleShape shape{m.cols(), m_rows};
    return AlgebraElement(shape, std::move(m));
}

RadiusConfig grid_config(std::size_t grid_points) {
    RadiusConfig cfg;
    cfg.grid_points = grid_points;
    return cfg;
}

py::dict radius_dict(const RadiusResult& r) {
    py::dict out;
    out["value"] = r.value;
    out["argmax_theta"] = r.argmax_theta;
    out["certificate"] = r.certificate;
    if (r.profile_samples) out["profile"] = *r.profile_samples;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Module numerical radius toolkit: certified circle maximization over "
                "linking-algebra block matrices.";
    mod.attr("__version__") = modrad::checks::kVersion;

    mod.def(
        "operator_norm", [](const ComplexArray& m) { return modrad::linalg::operator_norm(to_matrix(m)); },
        py::arg("m"), "Largest singular value.");
    mod.def(
        "spectral_radius",
        [](const ComplexArray& m) { return modrad::linalg::spectral_radius(to_matrix(m)); },
        py::arg("m"), "Largest eigenvalue modulus of a square matrix.");
    mod.def(
        "hermitian_eigenvalues",
        [](const ComplexArray& m) { return modrad::linalg::hermitian_eigenvalues(to_matrix(m)); },
        py::arg("m"), "Ascending real spectrum of a Hermitian matrix.");
    mod.def(
        "sym2x2_norm",
        [](double p, double s, double q) { return modrad::linalg::sym2x2_norm({p, s, q}); },
        py::arg("p"), py::arg("s"), py::arg("q"),
        "Norm of [[p, s], [s, q]] for nonnegative entries.");

    mod.def(
        "inner_product",
        [](const ComplexArray& x, const ComplexArray& y) {
            return from_matrix(modrad::inner_product(to_element(x), to_element(y)).mat());
        },
        py::arg("x"), py::arg("y"), "Algebra-valued pairing x* y of two m x n elements.");
    mod.def(
        "module_action",
        [](const ComplexArray& x, const ComplexArray& a) {
            const ModuleElement xe = to_element(x);
            return from_matrix(
                modrad::module_action(xe, to_algebra(a, xe.shape().m)).mat());
        },
        py::arg("x"), py::arg("a"), "Right action x a.");
    mod.def(
        "module_norm",
        [](const ComplexArray& x) { return modrad::module_norm(to_element(x)); }, py::arg("x"),
        "||<x, x>||^(1/2).");
    mod.def(
        "theta",
        [](const ComplexArray& x, const ComplexArray& y) {
            return from_matrix(modrad::theta(to_element(x), to_element(y)));
        },
        py::arg("x"), py::arg("y"), "Matrix of z -> x <y, z>.");

    mod.def(
        "omega",
        [](const ComplexArray& x, std::size_t grid_points) {
            return radius_dict(modrad::omega(to_element(x), grid_config(grid_points)));
        },
        py::arg("x"), py::arg("grid_points") = std::size_t{1024},
        "Module numerical radius with a certified circle maximization.");
    mod.def(
        "omega_profile",
        [](const ComplexArray& x, std::size_t grid_points) {
            return radius_dict(modrad::omega_with_profile(to_element(x), grid_config(grid_points)));
        },
        py::arg("x"), py::arg("grid_points") = std::size_t{1024},
        "Same, with the angle-by-angle grid samples attached.");
    mod.def(
        "omega_via_w",
        [](const ComplexArray& x, std::size_t grid_points) {
            return radius_dict(modrad::omega_via_w(to_element(x), grid_config(grid_points)));
        },
        py::arg("x"), py::arg("grid_points") = std::size_t{1024},
        "The same quantity routed through the generic matrix engine.");
    mod.def(
        "numerical_radius",
        [](const ComplexArray& m, std::size_t grid_points) {
            return radius_dict(modrad::numerical_radius(to_matrix(m), grid_config(grid_points)));
        },
        py::arg("m"), py::arg("grid_points") = std::size_t{1024},
        "w(M) = sup over unit lambda of ||Re(lambda M)||.");
    mod.def(
        "numerical_radius_bruteforce",
        [](const ComplexArray& m, std::size_t samples) {
            return modrad::numerical_radius_bruteforce(to_matrix(m), samples);
        },
        py::arg("m"), py::arg("samples"), "Plain equispaced scan, no certificate.");

    mod.def(
        "random_ginibre",
        [](std::size_t rows, std::size_t cols, std::uint64_t seed) {
            return from_matrix(modrad::rng::random_ginibre(rows, cols, seed));
        },
        py::arg("rows"), py::arg("cols"), py::arg("seed"),
        "Deterministic matrix with standard complex normal entries.");

    mod.def(
        "run_suite_json",
        [](std::size_t n, std::size_t m, std::size_t trials, std::uint64_t seed, double tol,
           std::size_t grid_points) {
            modrad::checks::TrialConfig cfg;
            cfg.shape = ModuleShape{n, m};
            cfg.trials = trials;
            cfg.master_seed = seed;
            cfg.tol = tol;
            cfg.radius_cfg.grid_points = grid_points;
            return modrad::report::to_json(modrad::checks::run_suite(cfg));
        },
        py::arg("n"), py::arg("m"), py::arg("trials") = std::size_t{200},
        py::arg("seed") = std::uint64_t{0}, py::arg("tol") = 1e-8,
        py::arg("grid_points") = std::size_t{256},
        "Run every property check at one shape; returns the JSON report.");
}
