// Python bindings for the main operations: polynomial families, bivariate
// Mittag-Leffler functions, quadrature rules and the fractional operators.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hkml/biorthogonal.hpp"
#include "hkml/fractional.hpp"
#include "hkml/gamma.hpp"
#include "hkml/hk2d.hpp"
#include "hkml/mittag_leffler.hpp"
#include "hkml/polynomials.hpp"
#include "hkml/quadrature.hpp"

namespace py = pybind11;
using namespace hkml;

namespace {

Hk2dMethod method_from_name(const std::string& name)
{
    if (name == "direct")
        return Hk2dMethod::direct;
    if (name == "zform")
        return Hk2dMethod::zform;
    if (name == "kdf")
        return Hk2dMethod::kdf;
    if (name == "ml")
        return Hk2dMethod::ml;
    throw Error(errkind::domain, "unknown hk2d method '" + name + "'");
}

QuadKind kind_from_name(const std::string& name, double alpha, double beta)
{
    if (name == "hermite")
        return QuadKind::hermite_w();
    if (name == "laguerre")
        return QuadKind::laguerre_w(alpha);
    if (name == "jacobi")
        return QuadKind::jacobi_w(alpha, beta);
    throw Error(errkind::domain, "unknown quadrature kind '" + name + "'");
}

GPSeries series_from_terms(double base,
                           const std::vector<std::pair<double, double>>& terms)
{
    std::vector<GPSeries::Term> t;
    for (const auto& [c, b] : terms)
        t.push_back({c, b});
    return GPSeries(base, std::move(t));
}

std::vector<std::pair<double, double>> series_to_terms(const GPSeries& f)
{
    std::vector<std::pair<double, double>> out;
    for (const auto& t : f.terms)
        out.emplace_back(t.coeff, t.beta);
    return out;
}

} // namespace

PYBIND11_MODULE(_hkml, m)
{
    m.doc() = "2D Hermite-Konhauser polynomials, bivariate Mittag-Leffler "
              "functions and Mittag-Leffler-kernel fractional operators";

    py::register_exception<Error>(m, "HkmlError");

    py::class_<SeriesResult>(m, "SeriesResult")
        .def_readonly("value", &SeriesResult::value)
        .def_readonly("abs_error_est", &SeriesResult::abs_error_est)
        .def_readonly("terms_used", &SeriesResult::terms_used)
        .def_readonly("terminated", &SeriesResult::terminated)
        .def("__repr__", [](const SeriesResult& r) {
            return "SeriesResult(value=" + std::to_string(r.value) +
                   ", terminated=" + (r.terminated ? "True" : "False") + ")";
        });

    m.def("log_gamma", &log_gamma, py::arg("x"));
    m.def("gamma_recip", &gamma_recip, py::arg("x"));
    m.def("pochhammer", &pochhammer, py::arg("a"), py::arg("n"));

    m.def("hermite", &hermite, py::arg("n"), py::arg("x"));
    m.def("laguerre", &laguerre, py::arg("n"), py::arg("alpha"), py::arg("x"));
    m.def("jacobi", &jacobi, py::arg("n"), py::arg("alpha"), py::arg("beta"),
          py::arg("x"));
    m.def("konhauser_z", &konhauser_z, py::arg("n"), py::arg("rho"),
          py::arg("k"), py::arg("t"));
    m.def("konhauser_y", &konhauser_y, py::arg("n"), py::arg("rho"),
          py::arg("k"), py::arg("t"));

    m.def(
        "hk2d",
        [](int n, double rho, int k, double x, double y,
           const std::string& method) {
            return hk2d({n, rho, k}, x, y, method_from_name(method));
        },
        py::arg("n"), py::arg("rho"), py::arg("k"), py::arg("x"), py::arg("y"),
        py::arg("method") = "direct");
    m.def("hk2d_partner", &hk2d_partner, py::arg("m"), py::arg("rho"),
          py::arg("k"), py::arg("x"), py::arg("y"));
    m.def(
        "hk2d_modified",
        [](int n, double kappa, double rho, double c, int k, double x,
           double y) { return hk2d_modified({n, kappa, rho, c, k}, x, y); },
        py::arg("n"), py::arg("kappa"), py::arg("rho"), py::arg("c"),
        py::arg("k"), py::arg("x"), py::arg("y"));
    m.def("jk2d", &jk2d, py::arg("n"), py::arg("alpha"), py::arg("rho"),
          py::arg("k"), py::arg("x"), py::arg("y"));

    m.def(
        "ml_prabhakar",
        [](double alpha, double beta, double gamma, double z) {
            return ml_prabhakar(alpha, beta, gamma, z);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("z"));
    m.def(
        "ml_hk3",
        [](double g1, double g2, double g3, double rho, int k, double x,
           double y) { return ml_hk3({g1, g2, g3, rho, k}, x, y); },
        py::arg("g1"), py::arg("g2"), py::arg("g3"), py::arg("rho"),
        py::arg("k"), py::arg("x"), py::arg("y"));
    m.def(
        "ml_hk4",
        [](double g1, double g2, double g3, double g4, double kappa, double rho,
           int k, double x, double y) {
            return ml_hk4({g1, g2, g3, g4, kappa, rho, k}, x, y);
        },
        py::arg("g1"), py::arg("g2"), py::arg("g3"), py::arg("g4"),
        py::arg("kappa"), py::arg("rho"), py::arg("k"), py::arg("x"),
        py::arg("y"));
    m.def(
        "ml_jk2",
        [](double g1, double g2, double kappa, double rho, int k, double x,
           double y) { return ml_jk2(g1, g2, kappa, rho, k, x, y); },
        py::arg("g1"), py::arg("g2"), py::arg("kappa"), py::arg("rho"),
        py::arg("k"), py::arg("x"), py::arg("y"));

    m.def(
        "build_rule",
        [](const std::string& kind, int n, double alpha, double beta) {
            QuadratureRule r = build_rule(kind_from_name(kind, alpha, beta), n);
            return std::make_pair(r.nodes, r.weights);
        },
        py::arg("kind"), py::arg("n"), py::arg("alpha") = 0.0,
        py::arg("beta") = 0.0,
        "Gaussian rule nodes/weights for kind in {hermite, laguerre, jacobi}");

    m.def(
        "rl_integral_series",
        [](const std::vector<std::pair<double, double>>& terms, double base,
           double mu) {
            return series_to_terms(
                rl_integral_series(series_from_terms(base, terms), mu));
        },
        py::arg("terms"), py::arg("base"), py::arg("mu"),
        "termwise Riemann-Liouville integral of sum c (t-base)^(beta-1); "
        "terms are (coeff, beta) pairs");
    m.def(
        "rl_derivative_series",
        [](const std::vector<std::pair<double, double>>& terms, double base,
           double mu) {
            return series_to_terms(
                rl_derivative_series(series_from_terms(base, terms), mu));
        },
        py::arg("terms"), py::arg("base"), py::arg("mu"));
    m.def(
        "rl_integral_numeric",
        [](const std::function<double(double)>& f, double mu, double a,
           double x, int n) { return rl_integral_numeric(f, mu, a, x, n); },
        py::arg("f"), py::arg("mu"), py::arg("a"), py::arg("x"),
        py::arg("n") = 32);
    m.def(
        "laplace_series",
        [](const std::vector<std::pair<double, double>>& terms, double q) {
            return laplace_series(series_from_terms(0.0, terms), q);
        },
        py::arg("terms"), py::arg("q"));

    m.def(
        "ml_kernel_apply",
        [](double g1, double g2, double kappa, double rho, int k, double nu1,
           double nu2, const std::function<double(double, double)>& psi,
           double x, double y, int n) {
            return ml_kernel_apply(
                kernel_op_pattern(g1, g2, kappa, rho, k, nu1, nu2), psi, x, y, n);
        },
        py::arg("g1"), py::arg("g2"), py::arg("kappa"), py::arg("rho"),
        py::arg("k"), py::arg("nu1"), py::arg("nu2"), py::arg("psi"),
        py::arg("x"), py::arg("y"), py::arg("n") = 16,
        "Mittag-Leffler-kernel integral operator with the (g1; g2; (g1+1)/2; "
        "g2) parameter pattern, lower limits 0");
}
