#include <doctest.h>

#include "hkml/errors.hpp"
#include "hkml/fractional.hpp"
#include "hkml/gamma.hpp"

#include <cmath>
#include <initializer_list>

using namespace hkml;

TEST_CASE("ml_kernel_apply reduces to the double RL integral at gamma = 0")
{
    KernelOpParams op = kernel_op_pattern(0, 0, 0.8, 1.3, 2, 0.4, 0.6);
    auto one = [](double, double) { return 1.0; };
    for (double x : {0.5, 1.2}) {
        for (double y : {0.4, 1.0}) {
            double want = std::pow(x, op.kappa) * std::pow(y, op.rho) *
                          gamma_recip(op.kappa + 1.0) * gamma_recip(op.rho + 1.0);
            CHECK(ml_kernel_apply(op, one, x, y, 10) ==
                  doctest::Approx(want).epsilon(1e-12));
        }
    }
    auto zero = [](double, double) { return 0.0; };
    CHECK(ml_kernel_apply(op, zero, 0.7, 0.7, 10) == 0.0);
}

TEST_CASE("ml_kernel_series at zero parameters is the single RL term")
{
    KernelOpParams op = kernel_op_pattern(0, 0, 0.8, 1.3, 2, 0.4, 0.6);
    GPSeries2D ker = ml_kernel_series(op);
    REQUIRE(ker.size() == 1);
    CHECK(ker.terms[0].bx == doctest::Approx(op.kappa));
    CHECK(ker.terms[0].by == doctest::Approx(op.rho));
    CHECK(ker.terms[0].coeff ==
          doctest::Approx(gamma_recip(op.kappa) * gamma_recip(op.rho))
              .epsilon(1e-14));
}

TEST_CASE("ml_kernel_series matches pointwise kernel values")
{
    KernelOpParams op = kernel_op_pattern(1.0, 0.5, 0.75, 0.9, 2, 0.2, 0.3);
    GPSeries2D ker = ml_kernel_series(op);
    MLParams4 mp{op.g1, op.g2, op.g3, op.g4, op.kappa, op.rho, op.k};
    for (double u : {0.3, 0.9}) {
        for (double v : {0.2, 1.0}) {
            double want = std::pow(u, op.kappa - 1.0) * std::pow(v, op.rho - 1.0) *
                          ml_hk4(mp, op.nu1 * u, op.nu2 * v).value;
            CHECK(ker.eval(u, v) == doctest::Approx(want).epsilon(1e-13));
        }
    }
}

TEST_CASE("ml_kernel_apply_series agrees with nested quadrature")
{
    KernelOpParams op = kernel_op_pattern(1.0, 0.5, 0.75, 0.9, 2, 0.2, 0.3);
    GPSeries2D psi(0, 0, {{1.0, 1.0, 1.0}, {0.5, 2.0, 1.0}});
    GPSeries2D img = ml_kernel_apply_series(op, psi);
    auto psi_fn = [&](double t, double w) { return psi.eval(t, w); };
    for (double x : {0.6, 1.0}) {
        for (double y : {0.5, 0.9}) {
            double numeric = ml_kernel_apply(op, psi_fn, x, y, 20);
            CHECK(img.eval(x, y) == doctest::Approx(numeric).epsilon(1e-6));
        }
    }
}

TEST_CASE("kernel transformation combines parameters, series path")
{
    KernelOpParams g = kernel_op_pattern(1.2, 0.7, 0.9, 1.1, 2, 0.3, 0.4);
    KernelOpParams m = kernel_op_pattern(0.6, 1.3, 0.8, 0.7, 2, 0.3, 0.4);
    GPSeries2D psi = ml_kernel_series(m);
    GPSeries2D lhs = ml_kernel_apply_series(g, psi);
    GPSeries2D rhs = ml_kernel_series(semigroup_combined(g, m));
    for (double x : {0.4, 0.8})
        for (double y : {0.3, 0.9})
            CHECK(lhs.eval(x, y) == doctest::Approx(rhs.eval(x, y)).epsilon(1e-12));
}

TEST_CASE("kernel transformation combines parameters, numeric path")
{
    // psi = t^{sigma-1} w^{eta-1} E_mu(nu1 t, nu2 w) against the gamma-pattern
    // kernel equals the combined-parameter function
    KernelOpParams g = kernel_op_pattern(1.0, 0.5, 0.9, 1.1, 2, 0.25, 0.35);
    KernelOpParams m = kernel_op_pattern(0.8, 1.2, 0.7, 0.6, 2, 0.25, 0.35);
    MLParams4 ml_m{m.g1, m.g2, m.g3, m.g4, m.kappa, m.rho, m.k};
    KernelOpParams comb = semigroup_combined(g, m);
    MLParams4 ml_c{comb.g1, comb.g2, comb.g3, comb.g4, comb.kappa, comb.rho,
                   comb.k};
    auto psi = [&](double t, double w) {
        return std::pow(t, m.kappa - 1.0) * std::pow(w, m.rho - 1.0) *
               ml_hk4(ml_m, m.nu1 * t, m.nu2 * w).value;
    };
    for (double x : {0.6, 1.0}) {
        for (double y : {0.5, 0.9}) {
            double got = ml_kernel_apply(g, psi, x, y, 16, m.kappa - 1.0,
                                         m.rho - 1.0);
            double want = std::pow(x, comb.kappa - 1.0) *
                          std::pow(y, comb.rho - 1.0) *
                          ml_hk4(ml_c, comb.nu1 * x, comb.nu2 * y).value;
            CHECK(got == doctest::Approx(want).epsilon(1e-10));
        }
    }
}

TEST_CASE("left inverse default free orders")
{
    KernelOpParams op = kernel_op_pattern(0.8, 1.5, 0.5, 0.9, 1, 0.2, 0.1);
    GPSeries2D psi(0, 0, {{1.0, 1.5, 2.0}});
    GPSeries2D f = ml_kernel_apply_series(op, psi);
    GPSeries2D rec = ml_kernel_left_inverse(op, f);
    for (double x : {0.4, 0.9})
        for (double y : {0.5, 1.0})
            CHECK(rec.eval(x, y) ==
                  doctest::Approx(psi.eval(x, y)).epsilon(1e-10));
}

TEST_CASE("semigroup property, numeric and series paths")
{
    KernelOpParams op1 = kernel_op_pattern(1.0, 0.5, 0.75, 0.85, 2, 0.15, 0.25);
    KernelOpParams op2 = kernel_op_pattern(0.6, 0.4, 0.65, 0.7, 2, 0.15, 0.25);
    SemigroupResult r = semigroup_check(
        op1, op2, [](double t, double w) { return t * w; }, 0.8, 0.9, 14);
    CHECK(r.composed ==
          doctest::Approx(r.direct).epsilon(1e-5));

    GPSeries2D psi(0, 0, {{1.0, 2.0, 2.0}});
    GPSeries2D composed =
        ml_kernel_apply_series(op1, ml_kernel_apply_series(op2, psi));
    GPSeries2D direct =
        ml_kernel_apply_series(semigroup_combined(op1, op2), psi);
    for (double x : {0.5, 1.0})
        for (double y : {0.4, 0.9})
            CHECK(composed.eval(x, y) ==
                  doctest::Approx(direct.eval(x, y)).epsilon(1e-10));

    // pattern enforcement
    KernelOpParams bad = op1;
    bad.g3 = 0.1;
    CHECK_THROWS_AS(semigroup_check(bad, op2,
                                    [](double, double) { return 1.0; }, 0.5,
                                    0.5, 8),
                    Error);
}

TEST_CASE("left inverse recovers psi")
{
    KernelOpParams op = kernel_op_pattern(1.0, 0.5, 0.75, 0.75, 2, 0.1, 0.2);
    for (const GPSeries2D& psi :
         {GPSeries2D(0, 0, {{1.0, 1.0, 1.0}}),
          GPSeries2D(0, 0, {{1.0, 2.5, 1.5}}),
          GPSeries2D(0, 0, {{1.0, 1.0, 1.0}, {2.0, 2.0, 2.0}})}) {
        GPSeries2D f = ml_kernel_apply_series(op, psi);
        GPSeries2D rec = ml_kernel_left_inverse(op, 0.75, 0.75, f);
        for (double x : {0.3, 0.7, 1.0})
            for (double y : {0.2, 0.6, 1.0})
                CHECK(rec.eval(x, y) ==
                      doctest::Approx(psi.eval(x, y)).epsilon(1e-10));
    }
    // gamma = 0: plain double RL derivative inverting the double RL integral
    KernelOpParams rl = kernel_op_pattern(0, 0, 0.6, 0.8, 1, 0.0, 0.0);
    GPSeries2D psi(0, 0, {{1.0, 1.5, 2.0}});
    GPSeries2D rec =
        ml_kernel_left_inverse(rl, rl.kappa, rl.rho, ml_kernel_apply_series(rl, psi));
    for (double x : {0.4, 0.9})
        for (double y : {0.5, 1.0})
            CHECK(rec.eval(x, y) ==
                  doctest::Approx(psi.eval(x, y)).epsilon(1e-11));
}

TEST_CASE("l1 bound constant")
{
    // all gammas zero, unit orders, unit intervals: K = 1
    KernelOpParams op = kernel_op_pattern(0, 0, 1.0, 1.0, 1, 0.7, 0.9);
    CHECK(l1_bound_constant(op, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    // positivity
    KernelOpParams op2 = kernel_op_pattern(1.0, 0.5, 0.8, 0.8, 2, -0.3, 0.4);
    CHECK(l1_bound_constant(op2, 1.0, 1.0) > 0.0);
}

TEST_CASE("integral equation round trip")
{
    const int n = 2, k = 2;
    const double kap = 0.5, rho = 0.5, nu1 = 1.0, nu2 = 0.3;
    GPSeries2D K = hk_int_kernel_series(n, kap, rho, k, nu1, nu2);
    GPSeries2D phi(0, 0, {{1.0, 1.0, 1.0}});
    GPSeries2D theta = gpseries2d_convolve(K, phi);
    GPSeries2D rec = solve_integral_equation(theta, n, kap, rho, k, nu1, nu2,
                                             kap + 2.0, rho + 2.0);
    for (double x : {0.25, 0.6, 1.0})
        for (double y : {0.3, 0.75, 1.0})
            CHECK(rec.eval(x, y) == doctest::Approx(1.0).epsilon(1e-9));

    // zero data
    GPSeries2D rec0 = solve_integral_equation(GPSeries2D(0, 0, {}), n, kap, rho,
                                              k, nu1, nu2, kap + 2.0, rho + 2.0);
    CHECK(rec0.size() == 0);

    // linearity
    GPSeries2D phi2(0, 0, {{0.5, 2.0, 1.0}});
    GPSeries2D theta2 = gpseries2d_convolve(K, phi2);
    GPSeries2D rec_sum = solve_integral_equation(
        gpseries2d_add(theta, theta2), n, kap, rho, k, nu1, nu2, kap + 2.0,
        rho + 2.0);
    GPSeries2D rec2 = solve_integral_equation(theta2, n, kap, rho, k, nu1, nu2,
                                              kap + 2.0, rho + 2.0);
    for (double x : {0.4, 0.9})
        for (double y : {0.4, 0.9})
            CHECK(rec_sum.eval(x, y) ==
                  doctest::Approx(rec.eval(x, y) + rec2.eval(x, y))
                      .epsilon(1e-9));

    // preconditions
    CHECK_THROWS_AS(solve_integral_equation(theta, 3, kap, rho, k, nu1, nu2,
                                            kap + 2.0, rho + 2.0),
                    Error);
    CHECK_THROWS_AS(solve_integral_equation(theta, n, kap, rho, k, nu1, nu2,
                                            kap + 0.5, rho + 2.0),
                    Error);
}

TEST_CASE("double fractional images shift both orders of the kernel function")
{
    // I^mu_x I^zeta_y on x^{kappa-1} y^{rho-1} E4(nu1 x, nu2 y) lands on the
    // same function with orders kappa+mu, rho+zeta; D^mu_x D^zeta_y inverts
    KernelOpParams op = kernel_op_pattern(1.1, 0.6, 0.8, 0.9, 2, 0.3, 0.4);
    const double mu = 0.7, zeta = 1.3;
    GPSeries2D f = ml_kernel_series(op);
    GPSeries2D img = rl_integral_series_y(rl_integral_series_x(f, mu), zeta);

    KernelOpParams shifted = op;
    shifted.kappa += mu;
    shifted.rho += zeta;
    GPSeries2D want = ml_kernel_series(shifted);
    for (double x : {0.4, 1.0})
        for (double y : {0.3, 0.9})
            CHECK(img.eval(x, y) ==
                  doctest::Approx(want.eval(x, y)).epsilon(1e-12));

    GPSeries2D back =
        rl_derivative_series_y(rl_derivative_series_x(img, mu), zeta);
    for (double x : {0.4, 1.0})
        for (double y : {0.3, 0.9})
            CHECK(back.eval(x, y) ==
                  doctest::Approx(f.eval(x, y)).epsilon(1e-12));
}

TEST_CASE("kernel operator rejects points outside the domain")
{
    KernelOpParams op = kernel_op_pattern(0, 0, 0.8, 1.3, 2, 0.4, 0.6, 0.5, 0.5);
    auto one = [](double, double) { return 1.0; };
    CHECK_THROWS_AS(ml_kernel_apply(op, one, 0.4, 1.0, 8), Error);
    CHECK_THROWS_AS(ml_kernel_apply(op, one, 1.0, 0.5, 8), Error);
    CHECK(std::isfinite(ml_kernel_apply(op, one, 1.0, 1.0, 8)));

    KernelOpParams bad = op;
    bad.kappa = 0.0;
    CHECK_THROWS_AS(ml_kernel_apply(bad, one, 1.0, 1.0, 8), Error);
}

TEST_CASE("kernel positivity for nonnegative series and parameters")
{
    KernelOpParams op = kernel_op_pattern(1.0, 0.5, 0.8, 0.8, 2, 0.3, 0.4);
    auto psi = [](double t, double w) { return 1.0 + t + w; };
    for (double x : {0.3, 1.0})
        for (double y : {0.5, 1.0})
            CHECK(ml_kernel_apply(op, psi, x, y, 10) > 0.0);
}
