#include <doctest.h>

#include "hkml/errors.hpp"
#include "hkml/fractional.hpp"
#include "hkml/gamma.hpp"

#include <cmath>
#include <initializer_list>
#include <random>

using namespace hkml;

TEST_CASE("gpseries normalization")
{
    // equal exponents merge; the cancelled beta = 2 pair drops out
    GPSeries f(0.0, {{1.0, 2.0}, {2.0, 1.0}, {-1.0, 2.0}});
    CHECK(f.size() == 1);
    CHECK(f.eval(2.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(GPSeries(0.0, {{1.0, 0.0}}), Error);
    CHECK_THROWS_AS(GPSeries(0.0, {{1.0, -0.5}}), Error);
}

TEST_CASE("rl_integral_series basics")
{
    GPSeries one(0.0, {{1.0, 1.0}});
    GPSeries i1 = rl_integral_series(one, 1.0);
    REQUIRE(i1.size() == 1);
    CHECK(i1.terms[0].beta == doctest::Approx(2.0));
    CHECK(i1.terms[0].coeff == doctest::Approx(1.0).epsilon(1e-15));

    GPSeries f(0.5, {{1.0, 0.8}});
    GPSeries img = rl_integral_series(f, 0.6);
    CHECK(img.terms[0].beta == doctest::Approx(1.4));
    CHECK(img.terms[0].coeff ==
          doctest::Approx(std::exp(log_gamma(0.8) - log_gamma(1.4)))
              .epsilon(1e-14));
}

TEST_CASE("rl_derivative_series basics and left inverse")
{
    GPSeries lin(0.0, {{1.0, 2.0}});
    GPSeries d = rl_derivative_series(lin, 1.0);
    REQUIRE(d.size() == 1);
    CHECK(d.terms[0].beta == doctest::Approx(1.0));
    CHECK(d.terms[0].coeff == doctest::Approx(1.0).epsilon(1e-15));

    // derivative of a constant of matching order vanishes
    GPSeries one(0.0, {{1.0, 1.0}});
    CHECK(rl_derivative_series(one, 1.0).size() == 0);

    // D^mu I^mu = id, coefficientwise
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ub(0.1, 4.0);
    std::uniform_real_distribution<double> uc(-2.0, 2.0);
    for (int trial = 0; trial < 30; trial++) {
        std::vector<GPSeries::Term> t;
        for (int i = 0; i < 4; i++)
            t.push_back({uc(rng), ub(rng)});
        GPSeries f(0.0, t);
        double mu = ub(rng) / 2.0;
        GPSeries back = rl_derivative_series(rl_integral_series(f, mu), mu);
        REQUIRE(back.size() == f.size());
        for (std::size_t i = 0; i < f.size(); i++) {
            CHECK(back.terms[i].beta ==
                  doctest::Approx(f.terms[i].beta).epsilon(1e-15));
            CHECK(back.terms[i].coeff ==
                  doctest::Approx(f.terms[i].coeff).epsilon(1e-13));
        }
    }

    // non-integrable result
    GPSeries frac(0.0, {{1.0, 0.5}});
    CHECK_THROWS_AS(rl_derivative_series(frac, 0.8), Error);
}

TEST_CASE("rl_integral_numeric closed forms")
{
    // f = 1: I^mu 1 = x^mu / Gamma(mu+1)
    double got = rl_integral_numeric([](double) { return 1.0; }, 0.5, 0.0, 1.0, 12);
    CHECK(got == doctest::Approx(gamma_recip(1.5)).epsilon(1e-13));
    // f = t, mu = 1: plain integral
    got = rl_integral_numeric([](double t) { return t; }, 1.0, 0.0, 2.0, 12);
    CHECK(got == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("laplace_series basics")
{
    GPSeries one(0.0, {{1.0, 1.0}});
    GPSeries lin(0.0, {{1.0, 2.0}});
    for (double q : {0.5, 2.0, 7.0}) {
        CHECK(laplace_series(one, q) == doctest::Approx(1.0 / q).epsilon(1e-14));
        CHECK(laplace_series(lin, q) ==
              doctest::Approx(1.0 / (q * q)).epsilon(1e-14));
    }
    GPSeries shifted(1.0, {{1.0, 1.0}});
    CHECK_THROWS_AS(laplace_series(shifted, 1.0), Error);
}

TEST_CASE("laplace2d_check closed form")
{
    // g1 = g2 = 0: both sides p^-kappa q^-rho
    LaplacePair lp = laplace2d_check(0, 0, 1.2, 0.8, 2, 0.1, 0.3, 2.0, 2.5);
    double want = std::pow(2.0, -1.2) * std::pow(2.5, -0.8);
    CHECK(lp.lhs == doctest::Approx(want).epsilon(1e-13));
    CHECK(lp.rhs == doctest::Approx(want).epsilon(1e-13));

    // nu1 = 0 reduces to a one-dimensional transform in q
    lp = laplace2d_check(1.5, 0.9, 1.0, 1.0, 1, 0.0, 0.4, 2.0, 2.0);
    CHECK(lp.lhs == doctest::Approx(lp.rhs).epsilon(1e-12));

    // spec sample point
    lp = laplace2d_check(1.0, 0.5, 1.0, 1.0, 2, 0.05, 0.3, 2.0, 2.0);
    CHECK(std::fabs(lp.lhs - lp.rhs) / std::fabs(lp.rhs) <= 1e-9);

    CHECK_THROWS_AS(laplace2d_check(1, 1, 1, 1, 1, 2.0, 0.3, 1.0, 2.0), Error);
}

TEST_CASE("fractional images shift the second order parameter")
{
    // terminating three-parameter series around base b
    const double x = 0.7, w = 0.9, b = 0.3;
    const int n = 4;
    auto build = [&](double rho, int k) {
        std::vector<GPSeries::Term> t;
        for (int s = 0; 2 * s <= n; s++) {
            double qs = pochhammer_ratio(-n, 2 * s, -n, s) * std::pow(x, s) /
                        factorial(s);
            for (int r = 0; s + r <= n; r++)
                t.push_back({qs * pochhammer(-n, s + r) *
                                 std::pow(w, (double)k * r) *
                                 gamma_recip(rho + (double)k * r) /
                                 factorial(r),
                             rho + (double)k * r});
        }
        return GPSeries(b, t);
    };
    for (double rho : {1.0, 1.5}) {
        for (double mu : {0.3, 1.2}) {
            for (int k : {1, 2}) {
                GPSeries F = build(rho, k);
                GPSeries img = rl_integral_series(F, mu);
                GPSeries want = build(rho + mu, k);
                REQUIRE(img.size() == want.size());
                for (std::size_t i = 0; i < img.size(); i++)
                    CHECK(img.terms[i].coeff ==
                          doctest::Approx(want.terms[i].coeff).epsilon(1e-12));
                if (rho - mu > 0.0) {
                    GPSeries dimg = rl_derivative_series(F, mu);
                    GPSeries dwant = build(rho - mu, k);
                    for (double y : {0.9, 1.8})
                        CHECK(dimg.eval(y) ==
                              doctest::Approx(dwant.eval(y)).epsilon(1e-10));
                }
            }
        }
    }
}
