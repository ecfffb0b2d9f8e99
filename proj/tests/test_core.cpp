#include <doctest.h>

#include "hkml/errors.hpp"
#include "hkml/gamma.hpp"
#include "hkml/series.hpp"

#include <cmath>
#include <initializer_list>
#include <random>

using namespace hkml;

TEST_CASE("log_gamma at known points")
{
    CHECK(log_gamma(1.0) == 0.0);
    CHECK(log_gamma(2.0) == 0.0);
    CHECK(log_gamma(0.5) ==
          doctest::Approx(0.57236494292470008707).epsilon(1e-14));
    CHECK(log_gamma(6.0) == doctest::Approx(std::log(120.0)).epsilon(1e-14));
    CHECK(log_gamma(2.5) ==
          doctest::Approx(0.28468287047291915963).epsilon(1e-13));
    CHECK(log_gamma(10.0) ==
          doctest::Approx(12.801827480081469611).epsilon(1e-14));
    CHECK(log_gamma(0.1) ==
          doctest::Approx(2.2527126517342059599).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), Error);
    CHECK_THROWS_AS(log_gamma(-1.5), Error);
}

TEST_CASE("gamma_recip on the full line")
{
    CHECK(gamma_recip(1.0) == 1.0);
    CHECK(gamma_recip(0.0) == 0.0);
    CHECK(gamma_recip(-3.0) == 0.0);
    CHECK(gamma_recip(-250.0) == 0.0);
    // reflection: Gamma(-0.5) = -2 sqrt(pi)
    CHECK(gamma_recip(-0.5) ==
          doctest::Approx(-1.0 / (2.0 * std::sqrt(M_PI))).epsilon(1e-13));
    for (double x : {0.1, 0.5, 1.0, 2.5, 10.0})
        CHECK(gamma_recip(x) * std::exp(log_gamma(x)) ==
              doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("pochhammer basics")
{
    CHECK(pochhammer(3.0, 2) == 12.0);
    CHECK(pochhammer(-7.3, 0) == 1.0);
    CHECK(pochhammer(-2.0, 3) == 0.0);
}

TEST_CASE("pochhammer addition and duplication identities")
{
    std::mt19937_64 rng(911);
    std::uniform_real_distribution<double> ua(-5.0, 5.0);
    std::uniform_int_distribution<int> un(0, 12);
    for (int i = 0; i < 100; i++) {
        double a = ua(rng);
        int n = un(rng), m = un(rng);
        double lhs = pochhammer(a, n + m);
        double rhs = pochhammer(a, n) * pochhammer(a + n, m);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    }
    std::uniform_int_distribution<int> us(0, 20);
    for (int i = 0; i < 100; i++) {
        double a = ua(rng);
        int s = us(rng);
        double lhs = pochhammer(a, 2 * s);
        double rhs = std::ldexp(1.0, 2 * s) * pochhammer(a / 2.0, s) *
                     pochhammer((a + 1.0) / 2.0, s);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    }
}

TEST_CASE("pochhammer_ratio cancels shared zeros")
{
    CHECK(pochhammer_ratio(-4.0, 2, -4.0, 1) == -3.0);
    CHECK(pochhammer_ratio(-4.0, 0, -4.0, 0) == 1.0);
    CHECK(pochhammer_ratio(-4.0, 6, -4.0, 3) == 0.0);
    CHECK(pochhammer_ratio(2.0, 3, 3.0, 2) ==
          doctest::Approx(pochhammer(2.0, 3) / pochhammer(3.0, 2)));
    CHECK_THROWS_AS(pochhammer_ratio(1.5, 2, -2.0, 3), Error);
}

TEST_CASE("log_pochhammer signs and zeros")
{
    auto lp = log_pochhammer(-2.5, 3); // (-2.5)(-1.5)(-0.5) < 0
    CHECK(lp.sign == -1);
    CHECK(std::exp(lp.log_abs) ==
          doctest::Approx(std::fabs(pochhammer(-2.5, 3))).epsilon(1e-13));
    CHECK(log_pochhammer(-2.0, 3).sign == 0);
    auto pos = log_pochhammer(1.5, 10);
    CHECK(pos.sign == 1);
    CHECK(std::exp(pos.log_abs) ==
          doctest::Approx(pochhammer(1.5, 10)).epsilon(1e-13));
}

TEST_CASE("series engine: delta term")
{
    auto res = sum_double_series(
        [](int s, int r) { return (s == 0 && r == 0) ? 1.0 : 0.0; });
    CHECK(res.value == 1.0);
    CHECK(res.terminated);
    CHECK(res.abs_error_est == 0.0);
    CHECK(res.terms_used == 1);
}

TEST_CASE("series engine: exponential product")
{
    auto res = sum_double_series([](int s, int r) {
        return std::pow(1.0, s) / factorial(s) * std::pow(1.0, r) / factorial(r);
    });
    CHECK(res.value ==
          doctest::Approx(7.3890560989306495).epsilon(1e-14)); // e^2
    CHECK_FALSE(res.terminated);
    CHECK(res.abs_error_est < 1e-14 * res.value);
}

TEST_CASE("series engine: Pochhammer termination")
{
    auto res = sum_double_series([](int s, int r) {
        return pochhammer(-2.0, s + r) * std::pow(0.3, s) * std::pow(0.4, r) /
               (factorial(s) * factorial(r));
    });
    CHECK(res.terminated);
    CHECK(res.abs_error_est == 0.0);
    CHECK(res.terms_used <= 6); // only s + r <= 2 contribute
    // closed form: terminating binomial-type sum
    long double want = 0.0L;
    for (int s = 0; s <= 2; s++)
        for (int r = 0; s + r <= 2; r++)
            want += pochhammer(-2.0, s + r) * std::pow(0.3, s) *
                    std::pow(0.4, r) / (factorial(s) * factorial(r));
    CHECK(res.value == doctest::Approx((double)want).epsilon(1e-15));
}

TEST_CASE("series engine: terminating sums reproduce finite evaluation")
{
    // random terminating double polynomials
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> uc(-2.0, 2.0);
    for (int trial = 0; trial < 20; trial++) {
        double a = uc(rng), b = uc(rng);
        int n = 1 + (int)(std::fabs(uc(rng)) * 3);
        auto term = [&](int s, int r) {
            return pochhammer(-(double)n, s + r) * std::pow(a, s) *
                   std::pow(b, r) / (factorial(s) * factorial(r));
        };
        auto res = sum_double_series(term);
        long double want = 0.0L;
        for (int s = 0; s <= n; s++)
            for (int r = 0; s + r <= n; r++)
                want += term(s, r);
        CHECK(res.terminated);
        CHECK(res.value == doctest::Approx((double)want).epsilon(1e-14));
    }
}

TEST_CASE("pow_over_gamma edge cases")
{
    CHECK(pow_over_gamma(0.0, 0.0, 1.3) ==
          doctest::Approx(gamma_recip(1.3)).epsilon(1e-14));
    CHECK(pow_over_gamma(0.0, 3.0, 1.3) == 0.0);
    // pole in the denominator wins regardless of the power
    CHECK(pow_over_gamma(2.0, 5.0, -1.0) == 0.0);
    CHECK(pow_over_gamma(-2.0, 3.0, 2.0) ==
          doctest::Approx(-8.0).epsilon(1e-14));
    CHECK(pow_over_gamma(3.0, 40.0, 20.0) ==
          doctest::Approx(std::pow(3.0, 40.0) * gamma_recip(20.0))
              .epsilon(1e-13));
}

TEST_CASE("series engine: cap hit raises no convergence")
{
    SeriesControl ctrl;
    ctrl.max_index_s = 5;
    ctrl.max_index_r = 5;
    CHECK_THROWS_AS(sum_double_series([](int, int) { return 1.0; }, ctrl),
                    Error);
}
