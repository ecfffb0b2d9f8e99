#include <doctest.h>

#include "hkml/biorthogonal.hpp"
#include "hkml/errors.hpp"
#include "hkml/gamma.hpp"
#include "hkml/hk2d.hpp"
#include "hkml/polynomials.hpp"
#include "hkml/quadrature.hpp"

#include <cmath>
#include <initializer_list>

using namespace hkml;

namespace {

const double kSqrtPi = 1.77245385090551602729816748334114518;

BiorthMatrix certify(const BiorthFamilySpec& spec, int n_max, int deg_x,
                     int deg_y)
{
    BiorthEvaluators ev = biorthogonal_construct(spec);
    QuadratureRule rx = build_rule(spec.weight_x, rule_size_for_degree(deg_x));
    QuadratureRule ry = build_rule(spec.weight_y, rule_size_for_degree(deg_y));
    return biorthogonality_matrix(ev.P, ev.Q, n_max, rx, ry);
}

} // namespace

TEST_CASE("hermite-konhauser construction: diagonal and upper triangle")
{
    const int n_max = 5, k = 2;
    const double rho = 0.5;
    BiorthFamilySpec spec = hermite_konhauser_spec(rho, k);
    BiorthMatrix M = certify(spec, n_max, 2 * n_max, k * n_max + n_max);
    for (int n = 0; n <= n_max; n++) {
        double want = spec.K_norm(n);
        CHECK(M.entry[n][n] == doctest::Approx(want).epsilon(1e-12));
        for (int m = n + 1; m <= n_max; m++)
            CHECK(std::fabs(M.entry[n][m]) <= 1e-11 * want);
    }
    // the literal index pairing of the generic construction is only
    // one-sidedly biorthogonal: entry (5,1) is K_norm(5)/32 exactly
    CHECK(M.entry[5][1] ==
          doctest::Approx(spec.K_norm(5) / 32.0).epsilon(1e-11));
    CHECK(M.entry[5][1] == doctest::Approx(120.0 * kSqrtPi).epsilon(1e-11));
}

TEST_CASE("hermite-konhauser construction differs from the explicit family")
{
    // both are biorthogonal against the same partner, but the generic
    // theorem pairs r(x)^s with Z_{n-s}, the explicit family (2x)^{n-2s}
    BiorthFamilySpec spec = hermite_konhauser_spec(0.5, 2);
    BiorthEvaluators ev = biorthogonal_construct(spec);
    double a = ev.P(3, 0.7, 1.1);
    double b = hk2d({3, 0.5, 2}, 0.7, 1.1);
    CHECK(std::fabs(a - b) > 1e-6 * std::max(std::fabs(a), std::fabs(b)));
    // only degree 0 coincides (already at n = 1 the generic construction
    // pairs (2x) with Z_0 while the explicit family keeps the full r-sum)
    CHECK(ev.P(0, 0.7, 1.1) ==
          doctest::Approx(hk2d({0, 0.5, 2}, 0.7, 1.1)).epsilon(1e-13));
    CHECK(ev.P(1, 0.7, 1.1) ==
          doctest::Approx(2.0 * 0.7 * gamma_recip(1.5)).epsilon(1e-13));
}

TEST_CASE("laguerre-konhauser construction reproduces the companion set")
{
    const double kap = 0.3, rho = 0.8;
    const int k = 2;
    BiorthFamilySpec spec = laguerre_konhauser_spec(kap, rho, k);
    BiorthEvaluators ev = biorthogonal_construct(spec);
    // Q_n = L_n^kap(x) sum_j Y_j(y)
    for (int n : {0, 1, 3}) {
        for (double x : {0.4, 2.0}) {
            for (double y : {0.3, 1.7}) {
                long double ys = 0.0L;
                for (int j = 0; j <= n; j++)
                    ys += konhauser_y(j, rho, k, y);
                double want = laguerre(n, kap, x) * (double)ys;
                CHECK(ev.Q(n, x, y) == doctest::Approx(want).epsilon(1e-12));
            }
        }
    }
    // kap = 0 makes ||L_n||^2 = 1: upper triangle + diagonal of the
    // certification matrix is the identity
    BiorthFamilySpec unit = laguerre_konhauser_spec(0.0, rho, k);
    BiorthMatrix M = certify(unit, 4, 8, k * 4 + 4);
    for (int n = 0; n <= 4; n++) {
        CHECK(M.entry[n][n] == doctest::Approx(1.0).epsilon(1e-12));
        for (int m = n + 1; m <= 4; m++)
            CHECK(std::fabs(M.entry[n][m]) <= 1e-11);
    }
}

TEST_CASE("laguerre-laguerre sanity family")
{
    BiorthFamilySpec spec = laguerre_laguerre_spec(0.5, 0.5);
    BiorthMatrix M = certify(spec, 4, 8, 8);
    for (int n = 0; n <= 4; n++) {
        CHECK(M.entry[n][n] == doctest::Approx(spec.K_norm(n)).epsilon(1e-12));
        for (int m = n + 1; m <= 4; m++)
            CHECK(std::fabs(M.entry[n][m]) <= 1e-11 * spec.K_norm(n));
    }
}

TEST_CASE("degree-0 evaluators integrate to the norm")
{
    for (const char* name :
         {"hermite-konhauser", "laguerre-konhauser", "jacobi-konhauser",
          "laguerre-laguerre"}) {
        BiorthFamilySpec spec = biorth_family(name, 0.3, 0.6, 2);
        BiorthMatrix M = certify(spec, 0, 2, 4);
        CHECK(M.entry[0][0] ==
              doctest::Approx(spec.K_norm(0)).epsilon(1e-12));
        CHECK(M.entry[0][0] > 0.0);
    }
}

TEST_CASE("registry rejects unknown names")
{
    CHECK_THROWS_AS(biorth_family("nope", 0, 0, 1), Error);
}
