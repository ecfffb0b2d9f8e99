#include "hkml/polynomials.hpp"
#include "hkml/errors.hpp"
#include "hkml/gamma.hpp"

#include <cmath>
#include <vector>

namespace hkml {

namespace {

void require(bool ok, const char* msg)
{
    if (!ok)
        throw Error(errkind::domain, msg);
}

} // namespace

double hermite(int n, double x)
{
    require(n >= 0, "hermite: n >= 0");
    long double sum = 0.0L;
    for (int s = 0; s <= n / 2; s++) {
        long double c = (s % 2 ? -1.0L : 1.0L) * pochhammer_ld(-n, 2 * s) /
                        (long double)factorial(s);
        sum += c * powl(2.0L * x, n - 2 * s);
    }
    return static_cast<double>(sum);
}

double laguerre(int n, double alpha, double x)
{
    require(n >= 0, "laguerre: n >= 0");
    require(alpha > -1.0, "laguerre: alpha > -1");
    // Gamma(n+alpha+1)/Gamma(alpha+1+s) folded into the exact product
    // (alpha+1+s)_{n-s}, so every factor is a plain product
    long double sum = 0.0L;
    for (int s = 0; s <= n; s++) {
        sum += pochhammer_ld(-n, s) * pochhammer_ld(alpha + 1.0 + s, n - s) *
               powl(x, s) / (long double)factorial(s);
    }
    return static_cast<double>(sum / (long double)factorial(n));
}

double jacobi(int n, double alpha, double beta, double x)
{
    require(n >= 0, "jacobi: n >= 0");
    require(alpha > -1.0 && beta > -1.0, "jacobi: alpha, beta > -1");
    long double z = (1.0L - (long double)x) / 2.0L;
    long double sum = 0.0L;
    for (int s = 0; s <= n; s++) {
        sum += pochhammer_ld(-n, s) * pochhammer_ld(n + alpha + beta + 1.0, s) *
               pochhammer_ld(alpha + 1.0 + s, n - s) * powl(z, s) /
               (long double)factorial(s);
    }
    return static_cast<double>(sum / (long double)factorial(n));
}

double konhauser_z(int n, double rho, int k, double t)
{
    require(n >= 0, "konhauser_z: n >= 0");
    require(rho > -1.0, "konhauser_z: rho > -1");
    require(k >= 1, "konhauser_z: k >= 1");
    // Gamma(1+rho+kn)/Gamma(rho+1+kr) = (rho+1+kr)_{k(n-r)}
    long double sum = 0.0L;
    for (int r = 0; r <= n; r++) {
        sum += pochhammer_ld(-n, r) *
               pochhammer_ld(rho + 1.0 + (double)k * r,
                             (long long)k * (n - r)) *
               powl(t, (long double)k * r) / (long double)factorial(r);
    }
    return static_cast<double>(sum / (long double)factorial(n));
}

double konhauser_y(int n, double rho, int k, double t)
{
    require(n >= 0, "konhauser_y: n >= 0");
    require(rho > -1.0, "konhauser_y: rho > -1");
    require(k >= 1, "konhauser_y: k >= 1");
    // The defining inner sum sum_j (-1)^j C(i,j) ((j+rho+1)/k)_n is an i-th
    // finite difference with catastrophic cancellation already at n ~ 8.
    // Expanding prod_m (j + rho+1+mk) = sum_p e_{n-p} j^p (elementary
    // symmetric polynomials of positive roots) and using
    // sum_j (-1)^j C(i,j) j^p = (-1)^i i! S(p,i) gives coefficients that are
    // sums of positive terms:
    //   Y_n(t) = 1/(n! k^n) sum_i (-t)^i sum_{p>=i} e_{n-p} S(p,i).
    std::vector<long double> e(n + 1, 0.0L); // e[q] = e_q(roots)
    e[0] = 1.0L;
    for (int m = 0; m < n; m++) {
        long double root = rho + 1.0 + (long double)m * k;
        for (int q = m + 1; q >= 1; q--)
            e[q] += root * e[q - 1];
    }
    // Stirling numbers of the second kind S(p, i), p, i <= n
    std::vector<std::vector<long double>> S(n + 1,
                                            std::vector<long double>(n + 1, 0.0L));
    S[0][0] = 1.0L;
    for (int p = 1; p <= n; p++)
        for (int i = 1; i <= p; i++)
            S[p][i] = (long double)i * S[p - 1][i] + S[p - 1][i - 1];

    long double sum = 0.0L;
    for (int i = 0; i <= n; i++) {
        long double coeff = 0.0L;
        for (int p = i; p <= n; p++)
            coeff += e[n - p] * S[p][i];
        sum += powl(-t, i) * coeff;
    }
    long double scale = (long double)factorial(n) * powl((long double)k, n);
    return static_cast<double>(sum / scale);
}

} // namespace hkml
