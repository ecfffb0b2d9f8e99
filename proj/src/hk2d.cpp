#include "hkml/hk2d.hpp"
#include "hkml/errors.hpp"
#include "hkml/gamma.hpp"
#include "hkml/mittag_leffler.hpp"
#include "hkml/polynomials.hpp"

#include <cmath>

namespace hkml {

namespace {

void validate(const HK2DParams& p)
{
    if (p.n < 0 || p.k < 1 || !(p.rho > -1.0))
        throw Error(errkind::domain, "hk2d: need n >= 0, k >= 1, rho > -1");
}

// (-n)_{2s} / (-n)_s = prod_{j=s}^{2s-1} (-n + j), exact for s <= n/2
long double poch_2s_over_s(int n, int s)
{
    long double v = 1.0L;
    for (int j = s; j < 2 * s; j++)
        v *= (long double)(-n + j);
    return v;
}

// Both finite-sum routes carry the single factor 1/Gamma(rho+1) outside and
// keep every Gamma ratio as an exact Pochhammer product, so the two
// evaluation orders agree to the reordering roundoff.
double hk2d_direct(const HK2DParams& p, double x, double y)
{
    const int n = p.n, k = p.k;
    long double sum = 0.0L;
    for (int s = 0; s <= n / 2; s++) {
        long double cs = (s % 2 ? -1.0L : 1.0L) * poch_2s_over_s(n, s) /
                         (long double)factorial(s);
        cs *= powl(2.0L * x, n - 2 * s);
        long double ysum = 0.0L;
        for (int r = 0; r <= n - s; r++) {
            ysum += pochhammer_ld(-n, s + r) * powl(y, (long double)k * r) /
                    (pochhammer_ld(p.rho + 1.0, (long long)k * r) *
                     (long double)factorial(r));
        }
        sum += cs * ysum;
    }
    return (double)(sum * (long double)gamma_recip(p.rho + 1.0));
}

double hk2d_zform(const HK2DParams& p, double x, double y)
{
    const int n = p.n, k = p.k;
    long double sum = 0.0L;
    for (int s = 0; s <= n / 2; s++) {
        long double c = (s % 2 ? -1.0L : 1.0L) * pochhammer_ld(-n, 2 * s) *
                        (long double)factorial(n - s) /
                        (long double)factorial(s);
        c /= pochhammer_ld(p.rho + 1.0, (long long)k * (n - s));
        sum += c * powl(2.0L * x, n - 2 * s) *
               (long double)konhauser_z(n - s, p.rho, k, y);
    }
    return (double)(sum * (long double)gamma_recip(p.rho + 1.0));
}

double hk2d_kdf(const HK2DParams& p, double x, double y)
{
    if (x == 0.0)
        throw Error(errkind::singular_argument, "hk2d(kdf): x must be nonzero");
    // terminating Kampe de Feriet sum, evaluated inline in extended
    // precision (the generic kdf_series engine rounds each term to double,
    // which costs ~1e-12 at n = 8)
    const int n = p.n, k = p.k;
    const long double xa = -1.0L / ((long double)x * x);
    const long double ya = powl((long double)y / k, k);
    long double sum = 0.0L;
    for (int s = 0; s <= n / 2; s++) {
        long double cs = pochhammer_ld(-(long double)n / 2.0L, s) *
                         pochhammer_ld((-(long double)n + 1.0L) / 2.0L, s) *
                         powl(xa, s) / (long double)factorial(s);
        long double rsum = 0.0L;
        for (int r = 0; r <= n - s; r++) {
            long double den = (long double)factorial(r);
            for (int j = 0; j < k; j++)
                den *= pochhammer_ld((p.rho + 1.0 + j) / k, r);
            rsum += pochhammer_ld(-n + s, r) * powl(ya, r) / den;
        }
        sum += cs * rsum;
    }
    return (double)(powl(2.0L * x, n) *
                    (long double)gamma_recip(1.0 + p.rho) * sum);
}

double hk2d_ml(const HK2DParams& p, double x, double y)
{
    if (x == 0.0)
        throw Error(errkind::singular_argument, "hk2d(ml): x must be nonzero");
    MLParams3 q;
    q.g1 = q.g2 = q.g3 = -(double)p.n;
    q.rho = p.rho + 1.0;
    q.k = p.k;
    SeriesResult f = ml_hk3(q, -1.0 / (4.0 * x * x), y);
    return std::pow(2.0 * x, p.n) * f.value;
}

} // namespace

double hk2d(const HK2DParams& p, double x, double y, Hk2dMethod method)
{
    validate(p);
    switch (method) {
    case Hk2dMethod::direct:
        return hk2d_direct(p, x, y);
    case Hk2dMethod::zform:
        return hk2d_zform(p, x, y);
    case Hk2dMethod::kdf:
        return hk2d_kdf(p, x, y);
    case Hk2dMethod::ml:
        return hk2d_ml(p, x, y);
    }
    throw Error(errkind::domain, "hk2d: unknown method");
}

double hk2d_partner(int m, double rho, int k, double x, double y)
{
    if (m < 0 || k < 1 || !(rho > -1.0))
        throw Error(errkind::domain, "hk2d_partner: need m >= 0, k >= 1, rho > -1");
    long double ysum = 0.0L;
    for (int j = 0; j <= m; j++)
        ysum += (long double)konhauser_y(j, rho, k, y);
    return (double)((long double)hermite(m, x) * ysum);
}

double hk2d_modified(const ModHK2DParams& p, double x, double y)
{
    if (p.n < 0 || p.k < 1 || !(p.kappa > -1.0) || !(p.rho > -1.0))
        throw Error(errkind::domain,
                    "hk2d_modified: need n >= 0, k >= 1, kappa > -1, rho > -1");
    if (p.c <= 0.0 && p.c == std::floor(p.c) && -p.c < std::floor(p.n / 2.0))
        throw Error(errkind::parameter_pole,
                    "hk2d_modified: (c)_s vanishes inside the s range");

    const int n = p.n, k = p.k;
    long double sum = 0.0L;
    for (int s = 0; s <= n / 2; s++) {
        long double cs = (s % 2 ? -1.0L : 1.0L) * poch_2s_over_s(n, s);
        cs /= pochhammer_ld(p.c, s) * (long double)factorial(s);
        cs *= (long double)gamma_recip(p.kappa + 1.0 + s);
        cs *= powl(2.0L * x, n - 2 * s);
        long double ysum = 0.0L;
        for (int r = 0; r <= n - s; r++) {
            ysum += pochhammer_ld(-n, s + r) * powl(y, (long double)k * r) *
                    (long double)gamma_recip(p.rho + 1.0 + (double)k * r) /
                    (long double)factorial(r);
        }
        sum += cs * ysum;
    }
    return (double)sum;
}

double jk2d(int n, double alpha, double rho, int k, double x, double y)
{
    if (n < 0 || k < 1 || !(alpha > -1.0) || !(rho > -1.0))
        throw Error(errkind::domain,
                    "jk2d: need n >= 0, k >= 1, alpha > -1, rho > -1");
    // Gamma(1+alpha+n)/Gamma(1+alpha+s) = (1+alpha+s)_{n-s} and
    // Gamma(rho+1+kr) = Gamma(rho+1) (rho+1)_{kr}: exact products around a
    // single hoisted 1/Gamma(rho+1)
    long double z = (1.0L - (long double)x) / 2.0L;
    long double sum = 0.0L;
    for (int s = 0; s <= n; s++) {
        long double cs = pochhammer_ld(1.0 + alpha + rho + n, s) *
                         pochhammer_ld(1.0 + alpha + s, n - s) /
                         (long double)factorial(s);
        cs *= powl(z, s);
        long double ysum = 0.0L;
        for (int r = 0; r <= n - s; r++) {
            ysum += pochhammer_ld(-n, s + r) * powl(y, (long double)k * r) /
                    (pochhammer_ld(rho + 1.0, (long long)k * r) *
                     (long double)factorial(r));
        }
        sum += cs * ysum;
    }
    return (double)(sum * (long double)gamma_recip(rho + 1.0) /
                    (long double)factorial(n));
}

} // namespace hkml
