#include "hkml/gamma.hpp"
#include "hkml/errors.hpp"

#include <cmath>
#include <limits>

namespace hkml {

namespace {

bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && x == std::floor(x);
}

const double kPi = 3.14159265358979323846264338327950288;
const double kLnPi = 1.14472988584940017414342735135305871;

} // namespace

double log_gamma(double x)
{
    // Lanczos coefficients from Press et al., Numerical Recipes 3rd ed.
    static const double cof[14] = {
        57.1562356658629235,     -59.5979603554754912,
        14.1360979747417471,     -0.491913816097620199,
        0.339946499848118887e-4,  0.465236289270485756e-4,
       -0.983744753048795646e-4,  0.158088703224912494e-3,
       -0.210264441724104883e-3,  0.217439618115212643e-3,
       -0.164318106536763890e-3,  0.844182239838527433e-4,
       -0.261908384015814087e-4,  0.368991826595316234e-5};

    if (!(x > 0.0))
        throw Error(errkind::domain, "log_gamma requires x > 0");
    if (x == 1.0 || x == 2.0)
        return 0.0;

    double y = x;
    double tmp = x + 5.24218750000000000;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = 0.999999999999997092;
    for (int j = 0; j < 14; j++)
        ser += cof[j] / ++y;
    return tmp + std::log(2.5066282746310005 * ser / x);
}

double sinpi(double x)
{
    double m = std::round(x);
    double r = x - m;
    if (r == 0.0)
        return 0.0;
    double s = std::sin(kPi * r);
    return (std::fmod(std::fabs(m), 2.0) == 1.0) ? -s : s;
}

double gamma_recip(double x)
{
    if (x > 0.0)
        return std::exp(-log_gamma(x));
    if (is_nonpositive_integer(x))
        return 0.0;
    // 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi, computed in logs
    double s = sinpi(x);
    double lg = log_gamma(1.0 - x) + std::log(std::fabs(s)) - kLnPi;
    double v = std::exp(lg);
    return s < 0.0 ? -v : v;
}

double pochhammer(double a, int n)
{
    double p = 1.0;
    for (int j = 0; j < n; j++)
        p *= a + j;
    return p;
}

long double pochhammer_ld(long double a, long long n)
{
    long double p = 1.0L;
    for (long long j = 0; j < n; j++)
        p *= a + j;
    return p;
}

double pochhammer_ratio(double a, int p, double b, int q)
{
    if (a == b) {
        if (p >= q) {
            double v = 1.0;
            for (int j = q; j < p; j++)
                v *= a + j;
            return v;
        }
        double v = 1.0;
        for (int j = p; j < q; j++) {
            double f = a + j;
            if (f == 0.0)
                throw Error(errkind::nonterminating_pole,
                            "pochhammer_ratio: zero factor in denominator tail");
            v *= f;
        }
        return 1.0 / v;
    }
    double den = pochhammer(b, q);
    if (den == 0.0)
        throw Error(errkind::nonterminating_pole,
                    "pochhammer_ratio: (b)_q = 0 with a != b");
    return pochhammer(a, p) / den;
}

LogSigned log_pochhammer(double a, long long n)
{
    if (n == 0)
        return {0.0, 1};
    if (a > 0.0)
        return {log_gamma(a + static_cast<double>(n)) - log_gamma(a), 1};
    if (is_nonpositive_integer(a)) {
        if (static_cast<double>(n) > -a)
            return {-std::numeric_limits<double>::infinity(), 0};
        // all factors are negative integers or the leading a itself
        double lg = 0.0;
        int sign = 1;
        for (long long j = 0; j < n; j++) {
            double f = a + static_cast<double>(j);
            if (f < 0.0)
                sign = -sign;
            lg += std::log(std::fabs(f));
        }
        return {lg, sign};
    }
    // negative non-integer base: split off the m negative factors
    long long m = static_cast<long long>(std::ceil(-a));
    if (m > n)
        m = n;
    double lg = 0.0;
    int sign = (m % 2 == 0) ? 1 : -1;
    for (long long j = 0; j < m; j++)
        lg += std::log(-(a + static_cast<double>(j)));
    if (n > m)
        lg += log_gamma(a + static_cast<double>(n)) - log_gamma(a + static_cast<double>(m));
    return {lg, sign};
}

double factorial(int n)
{
    static const int kMax = 170;
    static double table[kMax + 1];
    static bool init = [] {
        table[0] = 1.0;
        for (int i = 1; i <= kMax; i++)
            table[i] = table[i - 1] * i;
        return true;
    }();
    (void)init;
    if (n < 0)
        throw Error(errkind::domain, "factorial of negative integer");
    if (n > kMax)
        return std::numeric_limits<double>::infinity();
    return table[n];
}

double binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0.0;
    if (k > n - k)
        k = n - k;
    double v = 1.0;
    for (int j = 1; j <= k; j++)
        v = v * (n - k + j) / j;
    return v;
}

double pow_over_gamma(double y, double p, double a)
{
    if (y == 0.0)
        return (p == 0.0) ? gamma_recip(a) : 0.0;
    if (a > 0.0) {
        double lg = log_gamma(a);
        double l = p * std::log(std::fabs(y)) - lg;
        double v = std::exp(l);
        if (y < 0.0 && std::fmod(p, 2.0) == 1.0)
            v = -v;
        return v;
    }
    double r = gamma_recip(a);
    if (r == 0.0)
        return 0.0;
    return std::pow(y, p) * r;
}

} // namespace hkml
