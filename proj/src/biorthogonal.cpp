#include "hkml/biorthogonal.hpp"
#include "hkml/errors.hpp"
#include "hkml/gamma.hpp"
#include "hkml/polynomials.hpp"

#include <cmath>
#include <limits>

namespace hkml {

namespace {

const double kInf = std::numeric_limits<double>::infinity();
const double kSqrtPi = 1.77245385090551602729816748334114518;

double konhauser_j_diag(int n, double rho, int k)
{
    return std::exp(log_gamma((double)k * n + rho + 1.0) - log_gamma(n + 1.0));
}

} // namespace

BiorthEvaluators biorthogonal_construct(const BiorthFamilySpec& spec)
{
    BiorthEvaluators ev;
    ev.P = [spec](int n, double x, double y) {
        double rx = spec.basic_map_r(x);
        long double sum = 0.0L;
        for (int s = 0; s <= n; s++) {
            double d = spec.ortho_coeffs(n, s);
            if (d == 0.0)
                continue;
            double j = spec.J_diag(n - s);
            if (j == 0.0)
                throw Error(errkind::parameter_pole,
                            spec.name + ": J_diag vanishes at " + std::to_string(n - s));
            sum += (long double)d / j * powl(rx, s) *
                   (long double)spec.R_eval(n - s, y);
        }
        return (double)sum;
    };
    ev.Q = [spec](int n, double x, double y) {
        double rx = spec.basic_map_r(x);
        long double kx = 0.0L;
        for (int i = 0; i <= n; i++) {
            double d = spec.ortho_coeffs(n, i);
            if (d != 0.0)
                kx += (long double)d * powl(rx, i);
        }
        long double sy = 0.0L;
        for (int j = 0; j <= n; j++)
            sy += (long double)spec.S_eval(j, y);
        return (double)(kx * sy);
    };
    return ev;
}

BiorthFamilySpec hermite_konhauser_spec(double rho, int k)
{
    BiorthFamilySpec s;
    s.name = "hermite-konhauser";
    s.interval_x[0] = -kInf;
    s.interval_x[1] = kInf;
    s.interval_y[0] = 0.0;
    s.interval_y[1] = kInf;
    s.weight_x = QuadKind::hermite_w();
    s.weight_y = QuadKind::laguerre_w(rho);
    s.basic_map_r = [](double x) { return 2.0 * x; };
    s.ortho_coeffs = [](int n, int i) {
        if (i < 0 || i > n || (n - i) % 2 != 0)
            return 0.0;
        int sidx = (n - i) / 2;
        double c = pochhammer(-(double)n, 2 * sidx) / factorial(sidx);
        return (sidx % 2) ? -c : c;
    };
    s.R_eval = [rho, k](int n, double y) { return konhauser_z(n, rho, k, y); };
    s.S_eval = [rho, k](int n, double y) { return konhauser_y(n, rho, k, y); };
    s.J_diag = [rho, k](int n) { return konhauser_j_diag(n, rho, k); };
    s.K_norm = [](int n) { return std::ldexp(factorial(n), n) * kSqrtPi; };
    return s;
}

BiorthFamilySpec laguerre_konhauser_spec(double kappa, double rho, int k)
{
    BiorthFamilySpec s;
    s.name = "laguerre-konhauser";
    s.interval_x[0] = 0.0;
    s.interval_x[1] = kInf;
    s.interval_y[0] = 0.0;
    s.interval_y[1] = kInf;
    s.weight_x = QuadKind::laguerre_w(kappa);
    s.weight_y = QuadKind::laguerre_w(rho);
    s.basic_map_r = [](double x) { return x; };
    s.ortho_coeffs = [kappa](int n, int i) {
        if (i < 0 || i > n)
            return 0.0;
        double pre = std::exp(log_gamma(n + kappa + 1.0) - log_gamma(n + 1.0));
        return pre * pochhammer(-(double)n, i) * gamma_recip(kappa + 1.0 + i) /
               factorial(i);
    };
    s.R_eval = [rho, k](int n, double y) { return konhauser_z(n, rho, k, y); };
    s.S_eval = [rho, k](int n, double y) { return konhauser_y(n, rho, k, y); };
    s.J_diag = [rho, k](int n) { return konhauser_j_diag(n, rho, k); };
    s.K_norm = [kappa](int n) {
        return std::exp(log_gamma(n + kappa + 1.0) - log_gamma(n + 1.0));
    };
    return s;
}

BiorthFamilySpec jacobi_konhauser_spec(double alpha, double rho, int k)
{
    BiorthFamilySpec s;
    s.name = "jacobi-konhauser";
    s.interval_x[0] = -1.0;
    s.interval_x[1] = 1.0;
    s.interval_y[0] = 0.0;
    s.interval_y[1] = kInf;
    // weight (1-x)^alpha (1+x)^rho on x, y^rho e^-y on y
    s.weight_x = QuadKind::jacobi_w(alpha, rho);
    s.weight_y = QuadKind::laguerre_w(rho);
    s.basic_map_r = [](double x) { return (1.0 - x) / 2.0; };
    s.ortho_coeffs = [alpha, rho](int n, int i) {
        if (i < 0 || i > n)
            return 0.0;
        double pre = std::exp(log_gamma(n + alpha + 1.0) - log_gamma(n + 1.0));
        return pre * pochhammer(-(double)n, i) *
               pochhammer(1.0 + alpha + rho + n, i) * gamma_recip(alpha + 1.0 + i) /
               factorial(i);
    };
    s.R_eval = [rho, k](int n, double y) { return konhauser_z(n, rho, k, y); };
    s.S_eval = [rho, k](int n, double y) { return konhauser_y(n, rho, k, y); };
    s.J_diag = [rho, k](int n) { return konhauser_j_diag(n, rho, k); };
    s.K_norm = [alpha, rho](int n) {
        double ab = alpha + rho;
        return std::exp((ab + 1.0) * std::log(2.0) + log_gamma(n + alpha + 1.0) +
                        log_gamma(n + rho + 1.0) - log_gamma(n + ab + 1.0) -
                        log_gamma(n + 1.0)) /
               (2.0 * n + ab + 1.0);
    };
    return s;
}

BiorthFamilySpec laguerre_laguerre_spec(double kappa, double rho)
{
    BiorthFamilySpec s = laguerre_konhauser_spec(kappa, rho, 1);
    s.name = "laguerre-laguerre";
    s.R_eval = [rho](int n, double y) { return laguerre(n, rho, y); };
    s.S_eval = [rho](int n, double y) { return laguerre(n, rho, y); };
    s.J_diag = [rho](int n) {
        return std::exp(log_gamma(n + rho + 1.0) - log_gamma(n + 1.0));
    };
    return s;
}

BiorthFamilySpec biorth_family(const std::string& name, double p1, double p2, int k)
{
    if (name == "hermite-konhauser")
        return hermite_konhauser_spec(p2, k);
    if (name == "laguerre-konhauser")
        return laguerre_konhauser_spec(p1, p2, k);
    if (name == "jacobi-konhauser")
        return jacobi_konhauser_spec(p1, p2, k);
    if (name == "laguerre-laguerre")
        return laguerre_laguerre_spec(p1, p2);
    throw Error(errkind::domain, "unknown biorthogonal family '" + name + "'");
}

} // namespace hkml
