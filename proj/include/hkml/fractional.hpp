#ifndef HKML_FRACTIONAL_HPP
#define HKML_FRACTIONAL_HPP

#include "hkml/gpseries.hpp"
#include "hkml/mittag_leffler.hpp"
#include "hkml/quadrature.hpp"
#include "hkml/series.hpp"

#include <functional>

namespace hkml {

// ---- Riemann-Liouville operators on generalized power series -------------

// I^mu: each (c, beta) maps to (c Gamma(beta)/Gamma(beta+mu), beta+mu).
GPSeries rl_integral_series(const GPSeries& F, double mu);

// D^mu: each (c, beta) maps to (c Gamma(beta)/Gamma(beta-mu), beta-mu);
// terms whose Gamma ratio vanishes (beta-mu a non-positive integer) are
// dropped, a surviving non-positive exponent raises "non-integrable result".
GPSeries rl_derivative_series(const GPSeries& F, double mu);

// Partial operators on two-variable series.
GPSeries2D rl_integral_series_x(const GPSeries2D& F, double mu);
GPSeries2D rl_integral_series_y(const GPSeries2D& F, double mu);
GPSeries2D rl_derivative_series_x(const GPSeries2D& F, double mu);
GPSeries2D rl_derivative_series_y(const GPSeries2D& F, double mu);

// Gauss-Jacobi oracle for
//   1/Gamma(mu) int_a^x (x-t)^{mu-1} (t-a)^{inner_exponent} g(t) dt.
// Both endpoint singularities are absorbed into the Jacobi weight.
double rl_integral_numeric(const std::function<double(double)>& g, double mu,
                           double a, double x, int n_points,
                           double inner_exponent = 0.0);

// ---- Laplace transforms ---------------------------------------------------

// L[sum c_i t^{beta_i - 1}](q) = sum c_i Gamma(beta_i) / q^{beta_i}; base 0.
double laplace_series(const GPSeries& F, double q);

// Both sides of the closed-form 2D Laplace transform of
// x^{kappa-1} y^{rho-1} E^(g1; g2; (g1+1)/2; g2)_{kappa,rho,k}(nu1 x, nu2 y).
struct LaplacePair {
    double lhs; // termwise transform, summed by the series engine
    double rhs; // closed form
};
LaplacePair laplace2d_check(double g1, double g2, double kappa, double rho,
                            int k, double nu1, double nu2, double p, double q,
                            const SeriesControl& ctrl = {});

// ---- The Mittag-Leffler-kernel integral operator ---------------------------

struct KernelOpParams {
    double g1 = 0.0, g2 = 0.0, g3 = 0.5, g4 = 0.0;
    double kappa = 1.0, rho = 1.0; // orders, > 0
    int k = 1;
    double nu1 = 0.0, nu2 = 0.0; // kernel scale factors
    double a = 0.0, c = 0.0;     // lower limits
};

// Convenience: the closed-form Laplace pattern (g3 = (g1+1)/2, g4 = g2).
KernelOpParams kernel_op_pattern(double g1, double g2, double kappa, double rho,
                                 int k, double nu1, double nu2, double a = 0.0,
                                 double c = 0.0);

// Nested Gauss-Jacobi evaluation of
//   int_c^y int_a^x (x-t)^{kappa-1} (y-w)^{rho-1}
//       E^(g1;g2;g3;g4)_{kappa,rho,k}(nu1 (x-t), nu2 (y-w)) psi(t, w) dt dw.
// inner_exponent_{x,y} absorb known (t-a)^l / (w-c)^m behaviour of psi into
// the Jacobi weight (psi is divided by those powers at the nodes).
double ml_kernel_apply(const KernelOpParams& op, const Fn2& psi, double x,
                       double y, int n_points, double inner_exponent_x = 0.0,
                       double inner_exponent_y = 0.0);

// Truncation control for 2D series expansions of the kernel.
struct Trunc2D {
    double tol = 1e-15;
    int max_s = 256;
    int max_r = 256;
    double scale_x = 1.0; // domain extent used for the contribution estimate
    double scale_y = 1.0;
};

// The kernel itself as a series around (a, c):
//   sum_{s,r} q(s,r) nu1^s nu2^{kr} / (s! r! Gamma(kappa+s) Gamma(rho+kr))
//       (x-a)^{kappa+s-1} (y-c)^{rho+kr-1}.
GPSeries2D ml_kernel_series(const KernelOpParams& op, const Trunc2D& tr = {});

// Exact termwise convolution of the kernel against a 2D series.
GPSeries2D ml_kernel_apply_series(const KernelOpParams& op, const GPSeries2D& psi,
                                  const Trunc2D& tr = {});

// Double Laplace-type convolution of two series with common base points.
GPSeries2D gpseries2d_convolve(const GPSeries2D& A, const GPSeries2D& B);

// Left inverse: applies the operator with negated parameters
// (-g1; -g2; (-g1+1)/2; -g2) and orders (sigma, eta), then the partial RL
// derivatives of orders kappa+sigma in x and rho+eta in y.  The free orders
// default to sigma = kappa, eta = rho.
GPSeries2D ml_kernel_left_inverse(const KernelOpParams& op, double sigma,
                                  double eta, const GPSeries2D& f,
                                  const Trunc2D& tr = {});
GPSeries2D ml_kernel_left_inverse(const KernelOpParams& op, const GPSeries2D& f,
                                  const Trunc2D& tr = {});

// Semigroup comparison (closed-form pattern enforced on both operators).
struct SemigroupResult {
    double composed;
    double direct;
};
SemigroupResult semigroup_check(const KernelOpParams& op1,
                                const KernelOpParams& op2, const Fn2& psi,
                                double x, double y, int n_points);

// Combined operator of the semigroup identity.
KernelOpParams semigroup_combined(const KernelOpParams& op1,
                                  const KernelOpParams& op2);

// L1-boundedness constant on (a, B) x (c, D) (series of absolute values).
double l1_bound_constant(const KernelOpParams& op, double B, double D,
                         const SeriesControl& ctrl = {});

// Kernel of the integral equation as a 2D series around (0, 0):
//   x^{kappa + n/2} y^{rho} H_n^{kappa,rho;(1-n)/2}((nu1/2) x^{-1/2}, nu2 y).
GPSeries2D hk_int_kernel_series(int n, double kappa, double rho, int k,
                                double nu1, double nu2);

// Solves  (K ** phi)(x, y) = theta(x, y)  for phi, where K is the series
// above.  Requires zeta > kappa + 1, mu > rho + 1 and n even.  The solution
// kernel is E^(n; n; (n+1)/2; n)_{zeta-kappa-1, mu-rho-1, k}(-u/nu1^2, nu2 v);
// the RL derivatives of orders (zeta, mu) are applied after the convolution.
GPSeries2D solve_integral_equation(const GPSeries2D& theta, int n, double kappa,
                                   double rho, int k, double nu1, double nu2,
                                   double zeta, double mu, const Trunc2D& tr = {});

} // namespace hkml

#endif
