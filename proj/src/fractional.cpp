#include "hkml/fractional.hpp"
#include "hkml/detail/poch_plan.hpp"
#include "hkml/errors.hpp"
#include "hkml/gamma.hpp"

#include <cmath>

namespace hkml {

namespace {

bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && x == std::floor(x);
}

// Gamma(b1) / Gamma(b2), both arguments positive.
double gamma_ratio(double b1, double b2)
{
    return std::exp(log_gamma(b1) - log_gamma(b2));
}

double deriv_coeff(double beta, double mu)
{
    double b2 = beta - mu;
    if (b2 > 0.0)
        return gamma_ratio(beta, b2);
    return std::exp(log_gamma(beta)) * gamma_recip(b2);
}

void check_kernel_orders(const KernelOpParams& op)
{
    if (!(op.kappa > 0.0) || !(op.rho > 0.0) || op.k < 1)
        throw Error(errkind::domain, "kernel operator: kappa, rho > 0, k >= 1");
}

detail::PochQuotientPlan kernel_plan(const KernelOpParams& op)
{
    return detail::PochQuotientPlan({{op.g1, 2, 0}, {op.g2, 1, 1}},
                                    {{op.g3, 1, 0}, {op.g4, 1, 0}});
}

bool has_closed_form_pattern(const KernelOpParams& op)
{
    return op.g3 == (op.g1 + 1.0) / 2.0 && op.g4 == op.g2;
}

} // namespace

GPSeries rl_integral_series(const GPSeries& F, double mu)
{
    if (!(mu > 0.0))
        throw Error(errkind::domain, "rl_integral_series: mu > 0");
    std::vector<GPSeries::Term> t;
    t.reserve(F.size());
    for (const auto& term : F.terms)
        t.push_back({term.coeff * gamma_ratio(term.beta, term.beta + mu),
                     term.beta + mu});
    return GPSeries(F.base, std::move(t));
}

GPSeries rl_derivative_series(const GPSeries& F, double mu)
{
    if (!(mu >= 0.0))
        throw Error(errkind::domain, "rl_derivative_series: mu >= 0");
    std::vector<GPSeries::Term> t;
    for (const auto& term : F.terms) {
        double b2 = term.beta - mu;
        if (b2 <= 0.0 && is_nonpositive_integer(b2))
            continue; // Gamma ratio vanishes
        if (b2 <= 0.0)
            throw Error(errkind::non_integrable,
                        "rl_derivative_series: exponent " + std::to_string(b2));
        t.push_back({term.coeff * deriv_coeff(term.beta, mu), b2});
    }
    return GPSeries(F.base, std::move(t));
}

namespace {

template <bool OnX, bool Derivative>
GPSeries2D rl_partial(const GPSeries2D& F, double mu)
{
    if (Derivative ? !(mu >= 0.0) : !(mu > 0.0))
        throw Error(errkind::domain, "rl partial operator: bad order");
    std::vector<GPSeries2D::Term> t;
    for (const auto& term : F.terms) {
        double beta = OnX ? term.bx : term.by;
        double b2 = Derivative ? beta - mu : beta + mu;
        double c;
        if (Derivative) {
            if (b2 <= 0.0 && is_nonpositive_integer(b2))
                continue;
            if (b2 <= 0.0)
                throw Error(errkind::non_integrable,
                            "rl partial derivative: exponent " + std::to_string(b2));
            c = term.coeff * deriv_coeff(beta, mu);
        } else {
            c = term.coeff * gamma_ratio(beta, b2);
        }
        t.push_back({c, OnX ? b2 : term.bx, OnX ? term.by : b2});
    }
    return GPSeries2D(F.base_x, F.base_y, std::move(t));
}

} // namespace

GPSeries2D rl_integral_series_x(const GPSeries2D& F, double mu)
{
    return rl_partial<true, false>(F, mu);
}
GPSeries2D rl_integral_series_y(const GPSeries2D& F, double mu)
{
    return rl_partial<false, false>(F, mu);
}
GPSeries2D rl_derivative_series_x(const GPSeries2D& F, double mu)
{
    return rl_partial<true, true>(F, mu);
}
GPSeries2D rl_derivative_series_y(const GPSeries2D& F, double mu)
{
    return rl_partial<false, true>(F, mu);
}

double rl_integral_numeric(const std::function<double(double)>& g, double mu,
                           double a, double x, int n_points,
                           double inner_exponent)
{
    if (!(mu > 0.0))
        throw Error(errkind::domain, "rl_integral_numeric: mu > 0");
    if (!(x > a))
        throw Error(errkind::domain, "rl_integral_numeric: x > a");
    QuadratureRule rule = build_rule(QuadKind::jacobi_w(mu - 1.0, inner_exponent),
                                     n_points);
    long double sum = 0.0L;
    for (int i = 0; i < rule.size(); i++) {
        double u = (1.0 + rule.nodes[i]) / 2.0; // in (0,1), t = a + (x-a) u
        sum += (long double)rule.weights[i] * g(a + (x - a) * u);
    }
    double scale = std::pow(x - a, mu + inner_exponent) *
                   std::exp(-(mu + inner_exponent) * std::log(2.0) - log_gamma(mu));
    return scale * (double)sum;
}

double laplace_series(const GPSeries& F, double q)
{
    if (!(q > 0.0))
        throw Error(errkind::domain, "laplace_series: q > 0");
    if (F.base != 0.0)
        throw Error(errkind::domain, "laplace_series: base must be 0");
    long double sum = 0.0L;
    for (const auto& term : F.terms)
        sum += (long double)term.coeff *
               expl((long double)(log_gamma(term.beta) - term.beta * std::log(q)));
    return (double)sum;
}

LaplacePair laplace2d_check(double g1, double g2, double kappa, double rho,
                            int k, double nu1, double nu2, double p, double q,
                            const SeriesControl& ctrl)
{
    if (!(p > 0.0) || !(q > 0.0))
        throw Error(errkind::domain, "laplace2d_check: p, q > 0");
    double qk = std::pow(q, k), nu2k = std::pow(nu2, k);
    double geom = nu2k / qk;
    double zarg = 4.0 * nu1 * qk / (p * (qk - nu2k));
    if (!(std::fabs(geom) < 1.0) || !(std::fabs(zarg) < 1.0))
        throw Error(errkind::domain, "laplace2d_check: convergence conditions violated");

    detail::PochQuotientPlan plan({{g1, 2, 0}, {g2, 1, 1}},
                                  {{(g1 + 1.0) / 2.0, 1, 0}, {g2, 1, 0}});
    auto term = [&](int s, int r) -> double {
        long double v = plan.eval(s, r);
        if (v == 0.0L)
            return 0.0;
        v *= powl(nu1 / p, s) / (long double)factorial(s);
        v *= powl(nu2 / q, (long double)k * r) / (long double)factorial(r);
        return (double)v;
    };
    LaplacePair out;
    out.lhs = std::pow(p, -kappa) * std::pow(q, -rho) *
              sum_double_series(term, ctrl).value;
    out.rhs = std::pow(p, -kappa) * std::pow(q, -rho) *
              std::pow((qk - nu2k) / qk, -g2) * std::pow(1.0 - zarg, -g1 / 2.0);
    return out;
}

KernelOpParams kernel_op_pattern(double g1, double g2, double kappa, double rho,
                                 int k, double nu1, double nu2, double a, double c)
{
    KernelOpParams op;
    op.g1 = g1;
    op.g2 = g2;
    op.g3 = (g1 + 1.0) / 2.0;
    op.g4 = g2;
    op.kappa = kappa;
    op.rho = rho;
    op.k = k;
    op.nu1 = nu1;
    op.nu2 = nu2;
    op.a = a;
    op.c = c;
    return op;
}

double ml_kernel_apply(const KernelOpParams& op, const Fn2& psi, double x,
                       double y, int n_points, double inner_exponent_x,
                       double inner_exponent_y)
{
    check_kernel_orders(op);
    if (!(x > op.a) || !(y > op.c))
        throw Error(errkind::domain, "ml_kernel_apply: need x > a, y > c");

    QuadratureRule rx =
        build_rule(QuadKind::jacobi_w(op.kappa - 1.0, inner_exponent_x), n_points);
    QuadratureRule ry =
        build_rule(QuadKind::jacobi_w(op.rho - 1.0, inner_exponent_y), n_points);

    MLParams4 mp{op.g1, op.g2, op.g3, op.g4, op.kappa, op.rho, op.k};
    const double lx = x - op.a, ly = y - op.c;
    long double sum = 0.0L;
    for (int i = 0; i < rx.size(); i++) {
        double u = (1.0 + rx.nodes[i]) / 2.0;
        double t = op.a + lx * u;
        long double row = 0.0L;
        for (int j = 0; j < ry.size(); j++) {
            double v = (1.0 + ry.nodes[j]) / 2.0;
            double w = op.c + ly * v;
            double e = ml_hk4(mp, op.nu1 * (x - t), op.nu2 * (y - w)).value;
            double ps = psi(t, w);
            if (inner_exponent_x != 0.0)
                ps /= std::pow(t - op.a, inner_exponent_x);
            if (inner_exponent_y != 0.0)
                ps /= std::pow(w - op.c, inner_exponent_y);
            row += (long double)ry.weights[j] * e * ps;
        }
        sum += (long double)rx.weights[i] * row;
    }
    double ex = op.kappa + inner_exponent_x, ey = op.rho + inner_exponent_y;
    double scale = std::pow(lx, ex) * std::pow(ly, ey) *
                   std::exp(-(ex + ey) * std::log(2.0));
    return scale * (double)sum;
}

GPSeries2D ml_kernel_series(const KernelOpParams& op, const Trunc2D& tr)
{
    check_kernel_orders(op);
    auto plan = kernel_plan(op);

    std::vector<GPSeries2D::Term> terms;
    double max_contrib = 0.0;
    int small_streak = 0, zero_streak = 0;
    const int d_max = tr.max_s + tr.max_r;
    for (int d = 0; d <= d_max; d++) {
        double diag_contrib = 0.0;
        bool all_zero = true;
        int s_lo = d > tr.max_r ? d - tr.max_r : 0;
        int s_hi = d < tr.max_s ? d : tr.max_s;
        for (int s = s_lo; s <= s_hi; s++) {
            int r = d - s;
            long double c = plan.eval(s, r);
            if (c == 0.0L)
                continue;
            all_zero = false;
            c *= powl(op.nu1, s) * expl(-(long double)log_gamma(op.kappa + s)) /
                 (long double)factorial(s);
            c *= powl(op.nu2, (long double)op.k * r) *
                 expl(-(long double)log_gamma(op.rho + (double)op.k * r)) /
                 (long double)factorial(r);
            double bx = op.kappa + s, by = op.rho + (double)op.k * r;
            terms.push_back({(double)c, bx, by});
            double contrib = std::fabs((double)c) *
                             std::pow(tr.scale_x, bx - 1.0) *
                             std::pow(tr.scale_y, by - 1.0);
            diag_contrib = std::max(diag_contrib, contrib);
            max_contrib = std::max(max_contrib, contrib);
        }
        if (all_zero) {
            if (++zero_streak >= 3)
                return GPSeries2D(op.a, op.c, std::move(terms));
        } else {
            zero_streak = 0;
        }
        if (diag_contrib < tr.tol * max_contrib && !all_zero) {
            if (++small_streak >= 3)
                return GPSeries2D(op.a, op.c, std::move(terms));
        } else if (!all_zero) {
            small_streak = 0;
        }
    }
    throw Error(errkind::truncation_cap, "ml_kernel_series: caps exceeded");
}

GPSeries2D gpseries2d_convolve(const GPSeries2D& A, const GPSeries2D& B)
{
    if (A.base_x != B.base_x || A.base_y != B.base_y)
        throw Error(errkind::domain, "gpseries2d_convolve: base points differ");
    std::vector<GPSeries2D::Term> t;
    t.reserve(A.size() * B.size());
    for (const auto& ta : A.terms) {
        double lga_x = log_gamma(ta.bx), lga_y = log_gamma(ta.by);
        for (const auto& tb : B.terms) {
            // Beta(bx_a, bx_b) (x-a)^{bx_a+bx_b-1}, same in y
            double lb = lga_x + log_gamma(tb.bx) - log_gamma(ta.bx + tb.bx) +
                        lga_y + log_gamma(tb.by) - log_gamma(ta.by + tb.by);
            t.push_back({ta.coeff * tb.coeff * std::exp(lb), ta.bx + tb.bx,
                         ta.by + tb.by});
        }
    }
    return GPSeries2D(A.base_x, A.base_y, std::move(t));
}

GPSeries2D ml_kernel_apply_series(const KernelOpParams& op, const GPSeries2D& psi,
                                  const Trunc2D& tr)
{
    if (psi.base_x != op.a || psi.base_y != op.c)
        throw Error(errkind::domain,
                    "ml_kernel_apply_series: psi base must match kernel limits");
    return gpseries2d_convolve(ml_kernel_series(op, tr), psi);
}

GPSeries2D ml_kernel_left_inverse(const KernelOpParams& op, double sigma,
                                  double eta, const GPSeries2D& f,
                                  const Trunc2D& tr)
{
    if (!(sigma > 0.0) || !(eta > 0.0))
        throw Error(errkind::domain, "ml_kernel_left_inverse: sigma, eta > 0");
    KernelOpParams neg = kernel_op_pattern(-op.g1, -op.g2, sigma, eta, op.k,
                                           op.nu1, op.nu2, op.a, op.c);
    GPSeries2D g = ml_kernel_apply_series(neg, f, tr);
    g = rl_derivative_series_x(g, op.kappa + sigma);
    return rl_derivative_series_y(g, op.rho + eta);
}

GPSeries2D ml_kernel_left_inverse(const KernelOpParams& op, const GPSeries2D& f,
                                  const Trunc2D& tr)
{
    return ml_kernel_left_inverse(op, op.kappa, op.rho, f, tr);
}

KernelOpParams semigroup_combined(const KernelOpParams& op1,
                                  const KernelOpParams& op2)
{
    return kernel_op_pattern(op1.g1 + op2.g1, op1.g2 + op2.g2,
                             op1.kappa + op2.kappa, op1.rho + op2.rho, op1.k,
                             op1.nu1, op1.nu2, op1.a, op1.c);
}

SemigroupResult semigroup_check(const KernelOpParams& op1,
                                const KernelOpParams& op2, const Fn2& psi,
                                double x, double y, int n_points)
{
    if (!has_closed_form_pattern(op1) || !has_closed_form_pattern(op2))
        throw Error(errkind::domain,
                    "semigroup_check: operators must have the (g1; g2; (g1+1)/2; g2) pattern");
    if (op1.k != op2.k || op1.nu1 != op2.nu1 || op1.nu2 != op2.nu2 ||
        op1.a != op2.a || op1.c != op2.c)
        throw Error(errkind::domain,
                    "semigroup_check: operators must share k, nu1, nu2, a, c");

    auto inner = [&](double t, double w) {
        return ml_kernel_apply(op2, psi, t, w, n_points);
    };
    SemigroupResult res;
    res.composed =
        ml_kernel_apply(op1, inner, x, y, n_points, op2.kappa, op2.rho);
    res.direct = ml_kernel_apply(semigroup_combined(op1, op2), psi, x, y, n_points);
    return res;
}

double l1_bound_constant(const KernelOpParams& op, double B, double D,
                         const SeriesControl& ctrl)
{
    check_kernel_orders(op);
    if (!(B > op.a) || !(D > op.c))
        throw Error(errkind::domain, "l1_bound_constant: need B > a, D > c");
    auto plan = kernel_plan(op);
    const double lx = B - op.a, ly = D - op.c;
    auto term = [&](int s, int r) -> double {
        long double v = plan.eval(s, r);
        if (v == 0.0L)
            return 0.0;
        v = fabsl(v);
        double bx = op.kappa + s, by = op.rho + (double)op.k * r;
        v *= powl(std::fabs(op.nu1), s) * expl(-(long double)log_gamma(bx)) /
             (long double)factorial(s) / bx;
        v *= powl(std::fabs(op.nu2), (long double)op.k * r) *
             expl(-(long double)log_gamma(by)) / (long double)factorial(r) / by;
        v *= powl(lx, bx) * powl(ly, by);
        return (double)v;
    };
    return sum_double_series(term, ctrl).value;
}

GPSeries2D hk_int_kernel_series(int n, double kappa, double rho, int k,
                                double nu1, double nu2)
{
    if (n < 0 || k < 1 || !(kappa > -1.0) || !(rho > -1.0))
        throw Error(errkind::domain, "hk_int_kernel_series: bad parameters");
    const double c = (1.0 - n) / 2.0;
    std::vector<GPSeries2D::Term> t;
    for (int s = 0; s <= n / 2; s++) {
        long double cs = (s % 2 ? -1.0L : 1.0L);
        for (int j = s; j < 2 * s; j++) // (-n)_{2s} / (-n)_s
            cs *= (long double)(-n + j);
        cs /= pochhammer_ld(c, s) * (long double)factorial(s);
        cs *= powl(nu1, n - 2 * s) *
              (long double)gamma_recip(kappa + 1.0 + s);
        for (int r = 0; r <= n - s; r++) {
            long double cr = cs * pochhammer_ld(-n, s + r) *
                             powl(nu2, (long double)k * r) *
                             (long double)gamma_recip(rho + 1.0 + (double)k * r) /
                             (long double)factorial(r);
            t.push_back({(double)cr, kappa + s + 1.0, rho + (double)k * r + 1.0});
        }
    }
    return GPSeries2D(0.0, 0.0, std::move(t));
}

GPSeries2D solve_integral_equation(const GPSeries2D& theta, int n, double kappa,
                                   double rho, int k, double nu1, double nu2,
                                   double zeta, double mu, const Trunc2D& tr)
{
    if (n < 0 || n % 2 != 0)
        throw Error(errkind::domain, "solve_integral_equation: n must be even");
    if (!(zeta > kappa + 1.0) || !(mu > rho + 1.0))
        throw Error(errkind::domain,
                    "solve_integral_equation: need zeta > kappa+1, mu > rho+1");
    if (nu1 == 0.0)
        throw Error(errkind::domain, "solve_integral_equation: nu1 != 0");
    if (theta.base_x != 0.0 || theta.base_y != 0.0)
        throw Error(errkind::domain, "solve_integral_equation: base must be (0,0)");

    KernelOpParams sol = kernel_op_pattern((double)n, (double)n, zeta - kappa - 1.0,
                                           mu - rho - 1.0, k,
                                           -1.0 / (nu1 * nu1), nu2);
    GPSeries2D g = gpseries2d_convolve(ml_kernel_series(sol, tr), theta);
    g = rl_derivative_series_x(g, zeta);
    g = rl_derivative_series_y(g, mu);
    return gpseries2d_scale(g, std::pow(nu1, -n));
}

} // namespace hkml
