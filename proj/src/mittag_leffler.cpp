#include "hkml/mittag_leffler.hpp"
#include "hkml/detail/poch_plan.hpp"
#include "hkml/errors.hpp"
#include "hkml/gamma.hpp"

#include <cmath>
#include <limits>

namespace hkml {

namespace detail {

long double recip_gamma_ld(double a)
{
    if (a > 0.0)
        return expl(-(long double)log_gamma(a));
    return (long double)gamma_recip(a);
}

long double recip_factorial_ld(int n)
{
    if (n <= 170)
        return 1.0L / (long double)factorial(n);
    return expl(-(long double)log_gamma(n + 1.0));
}

// 1/Gamma(base + len) relative to the hoisted factor 1/Gamma(base):
// an exact Pochhammer product whenever base > 0, so that evaluations at
// shifted parameters stay bit-correlated with the finite-sum routes.
long double recip_gamma_rel_ld(double base, long long len)
{
    long double p = pochhammer_ld(base, len);
    if (p <= std::numeric_limits<long double>::max())
        return 1.0L / p;
    // product overflowed; fall back to the log form
    return expl((long double)log_gamma(base) -
                (long double)log_gamma(base + (double)len));
}

} // namespace detail

using detail::PochQuotientPlan;
using detail::recip_factorial_ld;
using detail::recip_gamma_ld;
using detail::recip_gamma_rel_ld;

SeriesResult ml_prabhakar(double alpha, double beta, double gamma, double z,
                          const SeriesControl& ctrl)
{
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw Error(errkind::domain, "ml_prabhakar: alpha, beta > 0");

    SeriesResult res;
    long double sum = 0.0L;
    long double poch = 1.0L; // (gamma)_n
    int small_streak = 0, zero_streak = 0;
    double last = 0.0;
    for (int n = 0; n <= ctrl.max_index_s; n++) {
        long double t = poch * powl(z, n) * recip_gamma_ld(alpha * n + beta) *
                        recip_factorial_ld(n);
        if (!std::isfinite((double)t))
            throw Error(errkind::no_convergence, "ml_prabhakar: non-finite term");
        if (t != 0.0L) {
            res.terms_used++;
            sum += t;
            zero_streak = 0;
        } else if (++zero_streak >= 3) {
            res.value = (double)sum;
            res.terminated = true;
            return res;
        }
        last = (double)t;
        if (std::fabs(last) < ctrl.rel_tol * std::fabs((double)sum)) {
            if (++small_streak >= 3) {
                res.value = (double)sum;
                res.abs_error_est = std::fabs(last);
                return res;
            }
        } else {
            small_streak = 0;
        }
        poch *= gamma + n;
    }
    throw Error(errkind::no_convergence, "ml_prabhakar: caps hit");
}

namespace {

// y-direction factor 1/Gamma(rho + k r): for rho > 0 the value is split as
// recip(Gamma(rho)) * 1/(rho)_{kr} with the first factor hoisted out of the
// series, keeping the terms exact products (correlated with the polynomial
// routes); below zero 1/Gamma continues through the poles per term.
struct GammaSlot {
    double base;
    bool hoist;
    GammaSlot(double b) : base(b), hoist(b > 0.0) {}
    long double term_factor(long long len) const
    {
        if (hoist)
            return recip_gamma_rel_ld(base, len);
        return (long double)gamma_recip(base + (double)len);
    }
    double hoisted() const { return hoist ? gamma_recip(base) : 1.0; }
};

SeriesResult scale_result(SeriesResult r, double factor)
{
    r.value *= factor;
    r.abs_error_est *= std::fabs(factor);
    return r;
}

} // namespace

SeriesResult ml_hk3(const MLParams3& p, double x, double y,
                    const SeriesControl& ctrl)
{
    if (p.k < 1)
        throw Error(errkind::domain, "ml_hk3: k >= 1");
    PochQuotientPlan plan({{p.g1, 2, 0}, {p.g2, 1, 1}}, {{p.g3, 1, 0}});
    const int k = p.k;
    GammaSlot gy(p.rho);
    auto term = [&](int s, int r) -> long double {
        long double v = plan.eval(s, r);
        if (v == 0.0L)
            return 0.0L;
        v *= powl(x, s) * recip_factorial_ld(s);
        v *= powl(y, (long double)k * r) * gy.term_factor((long long)k * r) *
             recip_factorial_ld(r);
        return v;
    };
    return scale_result(sum_double_series(term, ctrl), gy.hoisted());
}

SeriesResult ml_hk4(const MLParams4& p, double x, double y,
                    const SeriesControl& ctrl)
{
    if (p.k < 1)
        throw Error(errkind::domain, "ml_hk4: k >= 1");
    PochQuotientPlan plan({{p.g1, 2, 0}, {p.g2, 1, 1}},
                          {{p.g3, 1, 0}, {p.g4, 1, 0}});
    const int k = p.k;
    GammaSlot gx(p.kappa), gy(p.rho);
    auto term = [&](int s, int r) -> long double {
        long double v = plan.eval(s, r);
        if (v == 0.0L)
            return 0.0L;
        v *= powl(x, s) * gx.term_factor(s) * recip_factorial_ld(s);
        v *= powl(y, (long double)k * r) * gy.term_factor((long long)k * r) *
             recip_factorial_ld(r);
        return v;
    };
    return scale_result(sum_double_series(term, ctrl),
                        gx.hoisted() * gy.hoisted());
}

SeriesResult ml_jk2(double g1, double g2, double kappa, double rho, int k,
                    double x, double y, const SeriesControl& ctrl)
{
    if (k < 1)
        throw Error(errkind::domain, "ml_jk2: k >= 1");
    PochQuotientPlan plan({{g1, 1, 1}, {g2, 1, 0}}, {});
    GammaSlot gx(kappa), gy(rho);
    auto term = [&](int s, int r) -> long double {
        long double v = plan.eval(s, r);
        if (v == 0.0L)
            return 0.0L;
        v *= powl(x, s) * gx.term_factor(s) * recip_factorial_ld(s);
        v *= powl(y, (long double)k * r) * gy.term_factor((long long)k * r) *
             recip_factorial_ld(r);
        return v;
    };
    return scale_result(sum_double_series(term, ctrl),
                        gx.hoisted() * gy.hoisted());
}

SeriesResult kdf_series(const KdFParams& p, double x, double y,
                        const SeriesControl& ctrl)
{
    std::vector<PochQuotientPlan::Spec> num, den;
    for (double a : p.upper_joint)
        num.push_back({a, 1, 1});
    for (double a : p.upper_x)
        num.push_back({a, 1, 0});
    for (double a : p.upper_y)
        num.push_back({a, 0, 1});
    for (double a : p.lower_joint)
        den.push_back({a, 1, 1});
    for (double a : p.lower_x)
        den.push_back({a, 1, 0});
    for (double a : p.lower_y)
        den.push_back({a, 0, 1});
    PochQuotientPlan plan(num, den);
    auto term = [&](int s, int r) -> long double {
        long double v = plan.eval(s, r);
        if (v == 0.0L)
            return 0.0L;
        v *= powl(x, s) * recip_factorial_ld(s);
        v *= powl(y, r) * recip_factorial_ld(r);
        return v;
    };
    return sum_double_series(term, ctrl);
}

} // namespace hkml
