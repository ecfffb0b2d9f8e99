#include "hkml/quadrature.hpp"
#include "hkml/errors.hpp"
#include "hkml/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hkml {

namespace {

const double kSqrtPi = 1.77245385090551602729816748334114518;

// Implicit-QL eigensolver for a symmetric tridiagonal matrix, accumulating
// only the first row of the eigenvector matrix (all that Golub-Welsch needs).
// d: diagonal, e: subdiagonal (e[i] couples i and i+1), z: first-row tracker.
bool tridiag_ql(std::vector<double>& d, std::vector<double>& e,
                std::vector<double>& z)
{
    const int n = static_cast<int>(d.size());
    const double eps = std::numeric_limits<double>::epsilon();
    e.resize(n, 0.0);

    for (int l = 0; l < n; l++) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; m++) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd)
                    break;
            }
            if (m != l) {
                if (iter++ == 60)
                    return false;
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; i--) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && i >= l)
                    continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    return true;
}

// Monic three-term recurrence p_{j+1} = (x - a_j) p_j - b_j p_{j-1}.
void recurrence(const QuadKind& kind, int n, std::vector<double>& a,
                std::vector<double>& b)
{
    a.assign(n, 0.0);
    b.assign(n, 0.0); // b[0] unused
    switch (kind.family) {
    case QuadKind::Family::hermite:
        for (int j = 1; j < n; j++)
            b[j] = j / 2.0;
        break;
    case QuadKind::Family::laguerre: {
        double al = kind.alpha;
        for (int j = 0; j < n; j++)
            a[j] = 2.0 * j + al + 1.0;
        for (int j = 1; j < n; j++)
            b[j] = j * (j + al);
        break;
    }
    case QuadKind::Family::jacobi: {
        double al = kind.alpha, be = kind.beta, ab = al + be;
        a[0] = (be - al) / (ab + 2.0);
        for (int j = 1; j < n; j++) {
            double t = 2.0 * j + ab;
            a[j] = (be * be - al * al) / (t * (t + 2.0));
        }
        if (n > 1)
            b[1] = 4.0 * (al + 1.0) * (be + 1.0) /
                   ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        for (int j = 2; j < n; j++) {
            double t = 2.0 * j + ab;
            b[j] = 4.0 * j * (j + al) * (j + be) * (j + ab) /
                   (t * t * (t + 1.0) * (t - 1.0));
        }
        break;
    }
    }
}

} // namespace

std::string QuadKind::name() const
{
    switch (family) {
    case Family::hermite:
        return "hermite";
    case Family::laguerre:
        return "laguerre(" + std::to_string(alpha) + ")";
    case Family::jacobi:
        return "jacobi(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
    }
    return "?";
}

double QuadKind::total_weight() const
{
    switch (family) {
    case Family::hermite:
        return kSqrtPi;
    case Family::laguerre:
        return std::exp(log_gamma(alpha + 1.0));
    case Family::jacobi:
        return std::exp((alpha + beta + 1.0) * std::log(2.0) +
                        log_gamma(alpha + 1.0) + log_gamma(beta + 1.0) -
                        log_gamma(alpha + beta + 2.0));
    }
    return 0.0;
}

QuadratureRule build_rule(const QuadKind& kind, int n_points)
{
    if (n_points < 1)
        throw Error(errkind::domain, "build_rule: n_points >= 1");
    if (kind.family == QuadKind::Family::laguerre && !(kind.alpha > -1.0))
        throw Error(errkind::domain, "build_rule: laguerre alpha > -1");
    if (kind.family == QuadKind::Family::jacobi &&
        (!(kind.alpha > -1.0) || !(kind.beta > -1.0)))
        throw Error(errkind::domain, "build_rule: jacobi alpha, beta > -1");

    std::vector<double> a, b;
    recurrence(kind, n_points, a, b);

    std::vector<double> d = a;
    std::vector<double> e(n_points, 0.0);
    for (int j = 1; j < n_points; j++)
        e[j - 1] = std::sqrt(b[j]);
    std::vector<double> z(n_points, 0.0);
    z[0] = 1.0;

    if (!tridiag_ql(d, e, z))
        throw Error(errkind::no_convergence,
                    "build_rule: eigensolver failed for " + kind.name() +
                        " N=" + std::to_string(n_points));

    std::vector<int> idx(n_points);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return d[i] < d[j]; });

    QuadratureRule rule;
    rule.kind = kind;
    rule.nodes.resize(n_points);
    rule.weights.resize(n_points);
    const double mu0 = kind.total_weight();
    for (int i = 0; i < n_points; i++) {
        rule.nodes[i] = d[idx[i]];
        rule.weights[i] = mu0 * z[idx[i]] * z[idx[i]];
    }
    return rule;
}

int rule_size_for_degree(int degree)
{
    return (degree + 1 + 1) / 2 + 2;
}

namespace {

struct KahanLD {
    long double sum = 0.0L;
    long double comp = 0.0L;
    void add(long double v)
    {
        long double y = v - comp;
        long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

} // namespace

double inner_product_2d(const Fn2& f, const Fn2& g, const QuadratureRule& rule_x,
                        const QuadratureRule& rule_y, const Fn2& extra_weight)
{
    KahanLD acc;
    for (int i = 0; i < rule_x.size(); i++) {
        const double x = rule_x.nodes[i];
        KahanLD row;
        for (int j = 0; j < rule_y.size(); j++) {
            const double y = rule_y.nodes[j];
            double v = f(x, y) * g(x, y);
            if (extra_weight)
                v *= extra_weight(x, y);
            row.add((long double)rule_y.weights[j] * v);
        }
        acc.add((long double)rule_x.weights[i] * row.sum);
    }
    return (double)acc.sum;
}

double integrate_1d(const std::function<double(double)>& f, const QuadratureRule& rule)
{
    KahanLD acc;
    for (int i = 0; i < rule.size(); i++)
        acc.add((long double)rule.weights[i] * f(rule.nodes[i]));
    return (double)acc.sum;
}

BiorthMatrix biorthogonality_matrix(const FamilyEval& P, const FamilyEval& Q,
                                    int n_max, const QuadratureRule& rule_x,
                                    const QuadratureRule& rule_y,
                                    const Fn2& extra_weight)
{
    BiorthMatrix m;
    m.entry.assign(n_max + 1, std::vector<double>(n_max + 1, 0.0));
    for (int n = 0; n <= n_max; n++) {
        for (int q = 0; q <= n_max; q++) {
            auto fn = [&](double x, double y) { return P(n, x, y); };
            auto gq = [&](double x, double y) { return Q(q, x, y); };
            m.entry[n][q] = inner_product_2d(fn, gq, rule_x, rule_y, extra_weight);
        }
    }
    double min_diag = std::numeric_limits<double>::infinity();
    double max_off = 0.0;
    for (int n = 0; n <= n_max; n++) {
        min_diag = std::min(min_diag, std::fabs(m.entry[n][n]));
        for (int q = 0; q <= n_max; q++)
            if (q != n)
                max_off = std::max(max_off, std::fabs(m.entry[n][q]));
    }
    m.min_diag_abs = min_diag;
    m.dominance = min_diag > 0.0 ? max_off / min_diag
                                 : std::numeric_limits<double>::infinity();
    return m;
}

} // namespace hkml
