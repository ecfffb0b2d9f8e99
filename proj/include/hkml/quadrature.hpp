#ifndef HKML_QUADRATURE_HPP
#define HKML_QUADRATURE_HPP

#include <functional>
#include <string>
#include <vector>

namespace hkml {

// Weight-function identifier for Gaussian rules and biorthogonality specs.
struct QuadKind {
    enum class Family { hermite, laguerre, jacobi };
    Family family = Family::hermite;
    double alpha = 0.0; // laguerre(alpha) / jacobi(alpha, beta)
    double beta = 0.0;

    static QuadKind hermite_w() { return {Family::hermite, 0.0, 0.0}; }
    static QuadKind laguerre_w(double a) { return {Family::laguerre, a, 0.0}; }
    static QuadKind jacobi_w(double a, double b) { return {Family::jacobi, a, b}; }

    std::string name() const;
    // integral of the bare weight function (mu_0 of the recurrence)
    double total_weight() const;
};

struct QuadratureRule {
    QuadKind kind;
    std::vector<double> nodes;   // strictly increasing
    std::vector<double> weights; // all positive
    int size() const { return static_cast<int>(nodes.size()); }
};

// Golub-Welsch construction: eigendecomposition of the symmetric Jacobi
// matrix of the three-term recurrence.  Exact for polynomial integrands of
// degree <= 2N - 1 against the weight.
QuadratureRule build_rule(const QuadKind& kind, int n_points);

// Suggested point count for polynomial exactness at a given degree
// (ceil((deg+1)/2) plus a safety margin).
int rule_size_for_degree(int degree);

using Fn2 = std::function<double(double, double)>;

// Tensor-product quadrature of integral w_x(x) w_y(y) extra(x,y) f(x,y) g(x,y).
// Compensated long double accumulation.
double inner_product_2d(const Fn2& f, const Fn2& g, const QuadratureRule& rule_x,
                        const QuadratureRule& rule_y, const Fn2& extra_weight = {});

// One-dimensional weighted sum, same accumulation scheme.
double integrate_1d(const std::function<double(double)>& f, const QuadratureRule& rule);

using FamilyEval = std::function<double(int, double, double)>;

struct BiorthMatrix {
    std::vector<std::vector<double>> entry; // (n_max+1) x (n_max+1)
    // max off-diagonal |entry| / min diagonal |entry|
    double dominance = 0.0;
    double min_diag_abs = 0.0;
};

// entry(n, m) = inner_product_2d(P_n, Q_m, ...)
BiorthMatrix biorthogonality_matrix(const FamilyEval& P, const FamilyEval& Q,
                                    int n_max, const QuadratureRule& rule_x,
                                    const QuadratureRule& rule_y,
                                    const Fn2& extra_weight = {});

} // namespace hkml

#endif
