#ifndef HKML_BIORTHOGONAL_HPP
#define HKML_BIORTHOGONAL_HPP

#include "hkml/quadrature.hpp"

#include <functional>
#include <string>
#include <utility>

namespace hkml {

// Ingredients of the generic bivariate biorthogonal construction:
// a weight/interval pair per axis, the basic map r(x), the expansion
// coefficients D(n, i) of the orthogonal family K_n in powers of r(x),
// a biorthogonal pair (R_n, S_n) on the y-axis with diagonal constants
// J_diag(n), and the squared norms of K_n.
struct BiorthFamilySpec {
    std::string name;
    double interval_x[2] = {0.0, 0.0}; // informational (may be +-inf)
    double interval_y[2] = {0.0, 0.0};
    QuadKind weight_x;
    QuadKind weight_y;
    std::function<double(double)> basic_map_r;
    std::function<double(int, int)> ortho_coeffs; // D(n, i), i = 0..n
    std::function<double(int, double)> R_eval;
    std::function<double(int, double)> S_eval;
    std::function<double(int)> J_diag;
    std::function<double(int)> K_norm; // ||K_n||^2
};

struct BiorthEvaluators {
    FamilyEval P; // P_n(x, y) = sum_s D(n,s)/J(n-s) r(x)^s R_{n-s}(y)
    FamilyEval Q; // Q_n(x, y) = K_n(x) sum_{j<=n} S_j(y)
};

// Builds the evaluator pair of the generic construction.  Throws
// "parameter pole" if J_diag vanishes for a required index.
BiorthEvaluators biorthogonal_construct(const BiorthFamilySpec& spec);

// Built-in family specs.
BiorthFamilySpec hermite_konhauser_spec(double rho, int k);
BiorthFamilySpec laguerre_konhauser_spec(double kappa, double rho, int k);
BiorthFamilySpec jacobi_konhauser_spec(double alpha, double rho, int k);
BiorthFamilySpec laguerre_laguerre_spec(double kappa, double rho);

// Registry lookup by name ("hermite-konhauser", "laguerre-konhauser",
// "jacobi-konhauser", "laguerre-laguerre") with default parameters applied
// from the arguments.
BiorthFamilySpec biorth_family(const std::string& name, double p1, double p2, int k);

} // namespace hkml

#endif
