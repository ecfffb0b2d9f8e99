#ifndef HKML_POLYNOMIALS_HPP
#define HKML_POLYNOMIALS_HPP

namespace hkml {

// Univariate families, all evaluated from their explicit finite sums.
// (Three-term recurrences live in the tests as independent oracles.)

// H_n(x)
double hermite(int n, double x);

// L_n^(alpha)(x), alpha > -1
double laguerre(int n, double alpha, double x);

// P_n^(alpha,beta)(x), alpha, beta > -1
double jacobi(int n, double alpha, double beta, double x);

// Konhauser polynomial Z_n^rho(t; k): degree k*n in t.
double konhauser_z(int n, double rho, int k, double t);

// Konhauser polynomial Y_n^(rho)(t; k): degree n in t.
double konhauser_y(int n, double rho, int k, double t);

} // namespace hkml

#endif
