#ifndef HKML_GAMMA_HPP
#define HKML_GAMMA_HPP

namespace hkml {

// ln Gamma(x) for x > 0; throws "domain error" for x <= 0.
// Lanczos approximation (g = 5.242187, 14 coefficients), relative accuracy
// of the gamma value ~1e-15.  Returns exactly 0 at x = 1 and x = 2.
double log_gamma(double x);

// 1/Gamma(x), total on the reals.  Exactly 0 at x = 0, -1, -2, ...;
// reflection formula below zero.
double gamma_recip(double x);

// (a)_n = a (a+1) ... (a+n-1) as an explicit product, (a)_0 = 1.
// Negative-integer a terminates exactly at 0.
double pochhammer(double a, int n);
long double pochhammer_ld(long double a, long long n);

// (a)_p / (b)_q.  For a == b and p >= q the ratio is computed as the
// product (a+q)(a+q+1)...(a+p-1), never as a 0/0 quotient.  Throws
// "nonterminating pole" if (b)_q = 0 and the zero does not cancel.
double pochhammer_ratio(double a, int p, double b, int q);

// log|(a)_n| with sign, usable for any real a.  sign = 0 marks an exact
// zero (a a non-positive integer inside the product range).
struct LogSigned {
    double log_abs;
    int sign; // -1, 0, +1
};
LogSigned log_pochhammer(double a, long long n);

// n! for n <= 170 from a table, +inf beyond.
double factorial(int n);

// binomial(n, k) as a double product.
double binomial(int n, int k);

// sin(pi x) with exact zeros at integer x.
double sinpi(double x);

// y^p / Gamma(a): avoids inf * 0 when one side over/underflows.
// For y < 0, p must be a non-negative integer power (it always is here).
double pow_over_gamma(double y, double p, double a);

} // namespace hkml

#endif
