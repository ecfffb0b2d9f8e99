#ifndef HKML_GPSERIES_HPP
#define HKML_GPSERIES_HPP

#include <vector>

namespace hkml {

// Generalized power series  sum_i coeff_i (t - base)^{beta_i - 1}  with all
// beta_i > 0 (integrable at the base point).  Terms are kept sorted by
// exponent; equal exponents are merged and zero coefficients dropped.
struct GPSeries {
    struct Term {
        double coeff;
        double beta;
    };
    double base = 0.0;
    std::vector<Term> terms;

    GPSeries() = default;
    GPSeries(double base_, std::vector<Term> t);

    double eval(double t) const;
    std::size_t size() const { return terms.size(); }
};

// Two-variable analogue  sum_i c_i (x - base_x)^{bx_i - 1} (y - base_y)^{by_i - 1}.
struct GPSeries2D {
    struct Term {
        double coeff;
        double bx;
        double by;
    };
    double base_x = 0.0;
    double base_y = 0.0;
    std::vector<Term> terms;

    GPSeries2D() = default;
    GPSeries2D(double bx, double by, std::vector<Term> t);

    double eval(double x, double y) const;
    std::size_t size() const { return terms.size(); }
};

GPSeries2D gpseries2d_add(const GPSeries2D& a, const GPSeries2D& b);
GPSeries2D gpseries2d_scale(const GPSeries2D& a, double factor);

} // namespace hkml

#endif
