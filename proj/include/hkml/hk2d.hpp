#ifndef HKML_HK2D_HPP
#define HKML_HK2D_HPP

#include "hkml/series.hpp"

namespace hkml {

struct HK2DParams {
    int n = 0;        // degree in x
    double rho = 0.0; // > -1
    int k = 1;        // Konhauser integer parameter, >= 1
};

struct ModHK2DParams {
    int n = 0;
    double kappa = 0.0; // > -1
    double rho = 0.0;   // > -1
    double c = 1.0;     // not a non-positive integer of magnitude < floor(n/2)
    int k = 1;
};

enum class Hk2dMethod {
    direct, // explicit double sum
    zform,  // expansion over Konhauser Z polynomials
    kdf,    // Kampe de Feriet form (needs x != 0)
    ml      // terminating bivariate Mittag-Leffler series (needs x != 0)
};

// 2D Hermite-Konhauser polynomial.  All four methods agree wherever defined.
double hk2d(const HK2DParams& p, double x, double y,
            Hk2dMethod method = Hk2dMethod::direct);

// Biorthogonal partner Q_m(x, y) = H_m(x) * sum_{j<=m} Y_j^(rho)(y; k).
double hk2d_partner(int m, double rho, int k, double x, double y);

// Modified 2D Hermite-Konhauser polynomial (extra parameters kappa, c).
double hk2d_modified(const ModHK2DParams& p, double x, double y);

// 2D Jacobi-Konhauser polynomial from the conclusions.
double jk2d(int n, double alpha, double rho, int k, double x, double y);

} // namespace hkml

#endif
