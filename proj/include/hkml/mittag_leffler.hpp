#ifndef HKML_MITTAG_LEFFLER_HPP
#define HKML_MITTAG_LEFFLER_HPP

#include "hkml/series.hpp"

#include <vector>

namespace hkml {

// Parameters of the three-parameter bivariate function
//   E(x, y) = sum_{s,r} (g1)_{2s} (g2)_{s+r} x^s y^{k r}
//             / [ (g3)_s Gamma(rho + k r) r! s! ].
// Negative-integer parameters are supported in the terminating patterns
// the polynomial families use; an uncancelled denominator zero raises
// "nonterminating pole".  rho may be any real: images under fractional
// derivatives shift rho below zero and 1/Gamma continues through the poles.
struct MLParams3 {
    double g1 = 0.0, g2 = 0.0, g3 = 0.0;
    double rho = 1.0;
    int k = 1;
};

// Four-parameter variant with the extra (g4)_s Gamma(kappa + s) denominator.
struct MLParams4 {
    double g1 = 0.0, g2 = 0.0, g3 = 0.0, g4 = 0.0;
    double kappa = 1.0, rho = 1.0;
    int k = 1;
};

// Kampe de Feriet double series
//   sum_{s,r} [prod (uj)_{s+r} prod (ux)_s prod (uy)_r] x^s y^r
//           / [prod (lj)_{s+r} prod (lx)_s prod (ly)_r s! r!].
struct KdFParams {
    std::vector<double> upper_joint;
    std::vector<double> upper_x, upper_y;
    std::vector<double> lower_joint;
    std::vector<double> lower_x, lower_y;
};

// Prabhakar function sum_n (gamma)_n z^n / (Gamma(alpha n + beta) n!).
SeriesResult ml_prabhakar(double alpha, double beta, double gamma, double z,
                          const SeriesControl& ctrl = {});

SeriesResult ml_hk3(const MLParams3& p, double x, double y,
                    const SeriesControl& ctrl = {});

SeriesResult ml_hk4(const MLParams4& p, double x, double y,
                    const SeriesControl& ctrl = {});

// Two-parameter family from the conclusions:
//   sum_{s,r} (g1)_{s+r} (g2)_s x^s y^{k r} / (r! s! Gamma(kappa+s) Gamma(rho+k r)).
SeriesResult ml_jk2(double g1, double g2, double kappa, double rho, int k,
                    double x, double y, const SeriesControl& ctrl = {});

SeriesResult kdf_series(const KdFParams& p, double x, double y,
                        const SeriesControl& ctrl = {});

} // namespace hkml

#endif
