#ifndef HKML_SERIES_HPP
#define HKML_SERIES_HPP

#include "hkml/errors.hpp"

#include <cmath>
#include <cstdint>

namespace hkml {

// Value of a truncated double series.
struct SeriesResult {
    double value = 0.0;
    double abs_error_est = 0.0; // magnitude of the last anti-diagonal
    std::int64_t terms_used = 0; // count of nonzero terms evaluated
    bool terminated = false;     // all terms beyond some diagonal are exactly 0
};

struct SeriesControl {
    double rel_tol = 1e-15;
    int max_index_s = 500;
    int max_index_r = 500;
};

// Sums term(s, r) over [0, max_s] x [0, max_r] by anti-diagonals s + r = d
// in increasing d.  Stops when three consecutive anti-diagonal sums are each
// below rel_tol * |partial sum|, or when three consecutive anti-diagonals
// consist of exactly-zero terms (exact termination).  Throws
// "no convergence" if the caps are hit first.
template <class TermFn>
SeriesResult sum_double_series(TermFn&& term, const SeriesControl& ctrl = {})
{
    if (!(ctrl.rel_tol > 0.0) || ctrl.max_index_s < 1 || ctrl.max_index_r < 1)
        throw Error(errkind::domain, "sum_double_series: bad SeriesControl");

    SeriesResult res;
    long double sum = 0.0L;
    int small_streak = 0;
    int zero_streak = 0;
    double last_diag = 0.0;

    const int d_max = ctrl.max_index_s + ctrl.max_index_r;
    for (int d = 0; d <= d_max; d++) {
        long double diag = 0.0L;
        bool all_zero = true;
        int s_lo = d > ctrl.max_index_r ? d - ctrl.max_index_r : 0;
        int s_hi = d < ctrl.max_index_s ? d : ctrl.max_index_s;
        for (int s = s_lo; s <= s_hi; s++) {
            // term may return double or long double; accumulate in extended
            // precision either way
            long double t = term(s, d - s);
            if (!std::isfinite(static_cast<double>(t)))
                throw Error(errkind::no_convergence,
                            "sum_double_series: non-finite term");
            if (t != 0.0L) {
                all_zero = false;
                res.terms_used++;
                diag += t;
            }
        }
        sum += diag;
        last_diag = static_cast<double>(diag);

        if (all_zero) {
            if (++zero_streak >= 3) {
                res.value = static_cast<double>(sum);
                res.abs_error_est = 0.0;
                res.terminated = true;
                return res;
            }
        } else {
            zero_streak = 0;
        }

        if (std::fabs(last_diag) < ctrl.rel_tol * std::fabs(static_cast<double>(sum))) {
            if (++small_streak >= 3) {
                res.value = static_cast<double>(sum);
                res.abs_error_est = std::fabs(last_diag);
                return res;
            }
        } else {
            small_streak = 0;
        }
    }
    throw Error(errkind::no_convergence,
                "sum_double_series: caps hit before the stop rule was satisfied");
}

} // namespace hkml

#endif
