#ifndef HKML_DETAIL_POCH_PLAN_HPP
#define HKML_DETAIL_POCH_PLAN_HPP

#include "hkml/errors.hpp"
#include "hkml/gamma.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace hkml::detail {

// A quotient of Pochhammer symbols whose lengths are linear in the summation
// indices (s, r):   prod_i (base_i [+s|+r])_{ls_i*s + lr_i*r}  /  (same form).
//
// The plan is built once per parameter set.  Denominator factors are
// cancelled symbolically against numerator factors with an equal base
// (pochhammer_ratio form), or against one half of the duplication split
// (a)_{2s} = 4^s (a/2)_s ((a+1)/2)_s.  Whatever remains is evaluated per
// term; a surviving zero denominator raises "nonterminating pole".
//
// Zero-parameter convention: a numerator factor whose base is exactly 0
// kills every term with positive length ((0)_m = 0 for m >= 1), matching
// the gamma = 0 reductions of these function families.

struct PochFactor {
    double base = 0.0;
    int ls = 0, lr = 0;        // length = ls*s + lr*r
    bool shift_s = false;      // effective base = base + s
    bool shift_r = false;      // effective base = base + r
    bool inverted = false;
};

class PochQuotientPlan {
public:
    // Numerator/denominator factor specs prior to cancellation.
    struct Spec {
        double base;
        int ls, lr;
    };

    PochQuotientPlan() = default;

    PochQuotientPlan(std::vector<Spec> num, std::vector<Spec> den)
    {
        // zero-base numerators: record kill rule, drop the factor
        std::vector<Spec> num2;
        for (const auto& f : num) {
            if (f.base == 0.0)
                kills_.push_back(f);
            else
                num2.push_back(f);
        }

        std::vector<PochFactor> nf;
        for (const auto& f : num2)
            nf.push_back({f.base, f.ls, f.lr, false, false, false});

        for (const auto& d : den) {
            if (try_cancel(nf, d))
                continue;
            if (try_split_cancel(nf, d))
                continue;
            factors_.push_back({d.base, d.ls, d.lr, false, false, true});
        }
        for (const auto& f : nf)
            factors_.push_back(f);
    }

    // Evaluates the quotient at (s, r) in long double.
    long double eval(int s, int r) const
    {
        for (const auto& k : kills_)
            if (k.ls * s + k.lr * r > 0)
                return 0.0L;

        long double v = pow4_s_ ? std::exp2l(2.0L * s) : 1.0L;
        long double den = 1.0L;
        // denominators first so a surviving pole is detected even when the
        // numerator vanishes (0/0 is an error, not a value)
        for (const auto& f : factors_) {
            if (!f.inverted)
                continue;
            long double p = factor_value(f, s, r);
            if (p == 0.0L)
                throw Error(errkind::nonterminating_pole,
                            "zero denominator Pochhammer did not cancel");
            den *= p;
        }
        for (const auto& f : factors_) {
            if (f.inverted)
                continue;
            v *= factor_value(f, s, r);
        }
        return v / den;
    }

private:
    static long double factor_value(const PochFactor& f, int s, int r)
    {
        long double base = f.base;
        if (f.shift_s)
            base += s;
        if (f.shift_r)
            base += r;
        return pochhammer_ld(base, static_cast<long long>(f.ls) * s +
                                        static_cast<long long>(f.lr) * r);
    }

    bool try_cancel(std::vector<PochFactor>& nf, const Spec& d)
    {
        for (auto& f : nf) {
            if (f.shift_s || f.shift_r)
                continue;
            if (f.base != d.base || f.ls < d.ls || f.lr < d.lr)
                continue;
            // (b)_{num_len} / (b)_{den_len} = (b + den_len)_{num_len - den_len}
            f.shift_s = d.ls > 0;
            f.shift_r = d.lr > 0;
            // den length is d.ls*s + d.lr*r; the shift adds exactly that
            // much to the base only for the supported shapes (den length
            // equal to s, r, or s+r with matching num components)
            f.ls -= d.ls;
            f.lr -= d.lr;
            if (f.ls == 0 && f.lr == 0) {
                f = nf.back();
                nf.pop_back();
            }
            return true;
        }
        return false;
    }

    bool try_split_cancel(std::vector<PochFactor>& nf, const Spec& d)
    {
        if (d.ls != 1 || d.lr != 0)
            return false;
        for (std::size_t i = 0; i < nf.size(); i++) {
            const auto& f = nf[i];
            if (f.shift_s || f.shift_r || f.ls != 2 || f.lr != 0)
                continue;
            double h1 = f.base / 2.0;
            double h2 = (f.base + 1.0) / 2.0;
            if (d.base != h1 && d.base != h2)
                continue;
            double keep = (d.base == h1) ? h2 : h1;
            nf[i] = {keep, 1, 0, false, false, false};
            pow4_s_ = true;
            return true;
        }
        return false;
    }

    std::vector<PochFactor> factors_;
    std::vector<Spec> kills_;
    bool pow4_s_ = false;
};

} // namespace hkml::detail

#endif
