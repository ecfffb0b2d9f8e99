#include "hkml/gpseries.hpp"
#include "hkml/errors.hpp"

#include <algorithm>
#include <cmath>

namespace hkml {

namespace {

void check_beta(double beta)
{
    if (!(beta > 0.0))
        throw Error(errkind::domain, "GPSeries exponent beta must be > 0");
}

} // namespace

GPSeries::GPSeries(double base_, std::vector<Term> t) : base(base_)
{
    for (const auto& term : t)
        check_beta(term.beta);
    std::sort(t.begin(), t.end(),
              [](const Term& a, const Term& b) { return a.beta < b.beta; });
    for (const auto& term : t) {
        if (!terms.empty() && terms.back().beta == term.beta)
            terms.back().coeff += term.coeff;
        else
            terms.push_back(term);
    }
    terms.erase(std::remove_if(terms.begin(), terms.end(),
                               [](const Term& a) { return a.coeff == 0.0; }),
                terms.end());
}

double GPSeries::eval(double t) const
{
    long double v = 0.0L;
    for (const auto& term : terms)
        v += (long double)term.coeff * powl(t - base, term.beta - 1.0);
    return (double)v;
}

GPSeries2D::GPSeries2D(double bx, double by, std::vector<Term> t)
    : base_x(bx), base_y(by)
{
    for (const auto& term : t) {
        check_beta(term.bx);
        check_beta(term.by);
    }
    std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) {
        return a.bx != b.bx ? a.bx < b.bx : a.by < b.by;
    });
    for (const auto& term : t) {
        if (!terms.empty() && terms.back().bx == term.bx &&
            terms.back().by == term.by)
            terms.back().coeff += term.coeff;
        else
            terms.push_back(term);
    }
    terms.erase(std::remove_if(terms.begin(), terms.end(),
                               [](const Term& a) { return a.coeff == 0.0; }),
                terms.end());
}

double GPSeries2D::eval(double x, double y) const
{
    long double v = 0.0L;
    for (const auto& term : terms)
        v += (long double)term.coeff * powl(x - base_x, term.bx - 1.0) *
             powl(y - base_y, term.by - 1.0);
    return (double)v;
}

GPSeries2D gpseries2d_add(const GPSeries2D& a, const GPSeries2D& b)
{
    if (a.base_x != b.base_x || a.base_y != b.base_y)
        throw Error(errkind::domain, "gpseries2d_add: base points differ");
    std::vector<GPSeries2D::Term> t = a.terms;
    t.insert(t.end(), b.terms.begin(), b.terms.end());
    return GPSeries2D(a.base_x, a.base_y, std::move(t));
}

GPSeries2D gpseries2d_scale(const GPSeries2D& a, double factor)
{
    std::vector<GPSeries2D::Term> t = a.terms;
    for (auto& term : t)
        term.coeff *= factor;
    return GPSeries2D(a.base_x, a.base_y, std::move(t));
}

} // namespace hkml
