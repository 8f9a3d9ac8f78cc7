#pragma once

#include "zlab/ratpoly.hpp"

namespace zlab {

// Composite Simpson quadrature of the cross-moment integrand
//   (Pi'(x) + a th Pi(x)) (Pj'(x) + b th Pj(x))
// over [0,1], evaluated pointwise by Horner in double arithmetic. The
// numeric counterpart of cross_moment_bipoly for dual-route checks.
inline double simpson_cross_moment(const RatPoly& Pi, const RatPoly& Pj, double theta,
                                   double a, double b, int panels = 10000)
{
    const Poly<double> pi = poly_cast<double>(Pi), pj = poly_cast<double>(Pj);
    const Poly<double> dpi = pi.derivative(), dpj = pj.derivative();
    auto f = [&](double x) {
        return (dpi(x) + a * theta * pi(x)) * (dpj(x) + b * theta * pj(x));
    };
    const double h = 1.0 / panels;
    double acc = f(0.0) + f(1.0);
    for (int i = 1; i < panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(i * h);
    return acc * h / 3.0;
}

} // namespace zlab
