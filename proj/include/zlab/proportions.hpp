#pragma once

#include "zlab/errors.hpp"
#include "zlab/meanvalue.hpp"

#include <cmath>

namespace zlab {

// Upper bound for the off-line zero count of the mollified combination,
// as a fraction of all zeros: log(c) / (2R). Uses the zero-count main term
// (T/2pi) log T once, so the ratio is height-free.
inline double ng_bound(double c, double R)
{
    if (!(c > 0)) throw NonPositiveMean("ng_bound: mean value must be positive");
    if (!(R > 0)) throw InvalidParams("ng_bound: R must be positive");
    return std::log(c) / (2 * R);
}

inline double ng_bound(const MeanValue& c, const Rat& R)
{
    return ng_bound(c.c, to_double(R));
}

// Lower bound for the fraction of xi' zeros on the critical line:
// 1 - log(c) / R.
inline double xi_critical_bound(double c, double R)
{
    if (!(c > 0)) throw NonPositiveMean("xi_critical_bound: mean value must be positive");
    if (!(R > 0)) throw InvalidParams("xi_critical_bound: R must be positive");
    return 1.0 - std::log(c) / R;
}

inline double xi_critical_bound(const MeanValue& c, const Rat& R)
{
    return xi_critical_bound(c.c, to_double(R));
}

// Distinct-zero fraction from the two sides: 1/2 + kappa_c/2 - kappa_G.
inline double distinct_bound(double kappa_c, double kappa_G)
{
    return 0.5 + kappa_c / 2 - kappa_G;
}

// Full pipeline result: the three headline proportions with their inputs
// and the two mean values they came from.
struct ProportionReport {
    double kappa_G = 0;  // off-line count, upper bound (fraction of N(T))
    double kappa_c = 0;  // xi' critical-line count, lower bound
    double kappa_d = 0;  // distinct zeros, lower bound
    MollifierPair pair;
    EtaSpec eta;
    MeanValue mean2;
    MeanValue mean3;
};

inline ProportionReport make_report(const MollifierPair& pair, const EtaSpec& eta,
                                    EvalConfig cfg = {})
{
    ProportionReport r;
    r.pair = pair;
    r.eta = eta;
    r.mean2 = section2_mean(pair, cfg);
    r.mean3 = section3_mean(eta, cfg);
    r.kappa_G = ng_bound(r.mean2, pair.R);
    r.kappa_c = xi_critical_bound(r.mean3, eta.R);
    r.kappa_d = distinct_bound(r.kappa_c, r.kappa_G);
    return r;
}

} // namespace zlab
