#pragma once

#include "zlab/errors.hpp"
#include "zlab/expform.hpp"

#include <vector>

namespace zlab {

// Parameters of the zeta-side mollified object zeta*psi1 + zeta'*psi2:
// mollifier length y = T^theta, shift sigma0 = 1/2 - R/log T, and the two
// shape polynomials.
struct MollifierPair {
    Rat theta;
    Rat R;
    RatPoly P1;
    RatPoly P2;
};

// Parameters of the critical-line object: xi-derivative blend weight delta
// plus mollifier shape P and blend polynomial Q.
struct EtaSpec {
    Rat theta;
    Rat R;
    Rat delta;
    RatPoly P;
    RatPoly Q;
};

inline void validate(const MollifierPair& m)
{
    if (m.theta <= 0 || m.theta > Rat(4, 7))
        throw InvalidParams("MollifierPair: theta must lie in (0, 4/7]");
    if (m.R <= 0) throw InvalidParams("MollifierPair: R must be positive");
    if (m.P1(Rat(0)) != 0) throw InvalidParams("MollifierPair: P1(0) != 0");
    if (m.P2(Rat(0)) != 0) throw InvalidParams("MollifierPair: P2(0) != 0");
    if (m.P1(Rat(1)) != 1) throw InvalidParams("MollifierPair: P1(1) != 1");
}

inline void validate(const EtaSpec& e)
{
    if (e.theta <= 0 || e.theta > Rat(4, 7))
        throw InvalidParams("EtaSpec: theta must lie in (0, 4/7]");
    if (e.R <= 0) throw InvalidParams("EtaSpec: R must be positive");
    if (e.delta <= 0 || e.delta >= 1)
        throw InvalidParams("EtaSpec: delta must lie in (0, 1)");
    if (e.P(Rat(0)) != 0) throw InvalidParams("EtaSpec: P(0) != 0");
    if (e.P(Rat(1)) != 1) throw InvalidParams("EtaSpec: P(1) != 1");
    if (e.Q(Rat(0)) != 1) throw InvalidParams("EtaSpec: Q(0) != 1");
    const RatPoly dq = e.Q.derivative();
    const RatPoly one_minus_x{Rat(1), Rat(-1)};
    if (dq != dq.compose(one_minus_x))
        throw InvalidParams("EtaSpec: Q'(x) != Q'(1-x)");
}

// Limiting value of the normalized second moment as the averaging length
// grows, with the per-term contributions kept for inspection.
struct MeanValue {
    double c = 0;
    std::vector<double> breakdown;
};

namespace detail {

template <typename K>
double eval_point(const BasicExpRatForm<K>& f, const K& a, const K& b, EvalConfig cfg)
{
    if constexpr (std::is_same_v<K, Rat>) return eval_at(f, a, b, cfg);
    else                                  return eval_fast(f, a, b);
}

// Four kernels, one per (P_i, P_j) pairing; the 1/L weight on psi2 turns
// into one shift derivative per P2 slot; everything is evaluated at the
// common shift a = b = -R.
template <typename K>
double mean2_assembly(const Poly<K>& P1, const Poly<K>& P2, const K& theta, const K& R,
                      EvalConfig cfg, std::vector<double>* breakdown)
{
    const BasicExpRatForm<K> f11 = pair_moment_form(P1, P1, theta);
    const BasicExpRatForm<K> f12 = pair_moment_form(P1, P2, theta).derivative(Var::b);
    const BasicExpRatForm<K> f21 = pair_moment_form(P2, P1, theta).derivative(Var::a);
    const BasicExpRatForm<K> f22 =
        pair_moment_form(P2, P2, theta).derivative(Var::a).derivative(Var::b);

    const K mr = -R;
    double c = 0;
    for (const BasicExpRatForm<K>* f : {&f11, &f12, &f21, &f22}) {
        const double t = eval_point(*f, mr, mr, cfg);
        if (breakdown) breakdown->push_back(t);
        c += t;
    }
    return c;
}

// The pair kernel of (P, P) sandwiched between the blend operator in each
// shift variable, evaluated at a = b = -R.
template <typename K>
double mean3_assembly(const Poly<K>& P, const Poly<K>& Q, const K& theta, const K& R,
                      const K& delta, EvalConfig cfg)
{
    const BasicExpRatForm<K> base = pair_moment_form(P, P, theta);
    const BasicExpRatForm<K> in_a = apply_operator(base, delta, Q, Var::a);
    const BasicExpRatForm<K> in_ab = apply_operator(in_a, delta, Q, Var::b);
    return eval_point(in_ab, K(-R), K(-R), cfg);
}

} // namespace detail

// Second moment of the mollified zeta combination at the shifted line,
// exact symbolic path.
inline MeanValue section2_mean(const MollifierPair& m, EvalConfig cfg = {})
{
    validate(m);
    MeanValue out;
    out.c = detail::mean2_assembly<Rat>(m.P1, m.P2, m.theta, m.R, cfg, &out.breakdown);
    return out;
}

// Second moment of the mollified xi-derivative blend, exact symbolic path.
inline MeanValue section3_mean(const EtaSpec& e, EvalConfig cfg = {})
{
    validate(e);
    MeanValue out;
    out.c = detail::mean3_assembly<Rat>(e.P, e.Q, e.theta, e.R, e.delta, cfg);
    out.breakdown = {out.c};
    return out;
}

// All-double twins of the two means for the optimizer's inner loop; they run
// the same assembly over double scalars (agreement with the exact path is
// covered by tests). Validation still happens on the exact inputs.
inline double section2_mean_fast(const MollifierPair& m)
{
    validate(m);
    return detail::mean2_assembly<double>(poly_cast<double>(m.P1), poly_cast<double>(m.P2),
                                          to_double(m.theta), to_double(m.R), {}, nullptr);
}

inline double section3_mean_fast(const EtaSpec& e)
{
    validate(e);
    return detail::mean3_assembly<double>(poly_cast<double>(e.P), poly_cast<double>(e.Q),
                                          to_double(e.theta), to_double(e.R),
                                          to_double(e.delta), {});
}

} // namespace zlab
