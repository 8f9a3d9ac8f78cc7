#pragma once

#include "zlab/bipoly.hpp"
#include "zlab/errors.hpp"
#include "zlab/ratpoly.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <type_traits>
#include <utility>

namespace zlab {

enum class Var { a, b };

// scale * sum_k (p_k(a,b) + E q_k(a,b)) / (a+b)^k  with  E = exp(-(a+b)).
//
// This is the smallest function family containing the mollified-moment
// quotient and closed under d/da and d/db, which is what lets high-order
// shift derivatives be taken exactly instead of by finite differences.
// K = Rat is the exact symbolic layer; K = double backs the optimizer's
// fast objective.
template <typename K>
class BasicExpRatForm {
public:
    struct Term {
        BasicBiPoly<K> p;  // rational part numerator
        BasicBiPoly<K> q;  // coefficient of E

        bool operator==(const Term&) const = default;
    };

    BasicExpRatForm() = default;

    static BasicExpRatForm from_term(int k, BasicBiPoly<K> p, BasicBiPoly<K> q)
    {
        BasicExpRatForm f;
        f.add_term(k, std::move(p), std::move(q));
        return f;
    }

    bool is_zero() const { return terms_.empty() || scale_ == K(0); }
    const std::map<int, Term>& terms() const { return terms_; }
    const K& scale() const { return scale_; }

    void add_term(int k, const BasicBiPoly<K>& p, const BasicBiPoly<K>& q)
    {
        if (p.is_zero() && q.is_zero()) return;
        auto& t = terms_[k];
        t.p += p;
        t.q += q;
        if (t.p.is_zero() && t.q.is_zero()) terms_.erase(k);
    }

    BasicExpRatForm scaled(const K& s) const
    {
        BasicExpRatForm out = *this;
        out.scale_ *= s;
        if (out.scale_ == K(0)) out.terms_.clear();
        return out;
    }

    // Addition folds both scales into the term polynomials.
    friend BasicExpRatForm operator+(const BasicExpRatForm& l, const BasicExpRatForm& r)
    {
        BasicExpRatForm out = l.canonical();
        for (const auto& [k, t] : r.terms_)
            out.add_term(k, t.p * r.scale_, t.q * r.scale_);
        return out;
    }

    friend BasicExpRatForm operator-(const BasicExpRatForm& l, const BasicExpRatForm& r)
    {
        return l + r.scaled(K(-1));
    }

    // Exact partial derivative. With u = a+b and E = exp(-u):
    //   d[p/u^k]   = p'/u^k - k p/u^{k+1}
    //   d[E q/u^k] = E (q' - q)/u^k - k E q/u^{k+1}
    BasicExpRatForm derivative(Var v) const
    {
        BasicExpRatForm out;
        out.scale_ = scale_;
        for (const auto& [k, t] : terms_) {
            const BasicBiPoly<K> dp = (v == Var::a) ? t.p.deriv_a() : t.p.deriv_b();
            const BasicBiPoly<K> dq = (v == Var::a) ? t.q.deriv_a() : t.q.deriv_b();
            out.add_term(k, dp, dq - t.q);
            if (k != 0) {
                const K mk(-k);
                out.add_term(k + 1, mk * t.p, mk * t.q);
            }
        }
        return out;
    }

    // Scale folded into the polynomials, zero terms dropped. Equal forms have
    // identical canonical representations (when K is exact).
    BasicExpRatForm canonical() const
    {
        BasicExpRatForm out;
        if (scale_ == K(0)) return out;
        for (const auto& [k, t] : terms_)
            out.add_term(k, t.p * scale_, t.q * scale_);
        return out;
    }

    friend bool operator==(const BasicExpRatForm& l, const BasicExpRatForm& r)
    {
        const BasicExpRatForm cl = l.canonical(), cr = r.canonical();
        return cl.terms_ == cr.terms_;
    }

private:
    std::map<int, Term> terms_;
    K scale_{1};
};

using ExpRatForm = BasicExpRatForm<Rat>;

// Cross-moment polynomial of a mollifier pair:
//   int_0^1 (Pi'(x) + a th Pi(x)) (Pj'(x) + b th Pj(x)) dx
// expanded as A + a th B + b th C + a b th^2 D with
// A = int Pi'Pj', B = int Pi Pj', C = int Pi'Pj, D = int Pi Pj, all exact
// over an exact scalar field.
template <typename K>
BasicBiPoly<K> cross_moment_bipoly(const Poly<K>& Pi, const Poly<K>& Pj, const K& theta)
{
    const Poly<K> dPi = Pi.derivative(), dPj = Pj.derivative();
    BasicBiPoly<K> out;
    out.add_term(0, 0, (dPi * dPj).integral01());
    out.add_term(1, 0, theta * (Pi * dPj).integral01());
    out.add_term(0, 1, theta * (dPi * Pj).integral01());
    out.add_term(1, 1, theta * theta * (Pi * Pj).integral01());
    return out;
}

// The smoothed second-moment kernel of the pair (Pi, Pj) as an exp-rational
// form:  [S(b,a) - E S(-a,-b)] / (theta (a+b)),  S = cross moment above.
// The numerator vanishes on a+b = 0, so the pole there is removable; the
// form is only ever evaluated away from it.
template <typename K>
BasicExpRatForm<K> pair_moment_form(const Poly<K>& Pi, const Poly<K>& Pj, const K& theta)
{
    if (!(theta > K(0))) throw InvalidParams("pair_moment_form: theta must be positive");
    const BasicBiPoly<K> s = cross_moment_bipoly(Pi, Pj, theta);
    const K inv_theta = K(1) / theta;
    return BasicExpRatForm<K>::from_term(1, inv_theta * s.swap_args(),
                                         -(inv_theta * s.negate_args()));
}

// (1 - delta) f + delta (1 + 2 d) Q(-d) f, with d the partial derivative in
// the chosen variable and Q(-d) expanded monomially.
struct OperatorSpec {
    Rat delta;
    RatPoly Q;
    Var variable = Var::a;
};

template <typename K>
BasicExpRatForm<K> apply_operator(const BasicExpRatForm<K>& f, const K& delta,
                                  const Poly<K>& Q, Var variable)
{
    BasicExpRatForm<K> qdf;  // Q(-d) f = sum_m q_m (-1)^m d^m f
    BasicExpRatForm<K> dm = f;
    for (int m = 0; m <= Q.degree(); ++m) {
        if (m > 0) dm = dm.derivative(variable);
        const K c = (m % 2) ? K(-Q.coeff(size_t(m))) : Q.coeff(size_t(m));
        if (c != K(0)) qdf = qdf + dm.scaled(c);
    }
    const BasicExpRatForm<K> bracket = qdf + qdf.derivative(variable).scaled(K(2));
    return f.scaled(K(1) - delta) + bracket.scaled(delta);
}

inline ExpRatForm apply_operator(const ExpRatForm& f, const OperatorSpec& op)
{
    return apply_operator<Rat>(f, op.delta, op.Q, op.variable);
}

struct EvalConfig {
    bool high_precision = false;  // route through 50-digit arithmetic
};

namespace detail {

constexpr double kPoleGuard = 1e-9;

// Pure-polynomial forms (k = 0 only) have no pole to guard.
template <typename K>
bool needs_pole_guard(const BasicExpRatForm<K>& f)
{
    return !f.terms().empty() && f.terms().rbegin()->first > 0;
}

template <typename Real>
Real eval_form_exact(const BasicExpRatForm<Rat>& f, const Rat& a, const Rat& b)
{
    const Rat u = a + b;
    const Real uf = static_cast<Real>(u);
    const Real expu = exp(-uf);
    Real acc(0);
    Rat upow(1);
    int kprev = 0;
    for (const auto& [k, t] : f.terms()) {
        for (; kprev < k; ++kprev) upow *= u;
        const Real num = static_cast<Real>(t.p.eval(a, b)) +
                         expu * static_cast<Real>(t.q.eval(a, b));
        acc += num / static_cast<Real>(upow);
    }
    return static_cast<Real>(f.scale()) * acc;
}

} // namespace detail

// Numeric evaluation at a rational point. Polynomial pieces are evaluated
// exactly and converted; only exp and the final combination are floating.
inline double eval_at(const ExpRatForm& f, const Rat& a, const Rat& b, EvalConfig cfg = {})
{
    if (detail::needs_pole_guard(f) && std::abs(to_double(a + b)) < detail::kPoleGuard)
        throw PoleProximity("eval_at: |a+b| < 1e-9");
    if (cfg.high_precision)
        return static_cast<double>(detail::eval_form_exact<Real50>(f, a, b));
    return detail::eval_form_exact<double>(f, a, b);
}

inline double eval_at(const ExpRatForm& f, double a, double b, EvalConfig cfg = {})
{
    return eval_at(f, rat_from_double(a), rat_from_double(b), cfg);
}

// Full-precision value for the oracle tests.
inline Real50 eval_real50(const ExpRatForm& f, const Rat& a, const Rat& b)
{
    if (detail::needs_pole_guard(f) && std::abs(to_double(a + b)) < detail::kPoleGuard)
        throw PoleProximity("eval_real50: |a+b| < 1e-9");
    return detail::eval_form_exact<Real50>(f, a, b);
}

// All-double evaluation for the search path.
inline double eval_fast(const BasicExpRatForm<double>& f, double a, double b)
{
    const double u = a + b;
    if (detail::needs_pole_guard(f) && std::abs(u) < detail::kPoleGuard)
        throw PoleProximity("eval_fast: |a+b| < 1e-9");
    const double expu = std::exp(-u);
    double acc = 0, upow = 1;
    int kprev = 0;
    for (const auto& [k, t] : f.terms()) {
        for (; kprev < k; ++kprev) upow *= u;
        acc += (t.p.eval(a, b) + expu * t.q.eval(a, b)) / upow;
    }
    return f.scale() * acc;
}

} // namespace zlab
