#pragma once

#include "zlab/meanvalue.hpp"
#include "zlab/mobius.hpp"
#include "zlab/zeta.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace zlab {

// Precomputed evaluator for one mollifying Dirichlet polynomial
//   sum_{n <= y} mu(n) n^{-s - R/L} P(log(y/n)/log y),  y = T^theta, L = log T,
// optionally carrying the 1/L outer weight. Terms with mu(n) = 0 are dropped
// up front; evaluation is then a plain weighted sum over surviving n.
class MollifierSum {
public:
    MollifierSum(const RatPoly& P, const Rat& R, const Rat& theta, double T,
                 bool weight_inv_log = false)
    {
        const double L = std::log(T);
        shift_ = to_double(R) / L;
        prefactor_ = weight_inv_log ? 1.0 / L : 1.0;
        const Poly<double> pd = poly_cast<double>(P);
        const double y = std::pow(T, to_double(theta));
        const auto y_floor = uint64_t(y);
        const auto mu = mobius_sieve(y_floor < 1 ? 1 : y_floor);

        if (y_floor < 2) {
            // Only n = 1 survives; P is taken at its upper endpoint.
            entries_.push_back({0.0, pd(1.0)});
            return;
        }
        const double logy = std::log(y);
        for (uint64_t n = 1; n <= y_floor; ++n) {
            if (mu[n] == 0) continue;
            const double logn = std::log(double(n));
            const double pv = double(mu[n]) * pd((logy - logn) / logy);
            if (pv != 0.0) entries_.push_back({logn, pv});
        }
    }

    std::complex<double> operator()(std::complex<double> s) const
    {
        std::complex<double> acc(0.0);
        for (const auto& e : entries_) {
            // n^{-s-R/L} = exp(-(sigma + R/L) ln n) * e^{-i t ln n}
            acc += e.pval * std::polar(std::exp(-(s.real() + shift_) * e.logn),
                                       -s.imag() * e.logn);
        }
        return prefactor_ * acc;
    }

    size_t term_count() const { return entries_.size(); }

private:
    struct Entry {
        double logn;
        double pval;  // mu(n) P(log(y/n)/log y)
    };
    std::vector<Entry> entries_;
    double shift_ = 0;
    double prefactor_ = 1;
};

enum class PsiKind { psi1, psi2, psi };

inline std::complex<double> psi_eval(std::complex<double> s, PsiKind which,
                                     const MollifierPair& pair, double T)
{
    switch (which) {
    case PsiKind::psi1: return MollifierSum(pair.P1, pair.R, pair.theta, T)(s);
    case PsiKind::psi2: return MollifierSum(pair.P2, pair.R, pair.theta, T, true)(s);
    default: throw InvalidParams("psi_eval: pair form supports psi1/psi2 only");
    }
}

inline std::complex<double> psi_eval(std::complex<double> s, const EtaSpec& eta, double T)
{
    return MollifierSum(eta.P, eta.R, eta.theta, T)(s);
}

// G(s) = zeta(s) psi1(s) + zeta'(s) psi2(s).
inline std::complex<double> g_eval(std::complex<double> s, const MollifierPair& pair,
                                   double T, const ZetaConfig& cfg = {})
{
    const ZetaPair z = zeta_with_derivative(s, cfg);
    return z.zeta * psi_eval(s, PsiKind::psi1, pair, T) +
           z.zeta_prime * psi_eval(s, PsiKind::psi2, pair, T);
}

} // namespace zlab
