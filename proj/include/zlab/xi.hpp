#pragma once

#include "zlab/gammafn.hpp"
#include "zlab/zeta.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace zlab {

// The completing factor H(s) = (1/2) s(s-1) pi^{-s/2} Gamma(s/2). The s
// factor cancels the Gamma pole at 0; genuine poles remain at the negative
// even integers.
inline void check_h_domain(std::complex<double> s)
{
    if (s.imag() == 0.0 && s.real() < -1.0) {
        const double r = s.real() / 2.0;
        if (std::abs(r - std::round(r)) < 1e-12)
            throw std::domain_error("H(s): pole at negative even integer");
    }
}

// log H(s) as a sum of principal logs (only ever exponentiated or used for
// its imaginary part along fixed vertical lines).
inline std::complex<double> log_h(std::complex<double> s)
{
    check_h_domain(s);
    const double pi = std::numbers::pi;
    return std::log(s) + std::log(s - 1.0) - std::log(2.0) - (s / 2.0) * std::log(pi) +
           log_gamma(s / 2.0);
}

struct HFactor {
    std::complex<double> H;
    std::complex<double> log_deriv;  // H'/H
};

inline HFactor h_factor(std::complex<double> s)
{
    check_h_domain(s);
    const double pi = std::numbers::pi;
    HFactor out;
    out.H = std::exp(log_h(s));
    out.log_deriv = 1.0 / s + 1.0 / (s - 1.0) - 0.5 * std::log(pi) + 0.5 * digamma(s / 2.0);
    return out;
}

inline std::complex<double> xi_complete(std::complex<double> s, const ZetaConfig& cfg = {})
{
    return std::exp(log_h(s)) * zeta_em(s, cfg);
}

inline std::complex<double> xi_prime(std::complex<double> s, const ZetaConfig& cfg = {})
{
    const HFactor h = h_factor(s);
    const ZetaPair z = zeta_with_derivative(s, cfg);
    return h.H * (h.log_deriv * z.zeta + z.zeta_prime);
}

// Phase of the rotation that makes zeta real on the critical line:
// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
inline double hardy_theta(double t)
{
    return log_gamma({0.25, t / 2.0}).imag() - (t / 2.0) * std::log(std::numbers::pi);
}

// Z(t) = e^{i theta(t)} zeta(1/2 + it), real-valued; sign changes mark
// critical-line zeros of zeta.
inline double hardy_z(double t, const ZetaConfig& cfg = {})
{
    const std::complex<double> rot = std::polar(1.0, hardy_theta(t));
    return (rot * zeta_em({0.5, t}, cfg)).real();
}

// Im xi'(1/2+it) with the positive factor |H| removed (and the constant
// phase pi dropped, flipping the overall sign):
//   xi'(1/2+it) = |H| e^{i(pi + theta(t))} (H'/H zeta + zeta')
// Scaling away |H| keeps the sign pattern while avoiding the Gamma decay
// that underflows doubles at large t.
inline double xi_prime_line_imag_scaled(double t, const ZetaConfig& cfg = {})
{
    const std::complex<double> s(0.5, t);
    const HFactor h = h_factor(s);
    const ZetaPair z = zeta_with_derivative(s, cfg);
    const std::complex<double> rot = std::polar(1.0, hardy_theta(t));
    return (rot * (h.log_deriv * z.zeta + z.zeta_prime)).imag();
}

} // namespace zlab
