#pragma once

#include "zlab/errors.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace zlab {

// Euler-Maclaurin evaluation of zeta and zeta' on the desk-scale window
// (|t| up to ~2e4). Truncation N(t) = ceil(trunc_slope |t|) + trunc_offset
// with bernoulli_order tail corrections; the first omitted correction is
// used as an error estimate and N is doubled (at most twice) if it exceeds
// target_abs_error.
struct ZetaConfig {
    double trunc_slope = 1.2;
    int trunc_offset = 30;
    int bernoulli_order = 6;  // <= 8
    double target_abs_error = 1e-10;
};

namespace detail {

// B_{2k} / (2k)! for k = 1..8
inline constexpr double kBernFact[8] = {
    1.0 / 12,
    -1.0 / 720,
    1.0 / 30240,
    -1.0 / 1209600,
    1.0 / 47900160,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
};

inline const std::vector<double>& log_table(size_t n)
{
    thread_local std::vector<double> logs{0.0, 0.0};  // logs[k] = ln k, k >= 1
    while (logs.size() <= n) logs.push_back(std::log(double(logs.size())));
    return logs;
}

} // namespace detail

struct ZetaPair {
    std::complex<double> zeta;
    std::complex<double> zeta_prime;
};

inline ZetaPair zeta_with_derivative(std::complex<double> s, const ZetaConfig& cfg = {})
{
    using C = std::complex<double>;
    if (std::abs(s - 1.0) < 1e-6) throw NearPole("zeta: |s-1| < 1e-6");
    if (cfg.bernoulli_order < 1 || cfg.bernoulli_order > 8)
        throw InvalidParams("ZetaConfig: bernoulli_order must be 1..8");

    long n_trunc = long(std::ceil(cfg.trunc_slope * std::abs(s.imag()))) + cfg.trunc_offset;

    for (int attempt = 0;; ++attempt) {
        const auto& logs = detail::log_table(size_t(n_trunc));
        C sum(0.0), sum_p(0.0);
        for (long n = 1; n < n_trunc; ++n) {
            const double l = logs[size_t(n)];
            const C term = std::polar(std::exp(-s.real() * l), -s.imag() * l);  // n^{-s}
            sum += term;
            sum_p -= l * term;
        }

        const double logN = logs[size_t(n_trunc)];
        const C npow = std::polar(std::exp(-s.real() * logN), -s.imag() * logN);  // N^{-s}
        const double N = double(n_trunc);

        // N^{-s}/2 and N^{1-s}/(s-1)
        sum += 0.5 * npow;
        sum_p += -logN * 0.5 * npow;
        const C n1ms = N * npow;
        sum += n1ms / (s - 1.0);
        sum_p += -logN * n1ms / (s - 1.0) - n1ms / ((s - 1.0) * (s - 1.0));

        // Tail corrections: B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}
        C poch(1.0), poch_dlog(0.0);  // product and sum of 1/(s+i)
        C npow_k = n1ms;              // N^{-s-2k+1} for current k
        C last_term(0.0);
        int i = 0;
        for (int k = 1; k <= cfg.bernoulli_order; ++k) {
            for (int j = 0; j < ((k == 1) ? 1 : 2); ++j) {
                poch *= (s + double(i));
                poch_dlog += 1.0 / (s + double(i));
                ++i;
            }
            npow_k /= N * N;  // exponent -s-2k+1
            last_term = detail::kBernFact[k - 1] * poch * npow_k;
            sum += last_term;
            sum_p += detail::kBernFact[k - 1] * npow_k * (poch * poch_dlog - logN * poch);
        }

        // First omitted correction as an error estimate.
        const int q = cfg.bernoulli_order;
        C poch_next = poch * (s + double(i)) * (s + double(i + 1));
        const double est = std::abs(detail::kBernFact[std::min(q, 7)] * poch_next * npow_k / (N * N)) *
                           (std::abs(s + double(2 * q + 1)) / std::max(1.0, s.real() + 2 * q + 1));
        if (est <= cfg.target_abs_error || attempt >= 2) return {sum, sum_p};
        n_trunc *= 2;
    }
}

inline std::complex<double> zeta_em(std::complex<double> s, const ZetaConfig& cfg = {})
{
    return zeta_with_derivative(s, cfg).zeta;
}

inline std::complex<double> zeta_prime_em(std::complex<double> s, const ZetaConfig& cfg = {})
{
    return zeta_with_derivative(s, cfg).zeta_prime;
}

// Independent continuation through the alternating series, accelerated with
// Borwein's Chebyshev weights: an oracle path for sigma in (0,1), |t| < ~150.
// Not used by any production evaluator.
inline std::complex<double> zeta_alternating(std::complex<double> s, int n_terms = 0)
{
    using C = std::complex<double>;
    if (std::abs(s - 1.0) < 1e-6) throw NearPole("zeta_alternating: |s-1| < 1e-6");
    if (n_terms <= 0) {
        const double need =
            (std::numbers::pi * std::abs(s.imag()) / 2 + std::log(3.0 * (1 + 2 * std::abs(s.imag()))) +
             24.0 * std::log(10.0)) /
            std::log(3.0 + std::sqrt(8.0));
        n_terms = int(std::ceil(need)) + 5;
    }
    const int n = n_terms;
    std::vector<double> d(size_t(n) + 1);
    double tk = 1.0 / n;  // (n+i-1)! 4^i / ((n-i)! (2i)!) at i=0
    double acc = tk;
    d[0] = double(n) * acc;
    for (int i = 1; i <= n; ++i) {
        tk *= 4.0 * double(n + i - 1) * double(n - i + 1) / (double(2 * i - 1) * double(2 * i));
        acc += tk;
        d[size_t(i)] = double(n) * acc;
    }
    C eta(0.0);
    for (int k = 0; k < n; ++k) {
        const C pw = std::pow(C(double(k + 1), 0.0), -s);
        eta += ((k % 2) ? -1.0 : 1.0) * (d[size_t(k)] - d[size_t(n)]) * pw;
    }
    eta /= -d[size_t(n)];
    const C one = 1.0;
    return eta / (one - std::pow(C(2.0, 0.0), one - s));
}

} // namespace zlab
