#pragma once

#include "zlab/xi.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace zlab {

// Smooth main term of the zero-counting formula: (T/2pi) log(T/(2pi e)) + 7/8.
inline double riemann_vonmangoldt(double T)
{
    const double two_pi = 2 * std::numbers::pi;
    return T / two_pi * std::log(T / (two_pi * std::numbers::e)) + 7.0 / 8.0;
}

namespace detail {

// Sign changes of f on [lo, hi]: base grid of the given spacing, then one
// local refinement pass. A same-sign interval is subdivided when |f| dips
// near it (a close pair may hide there); refinement can only add changes,
// and adds them in pairs, so counts are monotone under grid halving.
inline long count_sign_changes(const std::function<double(double)>& f, double lo, double hi,
                               double step)
{
    const long n = std::max(2L, long(std::ceil((hi - lo) / step)));
    const double h = (hi - lo) / double(n);
    std::vector<double> v(size_t(n) + 1);
    for (long i = 0; i <= n; ++i) v[size_t(i)] = f(lo + h * double(i));

    double mean_abs = 0;
    for (double x : v) mean_abs += std::abs(x);
    mean_abs /= double(v.size());
    const double dip = 0.3 * mean_abs;

    long count = 0;
    for (long i = 0; i < n; ++i) {
        const double a = v[size_t(i)], b = v[size_t(i + 1)];
        if (a == 0.0) continue;  // counted via the neighbor interval
        if (a * b < 0) {
            ++count;
            continue;
        }
        if (std::min(std::abs(a), std::abs(b)) < dip) {
            // Look inside for an even number of crossings.
            const double x0 = lo + h * double(i);
            double prev = a;
            long inner = 0;
            for (int j = 1; j <= 10; ++j) {
                const double cur = (j == 10) ? b : f(x0 + h * double(j) / 10.0);
                if (prev * cur < 0) ++inner;
                prev = cur;
            }
            count += inner;
        }
    }
    return count;
}

} // namespace detail

// Zeros of zeta on the critical line up to height T, counted as sign changes
// of Hardy's Z on [10, T] (there are none below 10).
inline long count_zeros_zeta(double T, const ZetaConfig& cfg = {}, double grid = 0.05)
{
    if (T < 10) throw InvalidParams("count_zeros_zeta: T must be >= 10");
    return detail::count_sign_changes([&](double t) { return hardy_z(t, cfg); }, 10.0, T, grid);
}

// Zeros of xi' on the critical line up to T, counted as sign changes of the
// rescaled imaginary part (xi' is purely imaginary there).
inline long xi_prime_critical_sign_changes(double T, const ZetaConfig& cfg = {},
                                           double grid = 0.05)
{
    if (T < 10) throw InvalidParams("xi_prime_critical_sign_changes: T must be >= 10");
    return detail::count_sign_changes(
        [&](double t) { return xi_prime_line_imag_scaled(t, cfg); }, 10.0, T, grid);
}

} // namespace zlab
