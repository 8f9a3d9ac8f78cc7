#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace zlab {

using Cplx = std::complex<double>;

namespace detail {

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set, ~15 significant digits).
inline constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// log sin(pi z) without overflow for large |Im z|. For Im z >= 0:
//   sin(pi z) = -e^{-i pi z} (1 - e^{2 i pi z}) / (2i)
// and e^{2 i pi z} is small, so the log is well conditioned.
inline Cplx log_sin_pi(Cplx z)
{
    if (z.imag() < 0) return std::conj(log_sin_pi(std::conj(z)));
    const Cplx i(0.0, 1.0);
    const double pi = std::numbers::pi;
    return -i * pi * z + std::log(1.0 - std::exp(2.0 * i * pi * z)) +
           i * pi / 2.0 - std::log(2.0);
}

} // namespace detail

// Principal-branch log-gamma, continuous on the cut plane away from the
// non-positive real axis. Reflection handles Re z < 0.5.
inline Cplx log_gamma(Cplx z)
{
    const double pi = std::numbers::pi;
    if (z.real() < 0.5)
        return std::log(pi) - detail::log_sin_pi(z) - log_gamma(1.0 - z);

    z -= 1.0;
    Cplx x = detail::kLanczos[0];
    for (int i = 1; i < 9; ++i) x += detail::kLanczos[i] / (z + double(i));
    const Cplx t = z + 7.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// Digamma by upward recurrence into the asymptotic zone.
inline Cplx digamma(Cplx z)
{
    // psi(z) = psi(z+1) - 1/z
    Cplx shift(0.0);
    while (z.real() < 10.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    // psi(z) ~ ln z - 1/(2z) - sum B_{2n} / (2n z^{2n})
    static constexpr double b_over_2n[] = {
        1.0 / 12,      // B2/2
        -1.0 / 120,    // B4/4
        1.0 / 252,     // B6/6
        -1.0 / 240,    // B8/8
        1.0 / 132,     // B10/10
        -691.0 / 32760,// B12/12
        1.0 / 12,      // B14/14
    };
    const Cplx inv2 = 1.0 / (z * z);
    Cplx acc(0.0), p = inv2;
    for (double c : b_over_2n) {
        acc += c * p;
        p *= inv2;
    }
    return std::log(z) - 0.5 / z - acc + shift;
}

} // namespace zlab
