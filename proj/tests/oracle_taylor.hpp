#pragma once

// Test-only oracle for the mean-value constants, independent of the
// exp-rational-form machinery it checks. Route:
//   * polynomial cross-moments by direct coefficient convolution (and,
//     separately, by composite Simpson quadrature for the double-precision
//     cross-checks),
//   * shift derivatives at a = b = -R by Taylor recentering of the kernel
//     numerator and power-series division by theta*(a+b),
//   * blend-operator coefficients by plain convolution,
// all in 50-digit arithmetic. No BiPoly/ExpRatForm code is involved.

#include "zlab/rational.hpp"
#include "zlab/ratpoly.hpp"

#include <cmath>
#include <vector>

namespace zlab::oracle {

using Vec50 = std::vector<Real50>;

inline Vec50 to_vec50(const RatPoly& p)
{
    Vec50 out;
    for (const Rat& c : p.coeffs()) out.push_back(to_real50(c));
    return out;
}

inline Vec50 mul(const Vec50& a, const Vec50& b)
{
    if (a.empty() || b.empty()) return {};
    Vec50 r(a.size() + b.size() - 1, Real50(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline Vec50 deriv(const Vec50& a)
{
    Vec50 r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * Real50(int(i)));
    return r;
}

inline Real50 int01(const Vec50& a)
{
    Real50 acc(0);
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] / Real50(int(i) + 1);
    return acc;
}

inline Real50 horner(const Vec50& a, const Real50& x)
{
    Real50 acc(0);
    for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

struct CrossMoments {
    Real50 A, B, C, D;  // int Pi'Pj', int Pi Pj', int Pi'Pj, int Pi Pj
};

inline CrossMoments cross_moments(const RatPoly& Pi, const RatPoly& Pj)
{
    const Vec50 pi = to_vec50(Pi), pj = to_vec50(Pj);
    const Vec50 dpi = deriv(pi), dpj = deriv(pj);
    return {int01(mul(dpi, dpj)), int01(mul(pi, dpj)), int01(mul(dpi, pj)), int01(mul(pi, pj))};
}

// Mixed Taylor coefficients f[m][n] of
//   F(a,b) = [S(b,a) - e^{-a-b} S(-a,-b)] / (theta (a+b))
// about (-R,-R), with S(a,b) = A + a th B + b th C + a b th^2 D. The mixed
// partials are m! n! f[m][n].
inline std::vector<Vec50> kernel_taylor(const RatPoly& Pi, const RatPoly& Pj,
                                        const Rat& theta, const Rat& R, int order)
{
    const CrossMoments cm = cross_moments(Pi, Pj);
    const Real50 th = to_real50(theta), Rv = to_real50(R);
    const Real50 A = cm.A, B = cm.B, C = cm.C, D = cm.D;

    // Bilinear coefficients after the shift a = -R + da, b = -R + db.
    // s1 = S(b,a), s2 = S(-a,-b); index [da power][db power].
    const Real50 s1[2][2] = {
        {A - Rv * th * B - Rv * th * C + Rv * Rv * th * th * D, th * B - Rv * th * th * D},
        {th * C - Rv * th * th * D, th * th * D}};
    const Real50 s2[2][2] = {
        {A + Rv * th * B + Rv * th * C + Rv * Rv * th * th * D, -th * C - Rv * th * th * D},
        {-th * B - Rv * th * th * D, th * th * D}};

    const Real50 e2R = exp(2 * Rv);
    std::vector<Real50> fact(size_t(order) + 2, Real50(1));
    for (size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * Real50(int(i));

    const size_t K = size_t(order) + 1;
    std::vector<Vec50> f(K, Vec50(K, Real50(0)));
    for (size_t m = 0; m < K; ++m) {
        for (size_t n = 0; n < K; ++n) {
            // Numerator Taylor coefficient: S(b,a) contributes only for
            // m,n <= 1; e^{-(da+db)} has coefficient (-1)^{m+n}/(m! n!).
            Real50 num = (m <= 1 && n <= 1) ? s1[m][n] : Real50(0);
            Real50 conv(0);
            for (size_t r = 0; r <= std::min<size_t>(m, 1); ++r)
                for (size_t t = 0; t <= std::min<size_t>(n, 1); ++t) {
                    const Real50 c = Real50(((m - r) + (n - t)) % 2 ? -1 : 1) /
                                     (fact[m - r] * fact[n - t]);
                    conv += c * s2[r][t];
                }
            num -= e2R * conv;
            // theta (a+b) F = N with a+b = -2R + (da+db):
            //   th (-2R f[m][n] + f[m-1][n] + f[m][n-1]) = num
            const Real50 prev = (m ? f[m - 1][n] : Real50(0)) + (n ? f[m][n - 1] : Real50(0));
            f[m][n] = (prev - num / th) / (2 * Rv);
        }
    }
    return f;
}

// Mean value of the zeta-side combination: four kernels with 0, d_b, d_a,
// d_a d_b applied, at a = b = -R.
inline Real50 mean2(const RatPoly& P1, const RatPoly& P2, const Rat& theta, const Rat& R)
{
    const auto f11 = kernel_taylor(P1, P1, theta, R, 1);
    const auto f12 = kernel_taylor(P1, P2, theta, R, 1);
    const auto f21 = kernel_taylor(P2, P1, theta, R, 1);
    const auto f22 = kernel_taylor(P2, P2, theta, R, 1);
    return f11[0][0] + f12[0][1] + f21[1][0] + f22[1][1];
}

// Mean value of the xi'-side blend: operator weights w(x) = (1-delta) +
// delta (1+2x) Q(-x) in each variable, contracted against the mixed partials.
inline Real50 mean3(const RatPoly& P, const RatPoly& Q, const Rat& theta, const Rat& R,
                    const Rat& delta)
{
    const Vec50 q = to_vec50(Q);
    const Real50 d = to_real50(delta);
    Vec50 w(q.size() + 1, Real50(0));
    for (size_t i = 0; i < q.size(); ++i) {
        const Real50 qn = (i % 2) ? -q[i] : q[i];  // Q(-x)
        w[i] += d * qn;
        w[i + 1] += 2 * d * qn;
    }
    w[0] += 1 - d;

    const int order = int(w.size()) - 1;
    const auto f = kernel_taylor(P, P, theta, R, order);
    std::vector<Real50> fact(w.size() + 1, Real50(1));
    for (size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * Real50(int(i));

    Real50 acc(0);
    for (size_t m = 0; m < w.size(); ++m)
        for (size_t n = 0; n < w.size(); ++n)
            acc += w[m] * w[n] * fact[m] * fact[n] * f[m][n];
    return acc;
}

} // namespace zlab::oracle
