#pragma once

#include "zlab/errors.hpp"
#include "zlab/mollifier.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

namespace zlab {

// Gaussian-smoothed second moment of the mollified combination at the
// shifted line:
//   (1/(Delta sqrt(pi))) int exp(-(t-w)^2/Delta^2) |G(sigma0 + it)|^2 dt,
// Delta = T^{1-delta_exp}, sigma0 = 1/2 - R/log T. The integral is truncated
// at w +- 8 Delta (tail mass < e^{-64}) and evaluated by composite Simpson
// with at least min_nodes_per_oscillation nodes per zeta oscillation.
struct MomentSpec {
    double T = 0;
    double w = 0;
    double delta_exp = 0.3;
    MollifierPair pair;
    double t0 = 2.0;
    // Overrides 1/2 - R/log T when set; used by the flat-region sanity checks.
    double sigma0_override = std::numeric_limits<double>::quiet_NaN();
    long node_budget = 40'000'000;
    int min_nodes_per_oscillation = 8;
};

inline void validate(const MomentSpec& spec)
{
    if (!(spec.T > 10)) throw InvalidParams("MomentSpec: T must exceed 10");
    if (!(spec.T <= spec.w && spec.w <= 2 * spec.T))
        throw InvalidParams("MomentSpec: need T <= w <= 2T");
    if (!(spec.delta_exp > 0 && spec.delta_exp < 1))
        throw InvalidParams("MomentSpec: delta_exp must lie in (0,1)");
    validate(spec.pair);
}

namespace detail {

// Deterministic pairwise reduction; the result does not depend on how the
// chunks were scheduled.
inline double pairwise_sum(std::vector<double> xs)
{
    if (xs.empty()) return 0.0;
    while (xs.size() > 1) {
        std::vector<double> next;
        next.reserve(xs.size() / 2 + 1);
        for (size_t i = 0; i + 1 < xs.size(); i += 2) next.push_back(xs[i] + xs[i + 1]);
        if (xs.size() % 2) next.push_back(xs.back());
        xs.swap(next);
    }
    return xs[0];
}

template <typename F>
double smoothed_gaussian_quadrature(const MomentSpec& spec, F&& integrand, unsigned threads)
{
    const double delta = std::pow(spec.T, 1.0 - spec.delta_exp);
    const double lo = std::max(spec.t0, spec.w - 8 * delta);
    const double hi = spec.w + 8 * delta;

    // Step: resolve both the zeta oscillation scale 2*pi/log(t/2pi) at the
    // top of the window and the Gaussian envelope.
    const double osc = 2 * std::numbers::pi / std::log(hi / (2 * std::numbers::pi));
    double h = std::min(osc / spec.min_nodes_per_oscillation, delta / 16);
    long panels = long(std::ceil((hi - lo) / h));
    panels += panels % 2;  // Simpson needs an even count
    if (panels + 1 > spec.node_budget)
        throw BudgetExceeded("smoothed_moment: node count " + std::to_string(panels + 1) +
                             " exceeds budget");
    h = (hi - lo) / double(panels);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    // Chunk layout is fixed (not thread-dependent) so the pairwise reduction
    // gives bit-identical results however the chunks are scheduled.
    const long chunks = std::max(1L, std::min<long>(panels / 2, 64));
    const long panels_per_chunk = (panels / 2 + chunks - 1) / chunks;  // in panel *pairs*

    auto chunk_sum = [&](long pair_lo, long pair_hi) {
        // Simpson over panel pairs [2i, 2i+2]: h/3 (f_{2i} + 4 f_{2i+1} + f_{2i+2})
        double acc = 0, comp = 0;  // Kahan
        auto add = [&](double v) {
            const double y = v - comp;
            const double t = acc + y;
            comp = (t - acc) - y;
            acc = t;
        };
        for (long i = pair_lo; i < pair_hi; ++i) {
            const double t0n = lo + h * double(2 * i);
            add(integrand(t0n));
            add(4.0 * integrand(t0n + h));
            add(integrand(t0n + 2 * h));
        }
        return acc * h / 3.0;
    };

    std::vector<double> partial(size_t(chunks), 0.0);
    const unsigned workers = std::min<unsigned>(threads, unsigned(chunks));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (long c = long(w); c < chunks; c += long(workers)) {
                const long plo = c * panels_per_chunk;
                const long phi = std::min(panels / 2, plo + panels_per_chunk);
                if (plo < phi) partial[size_t(c)] = chunk_sum(plo, phi);
            }
        });
    }
    for (auto& t : pool) t.join();

    return pairwise_sum(std::move(partial)) / (delta * std::sqrt(std::numbers::pi));
}

} // namespace detail

inline double smoothed_moment(const MomentSpec& spec, unsigned threads = 0)
{
    validate(spec);
    const double delta = std::pow(spec.T, 1.0 - spec.delta_exp);
    const double L = std::log(spec.T);
    const double sigma0 = std::isnan(spec.sigma0_override)
                              ? 0.5 - to_double(spec.pair.R) / L
                              : spec.sigma0_override;

    const MollifierSum psi1(spec.pair.P1, spec.pair.R, spec.pair.theta, spec.T);
    const MollifierSum psi2(spec.pair.P2, spec.pair.R, spec.pair.theta, spec.T, true);
    const ZetaConfig zcfg;

    auto integrand = [&](double t) {
        const std::complex<double> s(sigma0, t);
        const ZetaPair z = zeta_with_derivative(s, zcfg);
        const std::complex<double> G = z.zeta * psi1(s) + z.zeta_prime * psi2(s);
        const double dw = (t - spec.w) / delta;
        return std::exp(-dw * dw) * std::norm(G);
    };
    return detail::smoothed_gaussian_quadrature(spec, integrand, threads);
}

// Same quadrature with |G|^2 replaced by 1; checks the weight normalization.
inline double gaussian_weight_mass(const MomentSpec& spec, unsigned threads = 0)
{
    validate(spec);
    const double delta = std::pow(spec.T, 1.0 - spec.delta_exp);
    auto integrand = [&](double t) {
        const double dw = (t - spec.w) / delta;
        return std::exp(-dw * dw);
    };
    return detail::smoothed_gaussian_quadrature(spec, integrand, threads);
}

} // namespace zlab
