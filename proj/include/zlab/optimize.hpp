#pragma once

#include "zlab/errors.hpp"
#include "zlab/proportions.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace zlab {

enum class Target { section2, section3, combined };

// Caps on the basis coefficient counts: P-type inner degree <= 3 (overall
// degree <= 5), Q-type top basis index 3 (Q degree <= 7). One spare degree
// of freedom beyond the reference choices.
inline constexpr int kMaxPTerms = 4;
inline constexpr int kMaxQTerms = 4;

// Free-parameter search space. theta is fixed (the method's hard limit is
// 4/7); R and delta are box-clamped; polynomial shapes run through the
// constrained bases, so every decoded point is feasible by construction.
struct SearchSpace {
    Target target = Target::section3;
    Rat theta = Rat(4, 7);
    int p1_terms = 2;  // section2 P1 basis coefficients
    int p2_terms = 3;  // section2 P2 basis coefficients
    int p_terms = 3;   // section3 P basis coefficients
    int q_terms = 3;   // section3 Q basis coefficients
    double r_lo = 0.1, r_hi = 3.0;
    double delta_lo = 0.01, delta_hi = 0.99;
};

inline void validate(const SearchSpace& s)
{
    if (s.p1_terms < 1 || s.p1_terms > kMaxPTerms || s.p2_terms < 1 ||
        s.p2_terms > kMaxPTerms || s.p_terms < 1 || s.p_terms > kMaxPTerms ||
        s.q_terms < 1 || s.q_terms > kMaxQTerms)
        throw InvalidParams("SearchSpace: coefficient count outside caps");
    if (!(s.r_lo > 0) || !(s.r_hi > s.r_lo))
        throw InvalidParams("SearchSpace: bad R range");
    if (!(s.delta_lo > 0) || !(s.delta_hi > s.delta_lo) || !(s.delta_hi < 1))
        throw InvalidParams("SearchSpace: bad delta range");
}

inline size_t dimension(const SearchSpace& s)
{
    const size_t s2 = 1 + s.p1_terms + s.p2_terms;
    const size_t s3 = 2 + s.p_terms + s.q_terms;
    switch (s.target) {
    case Target::section2: return s2;
    case Target::section3: return s3;
    case Target::combined: return s2 + s3;
    }
    return 0;
}

inline std::vector<std::string> param_labels(const SearchSpace& s)
{
    std::vector<std::string> out;
    auto block2 = [&] {
        out.push_back("section2.R");
        for (int i = 0; i < s.p1_terms; ++i) out.push_back("section2.P1[" + std::to_string(i) + "]");
        for (int i = 0; i < s.p2_terms; ++i) out.push_back("section2.P2[" + std::to_string(i) + "]");
    };
    auto block3 = [&] {
        out.push_back("section3.R");
        out.push_back("section3.delta");
        for (int i = 0; i < s.p_terms; ++i) out.push_back("section3.P[" + std::to_string(i) + "]");
        for (int i = 0; i < s.q_terms; ++i) out.push_back("section3.Q[" + std::to_string(i) + "]");
    };
    if (s.target != Target::section3) block2();
    if (s.target != Target::section2) block3();
    return out;
}

namespace detail {

inline double clamp(double x, double lo, double hi) { return std::min(std::max(x, lo), hi); }

inline std::vector<Rat> rats(std::span<const double> xs)
{
    std::vector<Rat> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(rat_from_double(x));
    return out;
}

} // namespace detail

// Decoders; the flat layout is [R, P1 coeffs, P2 coeffs] for the zeta block
// and [R, delta, P coeffs, Q coeffs] for the xi' block.
inline MollifierPair decode_section2(const SearchSpace& s, std::span<const double> p)
{
    if (p.size() != size_t(1 + s.p1_terms + s.p2_terms))
        throw InvalidParams("decode_section2: wrong parameter count");
    MollifierPair m;
    m.theta = s.theta;
    m.R = rat_from_double(detail::clamp(p[0], s.r_lo, s.r_hi));
    const auto c1 = detail::rats(p.subspan(1, s.p1_terms));
    const auto c2 = detail::rats(p.subspan(1 + s.p1_terms, s.p2_terms));
    m.P1 = p_basis(PBasis::section2_p1, c1);
    m.P2 = p_basis(PBasis::section2_p2, c2);
    return m;
}

inline EtaSpec decode_section3(const SearchSpace& s, std::span<const double> p)
{
    if (p.size() != size_t(2 + s.p_terms + s.q_terms))
        throw InvalidParams("decode_section3: wrong parameter count");
    EtaSpec e;
    e.theta = s.theta;
    e.R = rat_from_double(detail::clamp(p[0], s.r_lo, s.r_hi));
    e.delta = rat_from_double(detail::clamp(p[1], s.delta_lo, s.delta_hi));
    e.P = p_basis(PBasis::section3_p, detail::rats(p.subspan(2, s.p_terms)));
    e.Q = q_basis(detail::rats(p.subspan(2 + s.p_terms, s.q_terms)));
    return e;
}

inline bool maximizing(Target t) { return t != Target::section2; }

// Objective in its natural sense: section2 -> kappa_G (minimize),
// section3 -> kappa_c (maximize), combined -> kappa_d (maximize).
// Runs the all-double twin of the symbolic pipeline (the search makes ~1e4
// evaluations). A non-positive mean value maps to a worst-case sentinel so
// the search simply walks away from such corners.
inline double objective(const SearchSpace& s, std::span<const double> params)
{
    constexpr double kWorst = 1e9;
    try {
        switch (s.target) {
        case Target::section2: {
            const MollifierPair m = decode_section2(s, params);
            return ng_bound(section2_mean_fast(m), to_double(m.R));
        }
        case Target::section3: {
            const EtaSpec e = decode_section3(s, params);
            return xi_critical_bound(section3_mean_fast(e), to_double(e.R));
        }
        case Target::combined: {
            const size_t n2 = 1 + s.p1_terms + s.p2_terms;
            const MollifierPair m = decode_section2(s, params.subspan(0, n2));
            const EtaSpec e = decode_section3(s, params.subspan(n2));
            const double kG = ng_bound(section2_mean_fast(m), to_double(m.R));
            const double kc = xi_critical_bound(section3_mean_fast(e), to_double(e.R));
            return distinct_bound(kc, kG);
        }
        }
    } catch (const NonPositiveMean&) {
        return maximizing(s.target) ? -kWorst : kWorst;
    }
    return maximizing(s.target) ? -kWorst : kWorst;
}

struct NmOptions {
    long max_evals = 100000;
    double spread_tol = 1e-9;
    std::uint64_t seed = 0;
    double init_step = 0.05;        // relative simplex edge
    bool restart_until_budget = true;
};

struct OptResult {
    std::vector<double> best_params;
    double best_value = 0;
    struct TracePoint {
        long evals;
        double value;  // best objective after this many evaluations
    };
    std::vector<TracePoint> trace;
};

// Nelder-Mead with reflection/expansion/contraction/shrink = (1, 2, 0.5, 0.5),
// minimizing fn. Converges when the simplex value spread drops below
// spread_tol; remaining budget is spent on deterministic seeded restarts
// around the incumbent. Always returns the best point seen; never throws on
// budget exhaustion.
inline OptResult nelder_mead_minimize(
    const std::function<double(const std::vector<double>&)>& fn, std::vector<double> start,
    const NmOptions& opts = {})
{
    const size_t n = start.size();
    if (n == 0) throw InvalidParams("nelder_mead_minimize: empty start");
    long evals = 0;
    OptResult res;

    auto fmin = [&](const std::vector<double>& x) {
        const double v = fn(x);
        ++evals;
        if (res.trace.empty() || v < res.best_value) {
            res.best_value = v;
            res.best_params = x;
            res.trace.push_back({evals, v});
        }
        return v;
    };

    const double f0 = fmin(start);
    if (opts.max_evals <= 0) return res;

    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> jitter(-1.0, 1.0);

    int round = 0;
    std::vector<double> center = start;
    double fcenter = f0;

    while (evals < opts.max_evals) {
        // Build a simplex around the current center; later rounds shrink the
        // edge and add a seeded jitter so restarts are not collinear.
        const double scale = opts.init_step * std::pow(0.5, round);
        std::vector<std::vector<double>> xs(n + 1, center);
        std::vector<double> fs(n + 1);
        fs[0] = fcenter;
        for (size_t i = 0; i < n && evals < opts.max_evals; ++i) {
            double step = scale * (std::abs(center[i]) > 1e-8 ? std::abs(center[i]) : 1.0);
            if (round > 0) step *= 1.0 + 0.3 * jitter(rng);
            xs[i + 1][i] += step;
            fs[i + 1] = fmin(xs[i + 1]);
        }

        auto order = [&] {
            std::vector<size_t> idx(n + 1);
            std::iota(idx.begin(), idx.end(), 0);
            std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return fs[a] < fs[b]; });
            std::vector<std::vector<double>> x2(n + 1);
            std::vector<double> f2(n + 1);
            for (size_t k = 0; k <= n; ++k) { x2[k] = xs[idx[k]]; f2[k] = fs[idx[k]]; }
            xs.swap(x2);
            fs.swap(f2);
        };

        bool converged = false;
        while (evals < opts.max_evals) {
            order();
            if (fs[n] - fs[0] < opts.spread_tol) { converged = true; break; }

            std::vector<double> centroid(n, 0.0);
            for (size_t j = 0; j < n; ++j)
                for (size_t i = 0; i < n; ++i) centroid[i] += xs[j][i] / double(n);

            auto blend = [&](const std::vector<double>& from, double coef) {
                std::vector<double> p(n);
                for (size_t i = 0; i < n; ++i) p[i] = centroid[i] + coef * (centroid[i] - from[i]);
                return p;
            };

            const std::vector<double> xr = blend(xs[n], 1.0);  // reflection
            const double fr = fmin(xr);
            if (fr < fs[0]) {
                if (evals >= opts.max_evals) { xs[n] = xr; fs[n] = fr; break; }
                const std::vector<double> xe = blend(xs[n], 2.0);  // expansion
                const double fe = fmin(xe);
                if (fe < fr) { xs[n] = xe; fs[n] = fe; }
                else         { xs[n] = xr; fs[n] = fr; }
            } else if (fr < fs[n - 1]) {
                xs[n] = xr;
                fs[n] = fr;
            } else {
                const bool outside = fr < fs[n];
                const std::vector<double> xc = blend(xs[n], outside ? 0.5 : -0.5);
                const double fc = fmin(xc);
                if (fc < (outside ? fr : fs[n])) {
                    xs[n] = xc;
                    fs[n] = fc;
                } else {
                    for (size_t j = 1; j <= n && evals < opts.max_evals; ++j) {  // shrink
                        for (size_t i = 0; i < n; ++i) xs[j][i] = xs[0][i] + 0.5 * (xs[j][i] - xs[0][i]);
                        fs[j] = fmin(xs[j]);
                    }
                }
            }
        }

        if (!opts.restart_until_budget && converged) break;
        center = res.best_params;
        fcenter = res.best_value;
        ++round;
    }
    return res;
}

// Searches the target's free parameters. Maximizing targets are negated into
// the core minimizer; results are reported in the objective's natural sense.
inline OptResult run_nelder_mead(const SearchSpace& space, std::vector<double> start,
                                 const NmOptions& opts = {})
{
    validate(space);
    if (start.size() != dimension(space))
        throw InvalidParams("run_nelder_mead: start has wrong dimension");

    const bool maxing = maximizing(space.target);
    auto wrapped = [&space, maxing](const std::vector<double>& x) {
        const double v = objective(space, x);
        return maxing ? -v : v;
    };
    OptResult res = nelder_mead_minimize(wrapped, std::move(start), opts);
    if (maxing) {
        res.best_value = -res.best_value;
        for (auto& t : res.trace) t.value = -t.value;
    }
    return res;
}

} // namespace zlab
