// zlab: mollified-moment proportions for zeta zeros.
//
//   zlab reproduce <section2|section3|theorem1> [--golden] [--out DIR]
//   zlab optimize  <section2|section3|combined> [--config F] [--seed N]
//                  [--budget K] [--out DIR]
//   zlab verify    <sigma-quadrature|expform-derivatives|functional-equation|
//                   moment|zero-count> [--T X] [--out DIR]
//   zlab zeros count --T X [--out DIR]
//
// Every run writes a CSV (name, computed, expected, tolerance, pass) and a
// key=value summary file. Exit codes: 0 pass, 1 fail, 2 usage/config error.

#include "zlab/meanvalue.hpp"
#include "zlab/moment.hpp"
#include "zlab/optimize.hpp"
#include "zlab/proportions.hpp"
#include "zlab/reference.hpp"
#include "zlab/runconfig.hpp"
#include "zlab/xi.hpp"
#include "zlab/zerocount.hpp"

#include "zlab/quadcheck.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

using namespace zlab;

namespace {

struct CheckRow {
    std::string name;
    double computed = 0;
    double expected = 0;
    double tolerance = 0;
    bool pass = true;
};

struct Report {
    std::string command;
    std::vector<CheckRow> rows;
    std::vector<std::pair<std::string, std::string>> summary;

    bool all_pass() const
    {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

std::string timestamp()
{
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y%m%d-%H%M%S", std::localtime(&tt));
    return buf;
}

int emit(const Report& rep, const std::string& out_dir)
{
    std::filesystem::create_directories(out_dir);
    const std::string stem = out_dir + "/" + rep.command + "_" + timestamp();

    std::ofstream csv(stem + ".csv");
    csv << "name,computed,expected,tolerance,pass\n";
    char line[256];
    for (const auto& r : rep.rows) {
        std::snprintf(line, sizeof line, "%s,%.12g,%.12g,%.3g,%d\n", r.name.c_str(),
                      r.computed, r.expected, r.tolerance, int(r.pass));
        csv << line;
        std::printf("  %-34s %14.9f  expected %-12.6g tol %-8.2g %s\n", r.name.c_str(),
                    r.computed, r.expected, r.tolerance, r.pass ? "PASS" : "FAIL");
        if (!r.pass)
            std::printf("    -> off by %.3g\n", r.computed - r.expected);
    }

    std::ofstream sum(stem + ".summary");
    sum << "command = " << rep.command << "\n";
    for (const auto& [k, v] : rep.summary) sum << k << " = " << v << "\n";
    sum << "result = " << (rep.all_pass() ? "PASS" : "FAIL") << "\n";

    std::printf("%s: %s (artifacts: %s.csv)\n", rep.command.c_str(),
                rep.all_pass() ? "PASS" : "FAIL", stem.c_str());
    return rep.all_pass() ? 0 : 1;
}

CheckRow upper_bound_row(std::string name, double computed, double bound)
{
    return {std::move(name), computed, bound, 0, computed <= bound};
}

CheckRow lower_bound_row(std::string name, double computed, double bound)
{
    return {std::move(name), computed, bound, 0, computed >= bound};
}

CheckRow golden_row(std::string name, double computed, double expected, double tol)
{
    return {std::move(name), computed, expected, tol, std::abs(computed - expected) <= tol};
}

int cmd_reproduce(const std::string& target, bool check_golden, const std::string& out)
{
    Report rep;
    rep.command = "reproduce_" + target;
    const MollifierPair pair = reference_section2();
    const EtaSpec eta = reference_section3();

    if (target == "section2" || target == "theorem1") {
        const MeanValue c2 = section2_mean(pair);
        const double kG = ng_bound(c2, pair.R);
        rep.rows.push_back(upper_bound_row("kappa_G_upper", kG, golden::kappa_G_published));
        rep.rows.push_back(lower_bound_row("kappa_G_sane", kG, 0.2690));
        rep.summary.emplace_back("section2.mean_c", std::to_string(c2.c));
        if (check_golden) {
            rep.rows.push_back(golden_row("mean_c_vs_golden", c2.c, golden::section2_mean_c, 1e-9));
            rep.rows.push_back(golden_row("kappa_G_vs_golden", kG, golden::kappa_G, 1e-9));
        }
    }
    if (target == "section3" || target == "theorem1") {
        const MeanValue c3 = section3_mean(eta);
        const double kc = xi_critical_bound(c3, eta.R);
        rep.rows.push_back(
            lower_bound_row("kappa_c_lower", kc, golden::kappa_c_published - 5e-5));
        rep.rows.push_back(upper_bound_row("kappa_c_sane", kc, 0.8705));
        rep.summary.emplace_back("section3.mean_c", std::to_string(c3.c));
        if (check_golden) {
            rep.rows.push_back(golden_row("mean_c_vs_golden", c3.c, golden::section3_mean_c, 1e-8));
            rep.rows.push_back(golden_row("kappa_c_vs_golden", kc, golden::kappa_c, 1e-8));
        }
    }
    if (target == "theorem1") {
        const double kG = ng_bound(section2_mean(pair), pair.R);
        const double kc = xi_critical_bound(section3_mean(eta), eta.R);
        const double kd = distinct_bound(kc, kG);
        rep.rows.push_back(lower_bound_row("kappa_d_lower", kd, golden::kappa_d_published));
        if (check_golden)
            rep.rows.push_back(golden_row("kappa_d_vs_golden", kd, golden::kappa_d, 1e-8));
    }
    return emit(rep, out);
}

SearchSpace space_from_config(const std::string& target, const RunConfig& cfg)
{
    SearchSpace s;
    s.target = target == "section2"   ? Target::section2
               : target == "section3" ? Target::section3
                                      : Target::combined;
    if (s.target != Target::section3) {
        s.theta = cfg.scalar("section2.theta");
        s.p1_terms = int(cfg.array("section2.P1").size());
        s.p2_terms = int(cfg.array("section2.P2").size());
    }
    if (s.target != Target::section2) {
        // theta is a single fixed search-space parameter; a combined run
        // cannot carry two different values.
        if (s.target == Target::combined &&
            cfg.scalar("section3.theta") != cfg.scalar("section2.theta"))
            throw InvalidConfig("combined target needs section2.theta == section3.theta");
        s.theta = cfg.scalar("section3.theta");
        s.p_terms = int(cfg.array("section3.P").size());
        s.q_terms = int(cfg.array("section3.Q").size());
    }
    return s;
}

std::vector<double> start_from_config(const SearchSpace& s, const RunConfig& cfg)
{
    std::vector<double> start;
    auto push = [&](const Rat& r) { start.push_back(to_double(r)); };
    if (s.target != Target::section3) {
        push(cfg.scalar("section2.R"));
        for (const Rat& r : cfg.array("section2.P1")) push(r);
        for (const Rat& r : cfg.array("section2.P2")) push(r);
    }
    if (s.target != Target::section2) {
        push(cfg.scalar("section3.R"));
        push(cfg.scalar("section3.delta"));
        for (const Rat& r : cfg.array("section3.P")) push(r);
        for (const Rat& r : cfg.array("section3.Q")) push(r);
    }
    return start;
}

RunConfig config_from_params(const SearchSpace& s, const RunConfig& base,
                             const std::vector<double>& p)
{
    RunConfig out = base;
    size_t i = 0;
    auto take = [&] { return rat_from_double(p.at(i++)); };
    auto take_array = [&](int n) {
        std::vector<Rat> v;
        for (int k = 0; k < n; ++k) v.push_back(take());
        return v;
    };
    if (s.target != Target::section3) {
        out.set_scalar("section2.R", take());
        out.set_array("section2.P1", take_array(s.p1_terms));
        out.set_array("section2.P2", take_array(s.p2_terms));
    }
    if (s.target != Target::section2) {
        out.set_scalar("section3.R", take());
        out.set_scalar("section3.delta", take());
        out.set_array("section3.P", take_array(s.p_terms));
        out.set_array("section3.Q", take_array(s.q_terms));
    }
    return out;
}

int cmd_optimize(const std::string& target, const std::string& config_path,
                 std::uint64_t seed, long budget, const std::string& out)
{
    const RunConfig cfg =
        config_path.empty() ? RunConfig::reference() : RunConfig::load(config_path);
    const SearchSpace space = space_from_config(target, cfg);
    const std::vector<double> start = start_from_config(space, cfg);

    NmOptions opts;
    opts.max_evals = budget;
    opts.seed = seed;
    const double start_value = objective(space, start);
    const OptResult r = run_nelder_mead(space, start, opts);

    Report rep;
    rep.command = "optimize_" + target;
    const bool maxing = maximizing(space.target);
    rep.rows.push_back({"start_objective", start_value, start_value, 0, true});
    rep.rows.push_back({"best_objective", r.best_value, start_value, 0,
                        maxing ? r.best_value >= start_value : r.best_value <= start_value});
    rep.summary.emplace_back("target", target);
    rep.summary.emplace_back("seed", std::to_string(seed));
    rep.summary.emplace_back("budget", std::to_string(budget));
    rep.summary.emplace_back("evaluations",
                             std::to_string(r.trace.empty() ? 0 : r.trace.back().evals));
    rep.summary.emplace_back("improvements", std::to_string(r.trace.size()));

    std::filesystem::create_directories(out);
    const std::string best_path = out + "/optimize_" + target + "_" + timestamp() + ".config";
    config_from_params(space, cfg, r.best_params).save(best_path);
    rep.summary.emplace_back("best_config", best_path);

    const auto labels = param_labels(space);
    for (size_t i = 0; i < labels.size(); ++i)
        rep.summary.emplace_back(labels[i], std::to_string(r.best_params[i]));
    return emit(rep, out);
}

int verify_sigma_quadrature(Report& rep)
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> pt(-2.0, 2.0);
    const MollifierPair m = reference_section2();
    const EtaSpec e = reference_section3();
    const BiPoly s12 = cross_moment_bipoly(m.P1, m.P2, m.theta);
    const BiPoly s33 = cross_moment_bipoly(e.P, e.P, e.theta);
    for (int i = 0; i < 10; ++i) {
        const double a = pt(rng), b = pt(rng);
        const Rat ra = rat_from_double(a), rb = rat_from_double(b);
        const double d12 = std::abs(to_double(s12.eval(ra, rb)) -
                                    simpson_cross_moment(m.P1, m.P2, 4.0 / 7.0, a, b));
        const double d33 = std::abs(to_double(s33.eval(ra, rb)) -
                                    simpson_cross_moment(e.P, e.P, 4.0 / 7.0, a, b));
        rep.rows.push_back({"cross_moment_12_" + std::to_string(i), d12, 0, 1e-10, d12 < 1e-10});
        rep.rows.push_back({"cross_moment_PP_" + std::to_string(i), d33, 0, 1e-10, d33 < 1e-10});
    }
    return 0;
}

int verify_expform_derivatives(Report& rep)
{
    std::mt19937_64 rng(20240812);
    std::uniform_real_distribution<double> pt(-1.5, 1.5);
    std::uniform_int_distribution<int> deg(0, 2), num(-5, 5), den(1, 4), kmax(0, 3);
    const Rat h(1, 1000000);
    int done = 0;
    while (done < 20) {
        ExpRatForm f;
        const int top = kmax(rng);
        for (int k = 0; k <= top; ++k) {
            BiPoly p, q;
            for (int i = 0; i <= deg(rng); ++i)
                for (int j = 0; j <= deg(rng); ++j) p.add_term(i, j, Rat(num(rng), den(rng)));
            for (int i = 0; i <= deg(rng); ++i)
                for (int j = 0; j <= deg(rng); ++j) q.add_term(i, j, Rat(num(rng), den(rng)));
            f.add_term(k, p, q);
        }
        if (f.is_zero()) continue;
        const double a = pt(rng), b = pt(rng);
        if (std::abs(a + b) < 0.5) continue;
        const Rat ra = rat_from_double(a), rb = rat_from_double(b);
        const Real50 exact = eval_real50(f.derivative(Var::a), ra, rb);
        const Real50 fd =
            (eval_real50(f, ra + h, rb) - eval_real50(f, ra - h, rb)) / (2 * to_real50(h));
        const Real50 mag = abs(exact);
        const double rel =
            static_cast<double>(abs(fd - exact) / (mag > 1e-30 ? mag : Real50(1e-30)));
        const bool commute = f.derivative(Var::a).derivative(Var::b) ==
                             f.derivative(Var::b).derivative(Var::a);
        rep.rows.push_back(
            {"fd_rel_err_" + std::to_string(done), rel, 0, 1e-6, rel < 1e-6 && commute});
        ++done;
    }
    return 0;
}

int verify_functional_equation(Report& rep)
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> sig(0.05, 0.95), tt(10.0, 100.0);
    for (int i = 0; i < 20; ++i) {
        const std::complex<double> s(sig(rng), tt(rng));
        const auto a = xi_complete(s), b = xi_complete(1.0 - s);
        const double r1 = std::abs(a - b) / std::abs(a);
        const auto da = xi_prime(s), db = xi_prime(1.0 - s);
        const double r2 = std::abs(da + db) / std::abs(da);
        rep.rows.push_back({"xi_residual_" + std::to_string(i), r1, 0, 1e-8, r1 < 1e-8});
        rep.rows.push_back({"xi_prime_residual_" + std::to_string(i), r2, 0, 1e-7, r2 < 1e-7});
    }
    return 0;
}

int verify_moment(Report& rep, double T)
{
    MomentSpec spec;
    spec.T = T;
    spec.w = 1.5 * T;
    spec.delta_exp = 0.3;
    spec.pair.theta = Rat(1, 5);
    spec.pair.R = Rat(1023, 1000);
    spec.pair.P1 = RatPoly::monomial(1);
    spec.pair.P2 = RatPoly();
    const double moment = smoothed_moment(spec);
    const double predicted = section2_mean(spec.pair).c;
    const double ratio = moment / predicted;
    rep.rows.push_back({"moment_over_prediction", ratio, 1.0, 0.3,
                        ratio >= 0.7 && ratio <= 1.3});
    rep.summary.emplace_back("moment", std::to_string(moment));
    rep.summary.emplace_back("prediction", std::to_string(predicted));
    rep.summary.emplace_back("T", std::to_string(T));
    return 0;
}

int verify_zero_count(Report& rep, double T)
{
    const long count = count_zeros_zeta(T);
    const double expect = riemann_vonmangoldt(T);
    const double off = std::abs(double(count) - expect);
    rep.rows.push_back({"zero_count_vs_formula", double(count), expect, 3.0, off <= 3.0});
    return 0;
}

int cmd_verify(const std::string& check, double T, const std::string& out)
{
    Report rep;
    rep.command = "verify_" + check;
    for (char& c : rep.command)
        if (c == '-') c = '_';
    if (check == "sigma-quadrature") verify_sigma_quadrature(rep);
    else if (check == "expform-derivatives") verify_expform_derivatives(rep);
    else if (check == "functional-equation") verify_functional_equation(rep);
    else if (check == "moment") verify_moment(rep, T > 0 ? T : 5000);
    else if (check == "zero-count") verify_zero_count(rep, T > 0 ? T : 100);
    else {
        std::fprintf(stderr, "unknown check '%s'\n", check.c_str());
        return 2;
    }
    return emit(rep, out);
}

int cmd_zeros_count(double T, const std::string& out)
{
    Report rep;
    rep.command = "zeros_count";
    const long count = count_zeros_zeta(T);
    const double expect = riemann_vonmangoldt(T);
    rep.rows.push_back({"count", double(count), expect, 3.0,
                        std::abs(double(count) - expect) <= 3.0});
    rep.summary.emplace_back("T", std::to_string(T));
    rep.summary.emplace_back("riemann_vonmangoldt", std::to_string(expect));
    return emit(rep, out);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"mollified-moment proportions for zeta zeros"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_dir = "results";
    app.add_option("--out", out_dir, "output directory for CSV/summary artifacts");

    auto* rep = app.add_subcommand("reproduce", "recompute the headline proportions");
    std::string rep_target;
    bool rep_golden = false;
    rep->add_option("target", rep_target, "section2|section3|theorem1")
        ->required()
        ->check(CLI::IsMember({"section2", "section3", "theorem1"}));
    rep->add_flag("--golden", rep_golden, "also compare against frozen golden values");

    auto* opt = app.add_subcommand("optimize", "search the free parameters");
    std::string opt_target, opt_config;
    std::uint64_t opt_seed = 0;
    long opt_budget = 10000;
    opt->add_option("target", opt_target, "section2|section3|combined")
        ->required()
        ->check(CLI::IsMember({"section2", "section3", "combined"}));
    opt->add_option("--config", opt_config, "parameter file (defaults to built-in reference)");
    opt->add_option("--seed", opt_seed, "search seed");
    opt->add_option("--budget", opt_budget, "objective evaluation budget");

    auto* ver = app.add_subcommand("verify", "run a named property suite");
    std::string ver_check;
    double ver_T = 0;
    ver->add_option("check", ver_check,
                    "sigma-quadrature|expform-derivatives|functional-equation|moment|zero-count")
        ->required();
    ver->add_option("--T", ver_T, "height parameter where applicable");

    auto* zer = app.add_subcommand("zeros", "zero counting utilities");
    auto* zer_count = zer->add_subcommand("count", "count critical-line zeros up to T");
    double zer_T = 100;
    zer_count->add_option("--T", zer_T, "upper height")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (rep->parsed()) return cmd_reproduce(rep_target, rep_golden, out_dir);
        if (opt->parsed()) return cmd_optimize(opt_target, opt_config, opt_seed, opt_budget, out_dir);
        if (ver->parsed()) return cmd_verify(ver_check, ver_T, out_dir);
        if (zer->parsed() && zer_count->parsed()) return cmd_zeros_count(zer_T, out_dir);
        std::fprintf(stderr, "no command selected\n");
        return 2;
    } catch (const InvalidConfig& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const InvalidParams& e) {
        std::fprintf(stderr, "parameter error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
