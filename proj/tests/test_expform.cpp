#include "zlab/expform.hpp"
#include "zlab/reference.hpp"

#include "zlab/quadcheck.hpp"

#include "oracle_taylor.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace zlab;

namespace {

BiPoly random_bipoly(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> deg(0, 2), num(-5, 5), den(1, 4);
    BiPoly p;
    for (int i = 0; i <= deg(rng); ++i)
        for (int j = 0; j <= deg(rng); ++j) p.add_term(i, j, Rat(num(rng), den(rng)));
    return p;
}

ExpRatForm random_form(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> kmax(0, 3);
    ExpRatForm f;
    const int top = kmax(rng);
    for (int k = 0; k <= top; ++k) f.add_term(k, random_bipoly(rng), random_bipoly(rng));
    return f;
}

} // namespace

TEST_CASE("cross moment of the identity shapes")
{
    // Pi = Pj = x at theta = 1: int (1+ax)(1+bx) dx = 1 + a/2 + b/2 + ab/3.
    const RatPoly x = RatPoly::monomial(1);
    BiPoly expect;
    expect.add_term(0, 0, Rat(1));
    expect.add_term(1, 0, Rat(1, 2));
    expect.add_term(0, 1, Rat(1, 2));
    expect.add_term(1, 1, Rat(1, 3));
    CHECK(cross_moment_bipoly(x, x, Rat(1)) == expect);
}

TEST_CASE("cross moment of constants keeps only the ab term")
{
    const RatPoly one = RatPoly::constant(Rat(1));
    const Rat theta(2, 3);
    CHECK(cross_moment_bipoly(one, one, theta) ==
          BiPoly::monomial(1, 1, theta * theta));
}

TEST_CASE("cross moment swap symmetry")
{
    const MollifierPair m = reference_section2();
    const Rat theta(4, 7);
    CHECK(cross_moment_bipoly(m.P1, m.P2, theta).swap_args() ==
          cross_moment_bipoly(m.P2, m.P1, theta));
}

TEST_CASE("pair moment form structure")
{
    const RatPoly x = RatPoly::monomial(1);
    const Rat theta(4, 7);
    const BiPoly s = cross_moment_bipoly(x, x, theta);
    const ExpRatForm f = pair_moment_form(x, x, theta);
    REQUIRE(f.terms().size() == 1);
    const auto& [k, t] = *f.terms().begin();
    CHECK(k == 1);
    CHECK(t.p == Rat(7, 4) * s.swap_args());
    CHECK(t.q == Rat(-7, 4) * s.negate_args());

    CHECK_THROWS_AS(pair_moment_form(x, x, Rat(0)), InvalidParams);
}

TEST_CASE("pair moment numerator vanishes on the anti-diagonal")
{
    // The k=0 reconstruction p1 + E q1 evaluates to 0 at (t,-t); the pole of
    // the quotient is removable.
    const EtaSpec e = reference_section3();
    for (const auto& [pi, pj] : {std::pair{e.P, e.P}, std::pair{e.P, RatPoly::monomial(1)}}) {
        const ExpRatForm f = pair_moment_form(pi, pj, e.theta);
        const auto& t1 = f.terms().at(1);
        const ExpRatForm numerator = ExpRatForm::from_term(0, t1.p, t1.q);
        for (const Rat& t : {Rat(3, 10), Rat(1)})
            CHECK(std::abs(eval_at(numerator, t, -t)) < 1e-12);
    }
}

TEST_CASE("derivative closure rules")
{
    // f = E/(a+b): d_a f = -E/(a+b) - E/(a+b)^2.
    const BiPoly one = BiPoly::constant(Rat(1));
    const ExpRatForm f = ExpRatForm::from_term(1, BiPoly(), one);
    ExpRatForm expect;
    expect.add_term(1, BiPoly(), BiPoly::constant(Rat(-1)));
    expect.add_term(2, BiPoly(), BiPoly::constant(Rat(-1)));
    CHECK(f.derivative(Var::a) == expect);

    // f = a b (k = 0): d_a f = b.
    const ExpRatForm g = ExpRatForm::from_term(0, BiPoly::monomial(1, 1, Rat(1)), BiPoly());
    CHECK(g.derivative(Var::a) ==
          ExpRatForm::from_term(0, BiPoly::monomial(0, 1, Rat(1)), BiPoly()));
}

TEST_CASE("mixed partials commute structurally")
{
    const MollifierPair m = reference_section2();
    const ExpRatForm f12 = pair_moment_form(m.P1, m.P2, m.theta);
    CHECK(f12.derivative(Var::a).derivative(Var::b) ==
          f12.derivative(Var::b).derivative(Var::a));

    std::mt19937_64 rng(99);
    for (int i = 0; i < 10; ++i) {
        const ExpRatForm f = random_form(rng);
        CHECK(f.derivative(Var::a).derivative(Var::b) ==
              f.derivative(Var::b).derivative(Var::a));
    }
}

TEST_CASE("blend operator")
{
    const EtaSpec e = reference_section3();
    const ExpRatForm f = pair_moment_form(e.P, e.P, e.theta);

    SECTION("delta = 0 is the identity")
    {
        CHECK(apply_operator(f, {Rat(0), e.Q, Var::a}) == f);
    }
    SECTION("delta = 1 with Q = 1 gives f + 2 df")
    {
        const OperatorSpec op{Rat(1), RatPoly::constant(Rat(1)), Var::b};
        CHECK(apply_operator(f, op) == f + f.derivative(Var::b).scaled(Rat(2)));
    }
}

TEST_CASE("numeric evaluation")
{
    // (1+E)/(a+b) at a = b = -1: (1+e^2)/(-2).
    const BiPoly one = BiPoly::constant(Rat(1));
    const ExpRatForm f = ExpRatForm::from_term(1, one, one);
    CHECK_THAT(eval_at(f, -1.0, -1.0),
               Catch::Matchers::WithinAbs(-4.194528049465325, 1e-12));

    // Kernel of (x, x) at theta = 4/7, a = b = -1.023.
    const ExpRatForm g = pair_moment_form(RatPoly::monomial(1), RatPoly::monomial(1), Rat(4, 7));
    CHECK_THAT(eval_at(g, -1.023, -1.023),
               Catch::Matchers::WithinAbs(10.787059905683496, 1e-9));
    CHECK_THAT(eval_at(g, Rat(-1023, 1000), Rat(-1023, 1000), {.high_precision = true}),
               Catch::Matchers::WithinAbs(10.787059905683496, 1e-12));

    CHECK(eval_at(ExpRatForm(), -1.0, -1.0) == 0.0);

    // Pole guard applies to forms with a genuine (a+b) power.
    CHECK_THROWS_AS(eval_at(f, 1.0, -1.0 + 1e-10), PoleProximity);
}

TEST_CASE("derivatives match high-precision finite differences")
{
    std::mt19937_64 rng(20240812);
    std::uniform_real_distribution<double> pt(-1.5, 1.5);
    const Rat h(1, 1000000);
    int done = 0;
    while (done < 20) {
        const ExpRatForm f = random_form(rng);
        if (f.is_zero()) continue;
        double a = pt(rng), b = pt(rng);
        if (std::abs(a + b) < 0.5) continue;
        const Rat ra = rat_from_double(a), rb = rat_from_double(b);

        const Real50 exact = eval_real50(f.derivative(Var::a), ra, rb);
        const Real50 fd =
            (eval_real50(f, ra + h, rb) - eval_real50(f, ra - h, rb)) / (2 * to_real50(h));
        const Real50 mag = abs(exact);
        CHECK(static_cast<double>(abs(fd - exact) / (mag > 1e-30 ? mag : Real50(1e-30))) <
              1e-6);

        const Real50 exact_b = eval_real50(f.derivative(Var::b), ra, rb);
        const Real50 fd_b =
            (eval_real50(f, ra, rb + h) - eval_real50(f, ra, rb - h)) / (2 * to_real50(h));
        const Real50 mag_b = abs(exact_b);
        CHECK(static_cast<double>(abs(fd_b - exact_b) /
                                  (mag_b > 1e-30 ? mag_b : Real50(1e-30))) < 1e-6);
        ++done;
    }
}

TEST_CASE("cross moments agree with Simpson quadrature")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> pt(-2.0, 2.0);
    const MollifierPair m = reference_section2();
    const double theta = 4.0 / 7.0;
    const BiPoly s = cross_moment_bipoly(m.P1, m.P2, Rat(4, 7));
    for (int i = 0; i < 10; ++i) {
        const double a = pt(rng), b = pt(rng);
        const double sym =
            to_double(s.eval(rat_from_double(a), rat_from_double(b)));
        const double quad = simpson_cross_moment(m.P1, m.P2, theta, a, b);
        CHECK(std::abs(sym - quad) < 1e-10);
    }
}

TEST_CASE("fast double form evaluation tracks the exact path")
{
    const EtaSpec e = reference_section3();
    const ExpRatForm exact = pair_moment_form(e.P, e.P, e.theta).derivative(Var::a);
    const auto fast = pair_moment_form(poly_cast<double>(e.P), poly_cast<double>(e.P),
                                       to_double(e.theta))
                          .derivative(Var::a);
    const double r = to_double(e.R);
    CHECK_THAT(eval_fast(fast, -r, -r),
               Catch::Matchers::WithinRel(eval_at(exact, -e.R, -e.R), 1e-11));
}
