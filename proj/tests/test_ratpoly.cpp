#include "zlab/ratpoly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace zlab;

namespace {

RatPoly random_poly(std::mt19937_64& rng, int max_deg)
{
    std::uniform_int_distribution<int> deg(0, max_deg), num(-9, 9), den(1, 9);
    std::vector<Rat> c(size_t(deg(rng)) + 1);
    for (auto& v : c) v = Rat(num(rng), den(rng));
    return RatPoly(std::move(c));
}

Rat random_rat(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
    return Rat(num(rng), den(rng));
}

} // namespace

TEST_CASE("rational parsing is exact")
{
    CHECK(rat_from_string("0.064") == Rat(8, 125));
    CHECK(rat_from_string("-1.023") == Rat(-1023, 1000));
    CHECK(rat_from_string("4/7") == Rat(4, 7));
    CHECK(rat_from_string("2.5e-3") == Rat(1, 400));
    CHECK(rat_from_string("  12 ") == Rat(12));
    CHECK(rat_from_string("-3/9") == Rat(-1, 3));
    CHECK_THROWS_AS(rat_from_string("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
}

TEST_CASE("evaluation")
{
    const RatPoly x = RatPoly::monomial(1);
    CHECK(x(Rat(1)) == 1);

    // P1(x) = x - 0.064 x(1-x) + 0.112 x^2(1-x) has value 1 at 1.
    const RatPoly p1 = p_basis(PBasis::section2_p1, {Rat(-64, 1000), Rat(112, 1000)});
    CHECK(p1(Rat(1)) == 1);
    CHECK(p1(Rat(0)) == 0);

    // P2(1) = 1.305 - 0.276 - 0.025 = 1.004
    const RatPoly p2 =
        p_basis(PBasis::section2_p2, {Rat(1305, 1000), Rat(-276, 1000), Rat(-25, 1000)});
    CHECK(p2(Rat(1)) == Rat(1004, 1000));
}

TEST_CASE("derivative")
{
    CHECK(RatPoly::monomial(2).derivative() == RatPoly{Rat(0), Rat(2)});
    CHECK(RatPoly::constant(Rat(1)).derivative().is_zero());

    // P(x) = x - 0.274 x(1-x) expands to 0.726 x + 0.274 x^2,
    // so P' = 0.726 + 0.548 x.
    const RatPoly x = RatPoly::monomial(1);
    const RatPoly p = x - Rat(274, 1000) * (x * (RatPoly{Rat(1), Rat(-1)}));
    CHECK(p.derivative() == RatPoly{Rat(726, 1000), Rat(548, 1000)});
}

TEST_CASE("integral over [0,1]")
{
    CHECK(RatPoly::constant(Rat(1)).integral01() == 1);
    CHECK(RatPoly::monomial(1).integral01() == Rat(1, 2));
    CHECK(RatPoly({Rat(0), Rat(1), Rat(-1)}).integral01() == Rat(1, 6));  // x(1-x)
}

TEST_CASE("constrained P bases")
{
    // section3-P with the reference coefficients equals
    // x - 0.274 x(1-x) - 0.334 x^2(1-x) + 0.005 x^3(1-x).
    const RatPoly x = RatPoly::monomial(1);
    const RatPoly one_mx{Rat(1), Rat(-1)};
    const RatPoly expect = x - Rat(274, 1000) * (x * one_mx) -
                           Rat(334, 1000) * (x * x * one_mx) +
                           Rat(5, 1000) * (x * x * x * one_mx);
    CHECK(p_basis(PBasis::section3_p, {Rat(-274, 1000), Rat(-334, 1000), Rat(5, 1000)}) ==
          expect);

    // Empty coefficient list degenerates to the identity shape.
    CHECK(p_basis(PBasis::section2_p1, {}) == x);
    CHECK(p_basis(PBasis::section2_p1, {Rat(0)}) == x);

    CHECK(p_basis(PBasis::section2_p2, {Rat(1305, 1000), Rat(-276, 1000), Rat(-25, 1000)}) ==
          RatPoly{Rat(0), Rat(1305, 1000), Rat(-276, 1000), Rat(-25, 1000)});
}

TEST_CASE("Q basis")
{
    // Reference Q: 1 - 0.609x - 0.572(x^2/2 - x^3/3) - 4.895(x^3/3 - x^4/2 + x^5/5)
    const RatPoly expect{Rat(1),
                         Rat(-609, 1000),
                         Rat(-572, 1000) / 2,
                         Rat(572, 1000) / 3 - Rat(4895, 1000) / 3,
                         Rat(4895, 1000) / 2,
                         Rat(-4895, 1000) / 5};
    const RatPoly q = q_basis({Rat(-609, 1000), Rat(-572, 1000), Rat(-4895, 1000)});
    CHECK(q == expect);

    CHECK(q_basis({Rat(0)}) == RatPoly::constant(Rat(1)));

    // Derivative symmetry at 1/2 +- h for h = 0.1 and 0.25, exact.
    const RatPoly dq = q.derivative();
    CHECK(dq(Rat(3, 5)) == dq(Rat(2, 5)));
    CHECK(dq(Rat(3, 4)) == dq(Rat(1, 4)));
}

TEST_CASE("basis invariants hold for arbitrary coefficients")
{
    std::mt19937_64 rng(20240811);
    const RatPoly one_minus_x{Rat(1), Rat(-1)};
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rat> c(1 + size_t(trial % 4));
        for (auto& v : c) v = random_rat(rng);

        const RatPoly p1 = p_basis(PBasis::section2_p1, c);
        CHECK(p1(Rat(0)) == 0);
        CHECK(p1(Rat(1)) == 1);
        CHECK(p_basis(PBasis::section2_p2, c)(Rat(0)) == 0);

        const RatPoly q = q_basis(c);
        CHECK(q(Rat(0)) == 1);
        // Q'(x) = Q'(1-x) as a polynomial identity.
        const RatPoly dq = q.derivative();
        CHECK(dq == dq.compose(one_minus_x));
    }
}

TEST_CASE("calculus and ring identities on random polynomials")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const RatPoly p = random_poly(rng, 10), q = random_poly(rng, 6);
        // Fundamental theorem, exact.
        CHECK(p.derivative().integral01() == p(Rat(1)) - p(Rat(0)));
        // Evaluation is a ring homomorphism.
        const Rat x = random_rat(rng);
        CHECK((p * q)(x) == p(x) * q(x));
        CHECK((p + q)(x) == p(x) + q(x));
        // Antiderivative inverts derivative up to the constant term.
        CHECK(p.antiderivative().derivative() == p);
    }
}
