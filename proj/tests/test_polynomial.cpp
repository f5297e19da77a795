#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "schubert/polynomial.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

TEST_CASE("monomial basics") {
    Monomial m({2, 1});
    CHECK(m.total_degree() == 3);
    CHECK(m.exponent(1) == 2);
    CHECK(m.exponent(7) == 0);
    CHECK(Monomial({1, 0, 0}) == Monomial({1})); // trailing zeros trimmed
    CHECK(Monomial::one().is_one());
    CHECK((m * Monomial::variable(3)).exponent(3) == 1);
    CHECK_THROWS_AS(Monomial({-1}), std::invalid_argument);
}

TEST_CASE("monomial quotient matches the case split") {
    Monomial w({1, 1});
    CHECK(*w.divided_by(Monomial::one()) == w);
    CHECK(*w.divided_by(Monomial::variable(2)) == Monomial::variable(1));
    CHECK_FALSE(Monomial::variable(1).divided_by(Monomial::variable(2)).has_value());
}

TEST_CASE("staircase membership") {
    CHECK(Monomial({3, 2, 1}).in_staircase(4));
    CHECK_FALSE(Monomial({4, 2, 1}).in_staircase(4));
    CHECK(Monomial::one().min_staircase_rank() == 1);
    CHECK(Monomial::variable(3).min_staircase_rank() == 4);
}

TEST_CASE("term order") {
    // the published example: the leading monomial of 3x3^2 + 2x3x7 - 7x5x7
    Polynomial f = parse_polynomial("3*x3^2 + 2*x3*x7 - 7*x5*x7");
    auto [lead, c] = f.leading_term();
    CHECK(lead == parse_monomial("x5*x7"));
    CHECK(c == -7);

    CHECK(parse_polynomial("x1 + x2").leading_monomial() == Monomial::variable(2));
    CHECK(Polynomial(parse_monomial("x1^2")).leading_monomial() == parse_monomial("x1^2"));

    // degree dominates
    CHECK(term_order_less(parse_monomial("x7"), parse_monomial("x1^2")));
}

TEST_CASE("term order is multiplicative") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        Polynomial f = verify::random_polynomial(6, 5, 4, rng);
        Polynomial g = verify::random_polynomial(6, 5, 4, rng);
        if (f.is_zero() || g.is_zero()) continue;
        auto [mf, cf] = f.leading_term();
        auto [mg, cg] = g.leading_term();
        auto [mp, cp] = (f * g).leading_term();
        CHECK(mp == mf * mg);
        CHECK(cp == cf * cg);
    }
}

TEST_CASE("exact ring arithmetic") {
    Polynomial x1 = Polynomial::variable(1);
    Polynomial x2 = Polynomial::variable(2);
    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
    CHECK((x1 - x1).is_zero());
    CHECK_THROWS_AS(Polynomial().leading_term(), std::domain_error);

    // coefficients do not wrap: the middle coefficient of (x1 + 1)^80
    // exceeds any 64-bit integer
    Polynomial p(1);
    Polynomial base = x1 + Polynomial(1);
    for (int i = 0; i < 80; ++i) p *= base;
    Int mid = p.coefficient(parse_monomial("x1^40"));
    CHECK(mid == Int("107507208733336176461620"));
}

TEST_CASE("printing is canonical and reparses") {
    CHECK(to_string(parse_polynomial("3*x1^2*x2 - 7*x5*x7")) == "3*x1^2*x2 - 7*x5*x7");
    CHECK(to_string(Polynomial()) == "0");
    CHECK(to_string(Polynomial(-5)) == "-5");
    CHECK(to_string(parse_polynomial("x2 + x1^2 + x1*x3")) == "x1^2 + x1*x3 + x2");
    CHECK(to_string(parse_polynomial("- x1 - x2")) == "-x1 - x2");

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial f = verify::random_polynomial(7, 6, 6, rng);
        CHECK(parse_polynomial(to_string(f)) == f);
    }
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_polynomial(""), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x1 + + x2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x0"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("3*"), ParseError);
    CHECK_THROWS_AS(parse_monomial("x1 + x2"), ParseError);
    CHECK_THROWS_AS(parse_monomial("2*x1"), ParseError);
    CHECK(parse_monomial("1").is_one());
    try {
        parse_polynomial("x1 ? x2");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}
