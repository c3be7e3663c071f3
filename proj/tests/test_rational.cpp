#include <doctest.h>

#include <random>

#include "appell/error.hpp"
#include "appell/rational.hpp"
#include "support.hpp"

using appell::Rational;

TEST_CASE("fraction arithmetic") {
    CHECK(appell::rat_add(Rational(1, 2), Rational(1, 3)) == Rational(5, 6));
    CHECK(appell::rat_mul(Rational(2, 3), Rational(3, 2)) == Rational(1));
    CHECK(appell::rat_sub(Rational(1, 2), Rational(1, 2)).to_string() == "0");
    CHECK(appell::rat_div(Rational(1, 2), Rational(-1, 4)) == Rational(-2));
    CHECK_THROWS_AS(appell::rat_div(Rational(1), Rational(0)), appell::DivisionByZero);
    CHECK_THROWS_AS(Rational(1, 0), appell::DivisionByZero);
}

TEST_CASE("canonical form") {
    const Rational q(appell::BigInt(6), appell::BigInt(-4));
    CHECK(q.numerator() == -3);
    CHECK(q.denominator() == 2);
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational(4, 2).is_integer());
}

TEST_CASE("serialization") {
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational(12).to_string() == "12");
    CHECK(Rational::parse("-691/2730") == Rational(-691, 2730));
    CHECK(Rational::parse(" 4/6 ") == Rational(2, 3));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("1/-2"), appell::ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), appell::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), appell::ParseError);
    CHECK_THROWS_AS(Rational::parse("3/0"), appell::DivisionByZero);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational q = appell::testing::random_rational(rng) / appell::testing::random_rational(rng, false);
        CHECK(Rational::parse(q.to_string()) == q);
    }
}

TEST_CASE("field axioms on random rationals") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const Rational a = appell::testing::random_rational(rng);
        const Rational b = appell::testing::random_rational(rng);
        const Rational c = appell::testing::random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) CHECK(a * (Rational(1) / a) == Rational(1));
    }
}

TEST_CASE("ordering") {
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(5, 3) > Rational(3, 2));
}
