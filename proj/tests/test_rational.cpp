#include "octocheck/rational.hpp"
#include "octocheck/sampling.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

using octo::Int;
using octo::Rational;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
    SECTION("reduction") {
        const Rational r(6, 4);
        CHECK(r.numerator() == 3);
        CHECK(r.denominator() == 2);
    }
    SECTION("sign moves to the numerator") {
        const Rational r(3, -6);
        CHECK(r.numerator() == -1);
        CHECK(r.denominator() == 2);
        CHECK(r.str() == "-1/2");
    }
    SECTION("integers print without a slash") {
        CHECK(Rational(7).str() == "7");
        CHECK(Rational(-14, 2).str() == "-7");
        CHECK(Rational(0).str() == "0");
    }
    SECTION("zero denominator is rejected") {
        CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
        CHECK_THROWS_AS(Rational(0, 0), std::domain_error);
    }
}

TEST_CASE("arithmetic stays exact") {
    CHECK(Rational(1, 3) + Rational(1, 2) == Rational(5, 6));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(3, 5) * Rational(3, 5) == Rational(9, 25));
    CHECK(Rational(7, 2) / Rational(7, 2) == Rational(1));
    CHECK(-Rational(3, 5) == Rational(-3, 5));

    // The classic double-precision counterexample is exact here.
    Rational tenth(1, 10);
    Rational sum;
    for (int i = 0; i < 10; ++i)
        sum += tenth;
    CHECK(sum == Rational(1));
}

TEST_CASE("division by zero throws instead of crashing") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    Rational r(5, 3);
    CHECK_THROWS_AS(r /= Rational(0), std::domain_error);
}

TEST_CASE("comparisons follow rational order") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(5, 3) > Rational(1));
    CHECK(Rational(1, 3) <= Rational(2, 6));
}

TEST_CASE("field laws hold on seeded samples") {
    octo::SampleGen gen(20240817);
    for (int t = 0; t < 200; ++t) {
        const Rational a = gen.next_rational();
        const Rational b = gen.next_rational();
        const Rational c = gen.next_rational();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero())
            CHECK(a / b * b == a);
    }
}

TEST_CASE("large values never overflow") {
    Rational big(1);
    for (int i = 0; i < 40; ++i)
        big *= Rational(1000000007, 3);
    Rational back = big;
    for (int i = 0; i < 40; ++i)
        back /= Rational(1000000007, 3);
    CHECK(back == Rational(1));
    CHECK(big.denominator() > Int(1));
}
