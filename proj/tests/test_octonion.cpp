#include "octocheck/octonion.hpp"
#include "octocheck/sampling.hpp"
#include "support/table_oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

using octo::MultTable;
using octo::Octonion;
using octo::Rational;

namespace {
Octonion scaled_unit(int k, const Rational& t) {
    return t * Octonion::unit(k);
}
}  // namespace

TEST_CASE("the generated table matches the hand-written literal table") {
    CHECK(MultTable::generated_matches_literal());
}

TEST_CASE("basis products agree with the independent triple-search oracle") {
    for (int k = 0; k < 8; ++k)
        for (int l = 0; l < 8; ++l) {
            const Octonion lib = Octonion::unit(k) * Octonion::unit(l);
            const Octonion orc = oracle::mul(Octonion::unit(k), Octonion::unit(l));
            INFO("k=" << k << " l=" << l);
            CHECK(lib == orc);
        }
}

TEST_CASE("full products agree with the oracle on seeded rational octonions") {
    octo::SampleGen gen(42);
    for (int t = 0; t < 200; ++t) {
        const Octonion x = gen.next_octonion();
        const Octonion y = gen.next_octonion();
        CHECK(x * y == oracle::mul(x, y));
    }
}

TEST_CASE("pinned products") {
    CHECK(Octonion::unit(1) * Octonion::unit(2) == Octonion::unit(3));
    CHECK(Octonion::unit(4) * Octonion::unit(2) == Octonion::unit(6));
    CHECK(Octonion::unit(3) * Octonion::unit(3) == -Octonion::unit(0));
    CHECK(Octonion::unit(1) * Octonion::unit(7) == -Octonion::unit(6));

    const Octonion x = scaled_unit(0, Rational(2)) + scaled_unit(5, Rational(3));
    CHECK(Octonion::unit(0) * x == x);
    CHECK(x * Octonion::unit(0) == x);
}

TEST_CASE("antisymmetry on distinct imaginary units") {
    for (int k = 1; k < 8; ++k)
        for (int l = 1; l < 8; ++l) {
            if (k == l)
                continue;
            CHECK(Octonion::unit(k) * Octonion::unit(l) ==
                  -(Octonion::unit(l) * Octonion::unit(k)));
        }
}

TEST_CASE("conjugation, norm, inverse") {
    const Octonion p = scaled_unit(0, Rational(3, 5)) + scaled_unit(7, Rational(4, 5));
    CHECK(octo::conjugate(p) ==
          scaled_unit(0, Rational(3, 5)) + scaled_unit(7, Rational(-4, 5)));
    CHECK(octo::norm_sq(p) == Rational(1));
    CHECK(octo::inverse(p) == octo::conjugate(p));
    CHECK(p * octo::inverse(p) == Octonion::unit(0));

    CHECK(octo::norm_sq(Octonion::unit(1) + Octonion::unit(2)) == Rational(2));
    CHECK_THROWS_AS(octo::inverse(Octonion()), std::domain_error);

    // conj(x y) = conj(y) conj(x) on every basis pair.
    for (int k = 0; k < 8; ++k)
        for (int l = 0; l < 8; ++l)
            CHECK(octo::conjugate(Octonion::unit(k) * Octonion::unit(l)) ==
                  octo::conjugate(Octonion::unit(l)) * octo::conjugate(Octonion::unit(k)));
}

TEST_CASE("associator and commutator") {
    // Associativity fails: the associator of i1, i2, i4 is 2 i7.
    CHECK(octo::associator(Octonion::unit(1), Octonion::unit(2), Octonion::unit(4)) ==
          Rational(2) * Octonion::unit(7));
    // ... but any two elements associate (quaternionic subalgebras).
    CHECK(octo::associator(Octonion::unit(1), Octonion::unit(2), Octonion::unit(3)).is_zero());
    CHECK(octo::commutator(Octonion::unit(1), Octonion::unit(1)).is_zero());
    CHECK(octo::commutator(Octonion::unit(1), Octonion::unit(2)) ==
          Rational(2) * Octonion::unit(3));
}

TEST_CASE("alternativity and flexibility on all basis pairs") {
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const Octonion x = Octonion::unit(a), y = Octonion::unit(b);
            CHECK(octo::associator(x, x, y).is_zero());
            CHECK(octo::associator(y, x, x).is_zero());
            CHECK((x * y) * x == x * (y * x));
        }
}

TEST_CASE("Moufang residuals vanish on all 512 basis triples") {
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            for (int c = 0; c < 8; ++c) {
                const octo::MoufangResiduals r = octo::moufang_residuals(
                    Octonion::unit(a), Octonion::unit(b), Octonion::unit(c));
                INFO("triple (" << a << ", " << b << ", " << c << ")");
                CHECK(r.m1.is_zero());
                CHECK(r.m2.is_zero());
                CHECK(r.m3.is_zero());
            }
}

TEST_CASE("Moufang residuals vanish on seeded rational triples") {
    octo::SampleGen gen(7);
    for (int t = 0; t < 100; ++t) {
        const octo::MoufangResiduals r = octo::moufang_residuals(
            gen.next_octonion(), gen.next_octonion(), gen.next_octonion());
        CHECK(r.m1.is_zero());
        CHECK(r.m2.is_zero());
        CHECK(r.m3.is_zero());
    }
}

TEST_CASE("norm is multiplicative") {
    octo::SampleGen gen(11);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const Octonion x = Octonion::unit(a), y = Octonion::unit(b);
            CHECK(octo::norm_sq(x * y) == octo::norm_sq(x) * octo::norm_sq(y));
        }
    for (int t = 0; t < 100; ++t) {
        const Octonion x = gen.next_octonion(), y = gen.next_octonion();
        CHECK(octo::norm_sq(x * y) == octo::norm_sq(x) * octo::norm_sq(y));
    }
}

TEST_CASE("multiplication operator matrices") {
    CHECK(octo::left_mult_matrix(Octonion::unit(0)) == octo::Matrix::identity(8));
    const octo::Matrix l1 = octo::left_mult_matrix(Octonion::unit(1));
    CHECK(l1 * l1 == Rational(-1) * octo::Matrix::identity(8));

    // Column 1 of right multiplication by i7 holds i1 * i7 = -i6.
    const octo::Matrix r7 = octo::right_mult_matrix(Octonion::unit(7));
    CHECK(r7(6, 1) == Rational(-1));
    CHECK(r7(1, 1) == Rational(0));
}

TEST_CASE("coefficient access and serialization") {
    const Octonion x = scaled_unit(0, Rational(1, 2)) + scaled_unit(3, Rational(-2, 3));
    CHECK(x.coeff(0) == Rational(1, 2));
    CHECK(x.coeff(3) == Rational(-2, 3));
    CHECK_FALSE(x.is_imaginary());
    CHECK(octo::to_string(x) ==
          "1/2 + 0 i1 + 0 i2 - 2/3 i3 + 0 i4 + 0 i5 + 0 i6 + 0 i7");
    CHECK(octo::to_string(Octonion()) ==
          "0 + 0 i1 + 0 i2 + 0 i3 + 0 i4 + 0 i5 + 0 i6 + 0 i7");
    CHECK_THROWS_AS(Octonion::unit(8), std::invalid_argument);
    CHECK_THROWS_AS(Octonion::unit(-1), std::invalid_argument);
}
