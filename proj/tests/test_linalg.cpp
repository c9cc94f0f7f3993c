#include "octocheck/linalg.hpp"
#include "octocheck/sampling.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

using octo::Matrix;
using octo::Rational;
using octo::Vector;

TEST_CASE("dot product") {
    const Vector a = {Rational(3, 5), Rational(4, 5)};
    const Vector b = {Rational(-4, 5), Rational(3, 5)};
    CHECK(octo::dot(a, a) == Rational(1));
    CHECK(octo::dot(a, b) == Rational(0));
    CHECK_THROWS_AS(octo::dot(a, Vector{Rational(1)}), std::invalid_argument);
}

TEST_CASE("matrix construction and access") {
    Matrix m(2, 3);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m(1, 2) == Rational(0));
    m(1, 2) = Rational(5, 7);
    CHECK(m(1, 2) == Rational(5, 7));
    CHECK_THROWS_AS(Matrix(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("matrix algebra") {
    const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    const Matrix b = Matrix::from_rows({{0, 1}, {1, 0}});
    CHECK(a * b == Matrix::from_rows({{2, 1}, {4, 3}}));
    CHECK(b * b == Matrix::identity(2));
    CHECK(a + b == Matrix::from_rows({{1, 3}, {4, 4}}));
    CHECK(a - a == Matrix(2, 2));
    CHECK(Rational(2) * b == Matrix::from_rows({{0, 2}, {2, 0}}));
    CHECK(a.transpose() == Matrix::from_rows({{1, 3}, {2, 4}}));
    CHECK(Matrix::identity(2) * a == a);

    const Matrix rect = Matrix::from_rows({{1, 0, 2}});
    CHECK((rect * rect.transpose())(0, 0) == Rational(5));
    CHECK_THROWS_AS(a * rect.transpose(), std::invalid_argument);
    CHECK_THROWS_AS(a + rect, std::invalid_argument);
}

TEST_CASE("first_difference finds the earliest mismatch") {
    const Matrix a = Matrix::identity(3);
    Matrix b = a;
    CHECK(!octo::first_difference(a, b).has_value());
    b(1, 2) = Rational(1, 2);
    const auto pos = octo::first_difference(a, b);
    REQUIRE(pos.has_value());
    CHECK(pos->first == 1);
    CHECK(pos->second == 2);
}

TEST_CASE("gram matrices") {
    const Vector v1 = {Rational(3, 5), Rational(4, 5)};
    const Vector v2 = {Rational(-4, 5), Rational(3, 5)};
    CHECK(octo::gram({v1, v2}) == Matrix::identity(2));

    const Vector w = {Rational(2), Rational(0)};
    const Matrix g = octo::gram({w, v1});
    CHECK(g(0, 0) == Rational(4));
    CHECK(g(0, 1) == Rational(6, 5));
    CHECK(g(1, 0) == Rational(6, 5));

    CHECK_THROWS_AS(octo::gram({}), std::invalid_argument);
    CHECK_THROWS_AS(octo::gram({v1, Vector{Rational(1)}}), std::invalid_argument);
}

TEST_CASE("determinants") {
    CHECK(octo::determinant(Matrix::from_rows({{1, 2}, {3, 4}})) == Rational(-2));
    CHECK(octo::determinant(Matrix::from_rows({{2, 0}, {0, 3}})) == Rational(6));
    CHECK(octo::determinant(Matrix::identity(5)) == Rational(1));
    CHECK(octo::determinant(Matrix::from_rows({{1, 2}, {2, 4}})) == Rational(0));
    CHECK_THROWS_AS(octo::determinant(Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant is multiplicative on seeded samples") {
    octo::SampleGen gen(97);
    for (int t = 0; t < 25; ++t) {
        Matrix a(3, 3), b(3, 3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) {
                a(r, c) = gen.next_rational();
                b(r, c) = gen.next_rational();
            }
        CHECK(octo::determinant(a * b) == octo::determinant(a) * octo::determinant(b));
    }
}
