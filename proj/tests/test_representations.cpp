#include "octocheck/representations.hpp"
#include "support/table_oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

using octo::CheckStatus;
using octo::Matrix;
using octo::Octonion;
using octo::Rational;
using octo::RepGenerators;
using octo::RepName;

TEST_CASE("seven 8x8 generators square to -I and anticommute") {
    const RepGenerators rep = octo::build_rep(RepName::gamma7);
    REQUIRE(rep.generators.size() == 7);
    for (const Matrix& m : rep.generators) {
        CHECK(m.rows() == 8);
        CHECK(m.cols() == 8);
    }
    const octo::CheckResult r = octo::check_clifford_relations(rep);
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.name == "rep.gamma7_relations");

    const Matrix minus_id = Rational(-1) * Matrix::identity(8);
    for (const Matrix& m : rep.generators)
        CHECK(m * m == minus_id);
}

TEST_CASE("six 8x8 generators square to -I and anticommute") {
    const RepGenerators rep = octo::build_rep(RepName::gamma6);
    REQUIRE(rep.generators.size() == 6);
    CHECK(octo::check_clifford_relations(rep).status == CheckStatus::pass);

    // Generator k is left multiplication by i_k i_7; the oracle pins the
    // first one to left multiplication by -i6.
    const Octonion u = oracle::mul(Octonion::unit(1), Octonion::unit(7));
    CHECK(u == -Octonion::unit(6));
    CHECK(rep.generators.front() == octo::left_mult_matrix(u));
}

TEST_CASE("eight 16x16 generators square to +I and anticommute") {
    const RepGenerators rep = octo::build_rep(RepName::gamma8);
    REQUIRE(rep.generators.size() == 8);
    for (const Matrix& m : rep.generators) {
        CHECK(m.rows() == 16);
        CHECK(m.cols() == 16);
    }
    CHECK(octo::check_clifford_relations(rep).status == CheckStatus::pass);

    const Matrix id = Matrix::identity(16);
    for (const Matrix& m : rep.generators)
        CHECK(m * m == id);

    // Generator 0 comes from the unit element, so it swaps the two blocks.
    Matrix swap(16, 16);
    for (std::size_t r = 0; r < 8; ++r) {
        swap(r, r + 8) = 1;
        swap(r + 8, r) = 1;
    }
    CHECK(rep.generators.front() == swap);
}

TEST_CASE("a corrupted generator set is reported as a failure with a witness") {
    RepGenerators rep = octo::build_rep(RepName::gamma7);
    rep.generators[2](0, 0) = Rational(1, 2);
    const octo::CheckResult r = octo::check_clifford_relations(rep);
    CHECK(r.status == CheckStatus::fail);
    REQUIRE(r.witness.has_value());
    CHECK(!r.witness->input.empty());
    CHECK(r.witness->got != r.witness->expected);
}

TEST_CASE("generator count must match the signature") {
    RepGenerators rep = octo::build_rep(RepName::gamma7);
    rep.generators.pop_back();
    CHECK_THROWS_AS(octo::check_clifford_relations(rep), std::invalid_argument);
}

TEST_CASE("embedding checks pass for the required source algebras") {
    for (octo::EmbedVariant variant : {octo::EmbedVariant::raise_q, octo::EmbedVariant::raise_p}) {
        CHECK(octo::check_embedding_hom(0, 6, variant).status == CheckStatus::pass);
        CHECK(octo::check_embedding_hom(0, 7, variant).status == CheckStatus::pass);
        CHECK(octo::check_embedding_hom(8, 0, variant).status == CheckStatus::pass);
    }
    CHECK(octo::check_embedding_hom(0, 7, octo::EmbedVariant::raise_q).name ==
          "clifford.embed_raise_q_cl_0_7");
}
