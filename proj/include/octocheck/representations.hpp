#pragma once

// Matrix realizations of Clifford generator sets, built from octonion
// multiplication operators L(x): v -> x v.
//
//   gamma7: the seven 8x8 matrices L(i_k), k = 1..7; each squares to -I.
//   gamma6: the six 8x8 matrices L(i_k i_7), k = 1..6; each squares to -I.
//   gamma8: eight 16x16 matrices [[0, L(i_k)], [L(conj(i_k)), 0]] for
//           k = 0..7; each squares to +I.
//
// check_clifford_relations verifies M_j M_k + M_k M_j = 2 s delta_jk I
// exactly. Only the generator relations are checked here; faithfulness and
// irreducibility of the realizations are outside the scope of this module.

#include "octocheck/check.hpp"
#include "octocheck/clifford.hpp"
#include "octocheck/linalg.hpp"
#include "octocheck/octonion.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace octo {

enum class RepName { gamma6, gamma7, gamma8 };

inline const char* to_string(RepName r) {
    switch (r) {
        case RepName::gamma6: return "gamma6";
        case RepName::gamma7: return "gamma7";
        default: return "gamma8";
    }
}

struct RepGenerators {
    RepName name;
    Signature signature;       // generator j realizes e_{j+1} of this signature
    std::vector<Matrix> generators;
};

namespace detail {

inline Matrix block_antidiagonal(const Matrix& top_right, const Matrix& bottom_left) {
    Matrix m(16, 16);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) {
            m(r, c + 8) = top_right(r, c);
            m(r + 8, c) = bottom_left(r, c);
        }
    return m;
}

}  // namespace detail

inline RepGenerators build_rep(RepName name) {
    switch (name) {
        case RepName::gamma7: {
            RepGenerators rep{name, Signature(0, 7), {}};
            for (int k = 1; k <= 7; ++k)
                rep.generators.push_back(left_mult_matrix(Octonion::unit(k)));
            return rep;
        }
        case RepName::gamma6: {
            RepGenerators rep{name, Signature(0, 6), {}};
            for (int k = 1; k <= 6; ++k)
                rep.generators.push_back(
                    left_mult_matrix(Octonion::unit(k) * Octonion::unit(7)));
            return rep;
        }
        default: {
            RepGenerators rep{name, Signature(8, 0), {}};
            for (int k = 0; k <= 7; ++k) {
                const Octonion u = Octonion::unit(k);
                rep.generators.push_back(detail::block_antidiagonal(
                    left_mult_matrix(u), left_mult_matrix(conjugate(u))));
            }
            return rep;
        }
    }
}

// M_j M_k + M_k M_j = 2 s_j delta_jk I, evaluated exactly for every pair.
inline CheckResult check_clifford_relations(const RepGenerators& rep) {
    const std::size_t n = rep.generators.size();
    if (n == 0 || n != static_cast<std::size_t>(rep.signature.dim()))
        throw std::invalid_argument("check_clifford_relations: generator count != signature dimension");

    const std::string name = std::string("rep.") + to_string(rep.name) + "_relations";
    const int sq = rep.signature.q == 0 ? +1 : -1;
    const std::string claim =
        std::to_string(n) + " generators of size " +
        std::to_string(rep.generators.front().rows()) + "x" +
        std::to_string(rep.generators.front().cols()) +
        " pairwise anticommute and square to " + (sq > 0 ? "+I" : "-I");

    FirstWitness fw;
    const std::size_t dim = rep.generators.front().rows();
    const Matrix id = Matrix::identity(dim);
    const Matrix zero(dim, dim);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j; k < n; ++k) {
            const Matrix sum = rep.generators[j] * rep.generators[k] +
                               rep.generators[k] * rep.generators[j];
            const int s = rep.signature.square_sign(static_cast<int>(j) + 1);
            const Matrix want = (j == k) ? Rational(2 * s) * id : zero;
            fw.require(sum == want, [&] {
                const auto pos = first_difference(sum, want);
                return Witness{
                    "generators (" + std::to_string(j) + ", " + std::to_string(k) +
                        "), entry (" + std::to_string(pos->first) + ", " +
                        std::to_string(pos->second) + ")",
                    sum(pos->first, pos->second).str(),
                    want(pos->first, pos->second).str(),
                };
            });
        }
    }
    return fw.as_check(name, claim);
}

// Verifies that the images of the Cl(p, q) generators under embed_even
// satisfy the source relations inside the target algebra and are even.
inline CheckResult check_embedding_hom(int p, int q, EmbedVariant variant) {
    const Signature src(p, q);
    const std::string name = std::string("clifford.embed_") + to_string(variant) + "_cl_" +
                             std::to_string(p) + "_" + std::to_string(q);
    const std::string claim =
        std::string("generator images under ") + to_string(variant) + " from Cl(" +
        std::to_string(p) + "," + std::to_string(q) +
        ") are even, anticommute, and keep their squares";

    const int n = src.dim();
    std::vector<Multivector> img;
    img.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        img.push_back(embed_even(Multivector::generator(src, k), variant));
    const Signature target = img.empty()
                                 ? (variant == EmbedVariant::raise_q ? Signature(p, q + 1)
                                                                     : Signature(q + 1, p))
                                 : img.front().signature();

    FirstWitness fw;
    for (int k = 0; k < n; ++k) {
        fw.require(is_even(img[static_cast<std::size_t>(k)]), [&] {
            return Witness{"image of e" + std::to_string(k + 1),
                           to_string(img[static_cast<std::size_t>(k)]), "an even multivector"};
        });
    }
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) {
            const Multivector& a = img[static_cast<std::size_t>(j)];
            const Multivector& b = img[static_cast<std::size_t>(k)];
            const Multivector sum = a * b + b * a;
            const Multivector want =
                (j == k) ? Multivector::scalar(target, Rational(2 * src.square_sign(j + 1)))
                         : Multivector(target);
            fw.require(sum == want, [&] {
                return Witness{
                    "images of (e" + std::to_string(j + 1) + ", e" + std::to_string(k + 1) + ")",
                    to_string(sum), to_string(want)};
            });
        }
    }
    return fw.as_check(name, claim);
}

}  // namespace octo
