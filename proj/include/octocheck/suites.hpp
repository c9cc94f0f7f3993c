#pragma once

// The named verification suites. Every suite is a pure function of
// (seed, trials): exhaustive sweeps decide the identities, seeded samples
// add non-basis coverage on top.

#include "octocheck/actions.hpp"
#include "octocheck/check.hpp"
#include "octocheck/clifford.hpp"
#include "octocheck/linalg.hpp"
#include "octocheck/octonion.hpp"
#include "octocheck/orbit.hpp"
#include "octocheck/proof_steps.hpp"
#include "octocheck/report.hpp"
#include "octocheck/representations.hpp"
#include "octocheck/sampling.hpp"

#include <string>
#include <vector>

namespace octo {

namespace detail {

inline Witness octonion_pair_witness(std::string input, const Octonion& got,
                                     const Octonion& expected) {
    return Witness{std::move(input), to_string(got), to_string(expected)};
}

inline Multivector random_multivector(SampleGen& gen, const Signature& sig, int terms) {
    Multivector m(sig);
    const BladeMask top = static_cast<BladeMask>((1u << sig.dim()) - 1u);
    for (int i = 0; i < terms; ++i) {
        const BladeMask mask = static_cast<BladeMask>(gen.next_u64() & top);
        m = m + Multivector::blade(sig, mask, gen.next_rational());
    }
    return m;
}

}  // namespace detail

inline std::vector<CheckResult> run_table_suite(const SuiteConfig&) {
    std::vector<CheckResult> out;
    const MultTable& tab = MultTable::instance();

    {
        FirstWitness fw;
        const MultTable::Data gen = MultTable::generate();
        const MultTable::Data& lit = MultTable::literal();
        for (int k = 0; k < 8; ++k)
            for (int l = 0; l < 8; ++l)
                fw.require(gen.sign[k][l] == lit.sign[k][l] && gen.index[k][l] == lit.index[k][l],
                           [&] {
                               return Witness{
                                   "entry (" + std::to_string(k) + ", " + std::to_string(l) + ")",
                                   std::to_string(gen.sign[k][l] * gen.index[k][l]),
                                   std::to_string(lit.sign[k][l] * lit.index[k][l])};
                           });
        out.push_back(fw.as_check("table.construction_crosscheck",
                                  "table generated from the seven triples matches the literal table"));
    }

    {
        FirstWitness fw;
        for (int k = 0; k < 8; ++k)
            for (int l = 0; l < 8; ++l) {
                const Octonion got = Octonion::unit(k) * Octonion::unit(l);
                const BasisProduct p = tab.product(k, l);
                Octonion want = Octonion::unit(p.index);
                if (p.sign < 0)
                    want = -want;
                fw.require(got == want, [&] {
                    return detail::octonion_pair_witness(
                        basis_name(k) + " * " + basis_name(l), got, want);
                });
            }
        out.push_back(fw.as_check("table.unit_products",
                                  "all 64 ordered basis products match the table"));
    }

    {
        FirstWitness fw;
        for (int k = 0; k < 8; ++k) {
            const Octonion x = Octonion::unit(k);
            const Octonion e = Octonion::unit(0);
            fw.require(e * x == x && x * e == x, [&] {
                return detail::octonion_pair_witness("x = " + basis_name(k), e * x, x);
            });
        }
        out.push_back(fw.as_check("table.identity_element", "i0 is a two-sided identity"));
    }

    {
        FirstWitness fw;
        const Octonion minus_one = -Octonion::unit(0);
        for (int k = 1; k < 8; ++k) {
            const Octonion got = Octonion::unit(k) * Octonion::unit(k);
            fw.require(got == minus_one, [&] {
                return detail::octonion_pair_witness("k = " + std::to_string(k), got, minus_one);
            });
        }
        out.push_back(fw.as_check("table.imaginary_squares", "ik ik = -1 for k = 1..7"));
    }

    {
        FirstWitness fw;
        for (int k = 1; k < 8; ++k)
            for (int l = 1; l < 8; ++l) {
                if (k == l)
                    continue;
                const Octonion got = Octonion::unit(k) * Octonion::unit(l);
                const Octonion want = -(Octonion::unit(l) * Octonion::unit(k));
                fw.require(got == want, [&] {
                    return detail::octonion_pair_witness(
                        basis_name(k) + " * " + basis_name(l), got, want);
                });
            }
        out.push_back(fw.as_check("table.antisymmetry",
                                  "ik il = -(il ik) for all 42 ordered pairs of distinct k, l >= 1"));
    }

    return out;
}

inline std::vector<CheckResult> run_identities_suite(const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    SampleGen gen = SampleGen::for_suite(cfg.seed, "identities");

    {
        FirstWitness m1, m2, m3;
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b)
                for (int c = 0; c < 8; ++c) {
                    const MoufangResiduals r = moufang_residuals(
                        Octonion::unit(a), Octonion::unit(b), Octonion::unit(c));
                    const std::string input = "(x, y, z) = (" + basis_name(a) + ", " +
                                              basis_name(b) + ", " + basis_name(c) + ")";
                    m1.require(r.m1.is_zero(), [&] {
                        return Witness{input, to_string(r.m1), to_string(Octonion())};
                    });
                    m2.require(r.m2.is_zero(), [&] {
                        return Witness{input, to_string(r.m2), to_string(Octonion())};
                    });
                    m3.require(r.m3.is_zero(), [&] {
                        return Witness{input, to_string(r.m3), to_string(Octonion())};
                    });
                }
        out.push_back(m1.as_check("identities.moufang_m1_basis",
                                  "(x y x) z = x (y (x z)) on all 512 basis triples"));
        out.push_back(m2.as_check("identities.moufang_m2_basis",
                                  "z (x y x) = ((z x) y) x on all 512 basis triples"));
        out.push_back(m3.as_check("identities.moufang_m3_basis",
                                  "(x (y z)) x = (x y) (z x) on all 512 basis triples"));
    }

    {
        FirstWitness m1, m2, m3;
        for (int t = 0; t < cfg.trials; ++t) {
            const Octonion x = gen.next_octonion(), y = gen.next_octonion(),
                           z = gen.next_octonion();
            const MoufangResiduals r = moufang_residuals(x, y, z);
            const auto input = [&] {
                return "(x, y, z) = (" + to_string(x) + ", " + to_string(y) + ", " +
                       to_string(z) + ")";
            };
            m1.require(r.m1.is_zero(),
                       [&] { return Witness{input(), to_string(r.m1), to_string(Octonion())}; });
            m2.require(r.m2.is_zero(),
                       [&] { return Witness{input(), to_string(r.m2), to_string(Octonion())}; });
            m3.require(r.m3.is_zero(),
                       [&] { return Witness{input(), to_string(r.m3), to_string(Octonion())}; });
        }
        const std::string n = std::to_string(cfg.trials);
        out.push_back(m1.as_check("identities.moufang_m1_random",
                                  "(x y x) z = x (y (x z)) on " + n + " seeded rational triples"));
        out.push_back(m2.as_check("identities.moufang_m2_random",
                                  "z (x y x) = ((z x) y) x on " + n + " seeded rational triples"));
        out.push_back(m3.as_check("identities.moufang_m3_random",
                                  "(x (y z)) x = (x y) (z x) on " + n + " seeded rational triples"));
    }

    {
        FirstWitness fw;
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                const Octonion x = Octonion::unit(a), y = Octonion::unit(b);
                const Octonion left = associator(x, x, y);
                const Octonion right = associator(y, x, x);
                fw.require(left.is_zero() && right.is_zero(), [&] {
                    return Witness{"(x, y) = (" + basis_name(a) + ", " + basis_name(b) + ")",
                                   to_string(left.is_zero() ? right : left),
                                   to_string(Octonion())};
                });
            }
        out.push_back(fw.as_check("identities.alternativity_basis",
                                  "[x, x, y] = [y, x, x] = 0 on all basis pairs"));
    }

    {
        FirstWitness fw;
        for (int t = 0; t < cfg.trials; ++t) {
            const Octonion x = gen.next_octonion(), y = gen.next_octonion();
            const Octonion left = associator(x, x, y);
            const Octonion right = associator(y, x, x);
            fw.require(left.is_zero() && right.is_zero(), [&] {
                return Witness{"(x, y) = (" + to_string(x) + ", " + to_string(y) + ")",
                               to_string(left.is_zero() ? right : left), to_string(Octonion())};
            });
        }
        out.push_back(fw.as_check("identities.alternativity_random",
                                  "[x, x, y] = [y, x, x] = 0 on " + std::to_string(cfg.trials) +
                                      " seeded rational pairs"));
    }

    {
        FirstWitness fw;
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                const Octonion x = Octonion::unit(a), y = Octonion::unit(b);
                const Octonion lhs = (x * y) * x, rhs = x * (y * x);
                fw.require(lhs == rhs, [&] {
                    return detail::octonion_pair_witness(
                        "(x, y) = (" + basis_name(a) + ", " + basis_name(b) + ")", lhs, rhs);
                });
            }
        out.push_back(fw.as_check("identities.flexibility_basis",
                                  "(x y) x = x (y x) on all basis pairs"));
    }

    {
        FirstWitness fw;
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                const Octonion x = Octonion::unit(a), y = Octonion::unit(b);
                const Octonion lhs = conjugate(x * y);
                const Octonion rhs = conjugate(y) * conjugate(x);
                fw.require(lhs == rhs, [&] {
                    return detail::octonion_pair_witness(
                        "(x, y) = (" + basis_name(a) + ", " + basis_name(b) + ")", lhs, rhs);
                });
            }
        out.push_back(fw.as_check("identities.conjugation_antihom",
                                  "conj(x y) = conj(y) conj(x) on all basis pairs"));
    }

    {
        const Octonion got = associator(Octonion::unit(1), Octonion::unit(2), Octonion::unit(4));
        const Octonion want = Rational(2) * Octonion::unit(7);
        FirstWitness fw;
        fw.require(got == want, [&] {
            return detail::octonion_pair_witness("(x, y, z) = (i1, i2, i4)", got, want);
        });
        out.push_back(fw.as_check("identities.nonassociativity_witness",
                                  "(i1 i2) i4 - i1 (i2 i4) = 2 i7"));
    }

    {
        FirstWitness fw;
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                const Octonion x = Octonion::unit(a), y = Octonion::unit(b);
                const Rational lhs = norm_sq(x * y);
                const Rational rhs = norm_sq(x) * norm_sq(y);
                fw.require(lhs == rhs, [&] {
                    return Witness{"(x, y) = (" + basis_name(a) + ", " + basis_name(b) + ")",
                                   lhs.str(), rhs.str()};
                });
            }
        out.push_back(fw.as_check("identities.norm_multiplicative_basis",
                                  "|x y|^2 = |x|^2 |y|^2 on all basis pairs"));
    }

    {
        FirstWitness fw;
        for (int t = 0; t < cfg.trials; ++t) {
            const Octonion x = gen.next_octonion(), y = gen.next_octonion();
            const Rational lhs = norm_sq(x * y);
            const Rational rhs = norm_sq(x) * norm_sq(y);
            fw.require(lhs == rhs, [&] {
                return Witness{"(x, y) = (" + to_string(x) + ", " + to_string(y) + ")", lhs.str(),
                               rhs.str()};
            });
        }
        out.push_back(fw.as_check("identities.norm_multiplicative_random",
                                  "|x y|^2 = |x|^2 |y|^2 on " + std::to_string(cfg.trials) +
                                      " seeded rational pairs"));
    }

    {
        FirstWitness fw;
        const Octonion one = Octonion::unit(0);
        for (int t = 0; t < cfg.trials; ++t) {
            const Octonion x = gen.next_nonzero_octonion();
            const Octonion lhs = x * inverse(x), rhs = inverse(x) * x;
            fw.require(lhs == one && rhs == one, [&] {
                return detail::octonion_pair_witness("x = " + to_string(x),
                                                     lhs == one ? rhs : lhs, one);
            });
        }
        out.push_back(fw.as_check("identities.inverse_roundtrip_random",
                                  "x conj(x) / |x|^2 = 1 from both sides on " +
                                      std::to_string(cfg.trials) + " seeded nonzero samples"));
    }

    return out;
}

inline std::vector<CheckResult> run_clifford_suite(const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    SampleGen gen = SampleGen::for_suite(cfg.seed, "clifford");

    {
        FirstWitness fw;
        for (int p = 0; p <= 4; ++p)
            for (int q = 0; p + q <= 4; ++q) {
                const Signature sig(p, q);
                const int n = 1 << sig.dim();
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        for (int c = 0; c < n; ++c) {
                            const Multivector ma = Multivector::blade(sig, static_cast<BladeMask>(a));
                            const Multivector mb = Multivector::blade(sig, static_cast<BladeMask>(b));
                            const Multivector mc = Multivector::blade(sig, static_cast<BladeMask>(c));
                            const Multivector lhs = (ma * mb) * mc;
                            const Multivector rhs = ma * (mb * mc);
                            fw.require(lhs == rhs, [&] {
                                return Witness{"Cl(" + std::to_string(p) + "," + std::to_string(q) +
                                                   "), blades (" + blade_name(static_cast<BladeMask>(a)) +
                                                   ", " + blade_name(static_cast<BladeMask>(b)) + ", " +
                                                   blade_name(static_cast<BladeMask>(c)) + ")",
                                               to_string(lhs), to_string(rhs)};
                            });
                        }
            }
        out.push_back(fw.as_check("clifford.assoc_exhaustive_low_dim",
                                  "geometric product associative on all blade triples, p + q <= 4"));
    }

    {
        FirstWitness fw;
        for (const Signature& sig : {Signature(0, 7), Signature(8, 0), Signature(3, 2)}) {
            for (int k = 1; k <= sig.dim(); ++k) {
                const Multivector e = Multivector::generator(sig, k);
                const Multivector got = e * e;
                const Multivector want =
                    Multivector::scalar(sig, Rational(sig.square_sign(k)));
                fw.require(got == want, [&] {
                    return Witness{"Cl(" + std::to_string(sig.p) + "," + std::to_string(sig.q) +
                                       "), e" + std::to_string(k),
                                   to_string(got), to_string(want)};
                });
            }
        }
        out.push_back(fw.as_check("clifford.generator_squares",
                                  "e_k^2 = +1 for k <= p and -1 otherwise"));
    }

    {
        FirstWitness fw;
        for (const Signature& sig : {Signature(0, 7), Signature(8, 0), Signature(3, 2)}) {
            for (int j = 1; j <= sig.dim(); ++j)
                for (int k = j + 1; k <= sig.dim(); ++k) {
                    const Multivector ej = Multivector::generator(sig, j);
                    const Multivector ek = Multivector::generator(sig, k);
                    const Multivector sum = ej * ek + ek * ej;
                    fw.require(sum.is_zero(), [&] {
                        return Witness{"Cl(" + std::to_string(sig.p) + "," + std::to_string(sig.q) +
                                           "), (e" + std::to_string(j) + ", e" + std::to_string(k) +
                                           ")",
                                       to_string(sum), "0"};
                    });
                }
        }
        out.push_back(fw.as_check("clifford.generator_anticommute",
                                  "e_j e_k + e_k e_j = 0 for j != k"));
    }

    {
        FirstWitness fw;
        const Signature sig(0, 7);
        for (int t = 0; t < cfg.trials; ++t) {
            const Multivector m = detail::random_multivector(gen, sig, 6);
            const Multivector once = even_part(m);
            const Multivector twice = even_part(once);
            fw.require(once == twice && is_even(once), [&] {
                return Witness{"m = " + to_string(m), to_string(twice), to_string(once)};
            });
        }
        out.push_back(fw.as_check("clifford.even_part_idempotent",
                                  "even_part is idempotent and lands in the even subspace"));
    }

    {
        FirstWitness fw;
        const Signature sig(2, 3);
        const int n = 1 << sig.dim();
        for (int a = 0; a < n; ++a) {
            if (blade_grade(static_cast<BladeMask>(a)) % 2 != 0)
                continue;
            for (int b = 0; b < n; ++b) {
                if (blade_grade(static_cast<BladeMask>(b)) % 2 != 0)
                    continue;
                const Multivector prod = Multivector::blade(sig, static_cast<BladeMask>(a)) *
                                         Multivector::blade(sig, static_cast<BladeMask>(b));
                fw.require(is_even(prod), [&] {
                    return Witness{"blades (" + blade_name(static_cast<BladeMask>(a)) + ", " +
                                       blade_name(static_cast<BladeMask>(b)) + ")",
                                   to_string(prod), "an even multivector"};
                });
            }
        }
        out.push_back(fw.as_check("clifford.even_product_closed",
                                  "products of even blades are even (Cl(2,3) exhaustive)"));
    }

    for (EmbedVariant variant : {EmbedVariant::raise_q, EmbedVariant::raise_p}) {
        out.push_back(check_embedding_hom(0, 6, variant));
        out.push_back(check_embedding_hom(0, 7, variant));
        out.push_back(check_embedding_hom(8, 0, variant));
    }

    {
        FirstWitness fw;
        const Signature sig(0, 6);
        for (int t = 0; t < cfg.trials / 4 + 1; ++t) {
            const Multivector m = detail::random_multivector(gen, sig, 4);
            for (EmbedVariant variant : {EmbedVariant::raise_q, EmbedVariant::raise_p}) {
                const Multivector img = embed_even(m, variant);
                fw.require(is_even(img), [&] {
                    return Witness{std::string(to_string(variant)) + " of m = " + to_string(m),
                                   to_string(img), "an even multivector"};
                });
            }
        }
        const Multivector three = Multivector::scalar(sig, Rational(3));
        const Multivector img = embed_even(three, EmbedVariant::raise_q);
        fw.require(img.coeff(0) == Rational(3) && img.terms().size() == 1, [&] {
            return Witness{"scalar 3", to_string(img), "3"};
        });
        out.push_back(fw.as_check("clifford.embed_images_even",
                                  "embed_even sends multivectors to even multivectors and fixes scalars"));
    }

    return out;
}

inline std::vector<CheckResult> run_representations_suite(const SuiteConfig&) {
    std::vector<CheckResult> out;
    const RepGenerators g6 = build_rep(RepName::gamma6);
    const RepGenerators g7 = build_rep(RepName::gamma7);
    const RepGenerators g8 = build_rep(RepName::gamma8);

    out.push_back(check_clifford_relations(g6));
    out.push_back(check_clifford_relations(g7));
    out.push_back(check_clifford_relations(g8));

    {
        FirstWitness fw;
        fw.require(g7.generators.size() == 7, [&] {
            return Witness{"generator count", std::to_string(g7.generators.size()), "7"};
        });
        for (const Matrix& m : g7.generators)
            fw.require(m.rows() == 8 && m.cols() == 8, [&] {
                return Witness{"generator shape",
                               std::to_string(m.rows()) + "x" + std::to_string(m.cols()), "8x8"};
            });
        out.push_back(fw.as_check("rep.gamma7_shape", "seven 8x8 generators"));
    }

    {
        // First generator of the six-generator family: left multiplication
        // by i1 i7 = -i6.
        const Matrix want = left_mult_matrix(-Octonion::unit(6));
        FirstWitness fw;
        fw.require(g6.generators.front() == want, [&] {
            const auto pos = first_difference(g6.generators.front(), want);
            return Witness{"entry (" + std::to_string(pos->first) + ", " +
                               std::to_string(pos->second) + ")",
                           g6.generators.front()(pos->first, pos->second).str(),
                           want(pos->first, pos->second).str()};
        });
        out.push_back(fw.as_check("rep.gamma6_first_generator",
                                  "the first generator is left multiplication by i1 i7 = -i6"));
    }

    {
        // Generator 0 of the eight-generator family swaps the two 8-blocks.
        Matrix want(16, 16);
        for (std::size_t r = 0; r < 8; ++r) {
            want(r, r + 8) = 1;
            want(r + 8, r) = 1;
        }
        FirstWitness fw;
        fw.require(g8.generators.front() == want, [&] {
            const auto pos = first_difference(g8.generators.front(), want);
            return Witness{"entry (" + std::to_string(pos->first) + ", " +
                               std::to_string(pos->second) + ")",
                           g8.generators.front()(pos->first, pos->second).str(),
                           want(pos->first, pos->second).str()};
        });
        out.push_back(fw.as_check("rep.gamma8_block_swap",
                                  "generator 0 is the block matrix [[0, I], [I, 0]]"));
    }

    {
        FirstWitness fw;
        for (std::size_t j = 0; j < g8.generators.size(); ++j)
            for (std::size_t k = j + 1; k < g8.generators.size(); ++k) {
                const Matrix prod = g8.generators[j] * g8.generators[k];
                bool off_diag_zero = true;
                for (std::size_t r = 0; r < 8 && off_diag_zero; ++r)
                    for (std::size_t c = 0; c < 8; ++c)
                        if (!prod(r, c + 8).is_zero() || !prod(r + 8, c).is_zero()) {
                            off_diag_zero = false;
                            break;
                        }
                fw.require(off_diag_zero, [&] {
                    return Witness{"generators (" + std::to_string(j) + ", " + std::to_string(k) + ")",
                                   "off-diagonal 8x8 blocks nonzero", "block-diagonal product"};
                });
            }
        out.push_back(fw.as_check("rep.gamma8_even_products_block_diagonal",
                                  "products of two distinct generators are block-diagonal"));
    }

    return out;
}

inline std::vector<CheckResult> run_lemma_field_suite(const SuiteConfig&) {
    std::vector<CheckResult> out = verify_proof_steps(ProofLemma::field);

    for (int k = 1; k <= 6; ++k)
        out.push_back(check_mixed_identity(k));

    // Spin(k)-style generator pairs acting by conjugation: for every
    // 2 <= k <= 6 and every m with k < m <= 7, ask whether right
    // multiplication by i_m commutes with the generators. Two realizations
    // of the generators are exercised: A-form pairs and reflection pairs.
    for (int k = 2; k <= 6; ++k) {
        std::vector<GroupWord> a_pairs, reflect_pairs;
        for (int a = 1; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b) {
                a_pairs.push_back(GroupWord{SandwichMap::action_a(a), SandwichMap::action_a(b)});
                reflect_pairs.push_back(
                    GroupWord{SandwichMap::reflect_basis(a), SandwichMap::reflect_basis(b)});
            }
        for (int m = k + 1; m <= 7; ++m) {
            out.push_back(check_field_equivariance(
                a_pairs, m,
                "field.equivariance.spin" + std::to_string(k) + ".m" + std::to_string(m) +
                    ".a_pairs"));
            out.push_back(check_field_equivariance(
                reflect_pairs, m,
                "field.equivariance.spin" + std::to_string(k) + ".m" + std::to_string(m) +
                    ".reflect_pairs"));
        }
    }

    return out;
}

inline std::vector<CheckResult> run_orbits_suite(const SuiteConfig& cfg) {
    std::vector<CheckResult> out = check_orbit_geometry(cfg.seed);

    const std::vector<CheckResult> tc = verify_proof_steps(ProofLemma::three_components);
    out.insert(out.end(), tc.begin(), tc.end());

    out.push_back(check_parallelizability(Octonion::unit(0), "parallel.frame_at_i0"));
    out.push_back(check_parallelizability(
        Rational(3, 5) * Octonion::unit(0) + Rational(4, 5) * Octonion::unit(2),
        "parallel.frame_at_slice_point"));
    out.push_back(check_parallelizability(Rational(2) * Octonion::unit(1),
                                          "parallel.frame_at_scaled_point"));

    {
        SampleGen gen = SampleGen::for_suite(cfg.seed, "parallel");
        FirstWitness fw;
        for (int t = 0; t < 64; ++t) {
            const Octonion p = gen.next_nonzero_octonion();
            const CheckResult one = check_parallelizability(p, "inner");
            fw.require(one.status == CheckStatus::pass,
                       [&] { return *one.witness; });
        }
        out.push_back(fw.as_check("parallel.frame_at_random_points",
                                  "the products p ik form an orthogonal frame with Gram |p|^2 I "
                                  "on 64 seeded nonzero points"));
    }

    return out;
}

inline std::vector<CheckResult> run_checks(const SuiteConfig& cfg) {
    cfg.validate();
    switch (cfg.suite) {
        case SuiteName::table: return run_table_suite(cfg);
        case SuiteName::identities: return run_identities_suite(cfg);
        case SuiteName::clifford: return run_clifford_suite(cfg);
        case SuiteName::representations: return run_representations_suite(cfg);
        case SuiteName::lemma_field: return run_lemma_field_suite(cfg);
        case SuiteName::orbits: return run_orbits_suite(cfg);
        default: {
            std::vector<CheckResult> out;
            for (SuiteName s : {SuiteName::table, SuiteName::identities, SuiteName::clifford,
                                SuiteName::representations, SuiteName::lemma_field,
                                SuiteName::orbits}) {
                SuiteConfig sub = cfg;
                sub.suite = s;
                const std::vector<CheckResult> checks = run_checks(sub);
                out.insert(out.end(), checks.begin(), checks.end());
            }
            return out;
        }
    }
}

inline Report run_suite(const SuiteConfig& cfg) {
    return Report::build(cfg.suite, cfg.seed, run_checks(cfg));
}

}  // namespace octo
