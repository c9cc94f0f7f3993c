#pragma once

// Step-by-step verification of two identity chains about the sandwich maps.
//
// The "field" chain reduces actionB(k) applied to p i_7 into a closed form,
// one rewrite at a time, with every step decided exhaustively on basis
// octonions (the identities are multilinear, so basis sweeps are complete
// decision procedures). Two deliberately-open comparisons ride along as
// finding-producing checks: actionA vs actionB as linear maps, and the two
// pure-form equivariance readings.
//
// The "three_components" chain covers the corresponding slice geometry: the
// poles i_0 and i_7 stay fixed, exact cos/sin slices decompose coordinate-
// wise, and the unit spheres orthogonal to the poles map to themselves.

#include "octocheck/actions.hpp"
#include "octocheck/check.hpp"
#include "octocheck/linalg.hpp"
#include "octocheck/octonion.hpp"

#include <string>
#include <utility>
#include <vector>

namespace octo {

enum class ProofLemma { field, three_components };

namespace detail {

// Diagonal 8x8 matrix with -1 at the listed coordinates and +1 elsewhere.
inline Matrix negating_diag(std::initializer_list<int> negated) {
    Matrix m = Matrix::identity(8);
    for (int n : negated)
        m(static_cast<std::size_t>(n), static_cast<std::size_t>(n)) = Rational(-1);
    return m;
}

inline Witness octonion_witness(std::string input, const Octonion& got, const Octonion& expected) {
    return Witness{std::move(input), to_string(got), to_string(expected)};
}

// The two inputs every slice check uses: exact (cos, sin) pairs.
inline const std::vector<std::pair<Rational, Rational>>& unit_pairs() {
    static const std::vector<std::pair<Rational, Rational>> pairs = {
        {Rational(3, 5), Rational(4, 5)},
        {Rational(5, 13), Rational(12, 13)},
        {Rational(-8, 17), Rational(15, 17)},
    };
    return pairs;
}

inline std::vector<CheckResult> field_steps() {
    std::vector<CheckResult> out;
    const Octonion i7 = Octonion::unit(7);

    {
        FirstWitness fw;
        Matrix got(8, 8);
        for (int n = 0; n < 8; ++n) {
            const Octonion col = sandwich_same(i7, Octonion::unit(n));
            for (int r = 0; r < 8; ++r)
                got(static_cast<std::size_t>(r), static_cast<std::size_t>(n)) = col.coeff(r);
        }
        fw.require(got == negating_diag({0, 7}), [&] {
            const auto pos = first_difference(got, negating_diag({0, 7}));
            return Witness{"matrix entry (" + std::to_string(pos->first) + ", " +
                               std::to_string(pos->second) + ")",
                           got(pos->first, pos->second).str(),
                           negating_diag({0, 7})(pos->first, pos->second).str()};
        });
        out.push_back(fw.as_check("field.step01_inner_sandwich_i7",
                                  "i7 p i7 negates exactly coordinates 0 and 7"));
    }

    {
        FirstWitness fw;
        for (int k = 1; k <= 6; ++k) {
            const Matrix want = negating_diag({k, 7});
            const SandwichMap a = SandwichMap::action_a(k);
            const Matrix& got = a.matrix();
            fw.require(got == want, [&] {
                const auto pos = first_difference(got, want);
                return Witness{"k = " + std::to_string(k) + ", entry (" +
                                   std::to_string(pos->first) + ", " + std::to_string(pos->second) + ")",
                               got(pos->first, pos->second).str(), want(pos->first, pos->second).str()};
            });
        }
        out.push_back(fw.as_check("field.step02_a_form_closed",
                                  "ik ((i7 p i7) ik) negates exactly coordinates k and 7"));
    }

    {
        FirstWitness fw;
        for (int j = 1; j <= 6; ++j)
            for (int k = 1; k <= 6; ++k) {
                if (j == k)
                    continue;
                const Matrix got =
                    SandwichMap::action_a(j).matrix() * SandwichMap::action_a(k).matrix();
                const Matrix want = negating_diag({j, k});
                fw.require(got == want, [&] {
                    const auto pos = first_difference(got, want);
                    return Witness{"(j, k) = (" + std::to_string(j) + ", " + std::to_string(k) +
                                       "), entry (" + std::to_string(pos->first) + ", " +
                                       std::to_string(pos->second) + ")",
                                   got(pos->first, pos->second).str(),
                                   want(pos->first, pos->second).str()};
                });
            }
        out.push_back(fw.as_check("field.step03_a_pairs_closed",
                                  "composite of two A forms negates exactly coordinates j and k"));
    }

    {
        FirstWitness fw;
        for (int k = 1; k <= 6; ++k) {
            const Octonion got = SandwichMap::action_a(k).apply(i7);
            fw.require(got == -i7,
                       [&] { return octonion_witness("k = " + std::to_string(k), got, -i7); });
        }
        out.push_back(
            fw.as_check("field.step04_a_form_negates_i7", "ik ((i7 i7 i7) ik) = -i7 for k <= 6"));
    }

    {
        FirstWitness fw;
        for (int k = 1; k <= 6; ++k) {
            const Octonion got = SandwichMap::action_b(k).apply(i7);
            fw.require(got == -i7,
                       [&] { return octonion_witness("k = " + std::to_string(k), got, -i7); });
        }
        out.push_back(
            fw.as_check("field.step05_b_form_negates_i7", "((ik i7) i7) (i7 ik) = -i7 for k <= 6"));
    }

    {
        FirstWitness fw;
        for (int j = 1; j <= 6; ++j)
            for (int k = 1; k <= 6; ++k) {
                if (j == k)
                    continue;
                const Octonion got =
                    SandwichMap::action_a(j).apply(SandwichMap::action_a(k).apply(i7));
                fw.require(got == i7, [&] {
                    return octonion_witness("(j, k) = (" + std::to_string(j) + ", " +
                                                std::to_string(k) + ")",
                                            got, i7);
                });
            }
        out.push_back(
            fw.as_check("field.step06_a_pairs_fix_i7", "composite of two A forms fixes i7"));
    }

    {
        FirstWitness fw;
        for (int j = 1; j <= 6; ++j)
            for (int k = 1; k <= 6; ++k) {
                if (j == k)
                    continue;
                const Octonion got =
                    SandwichMap::action_b(j).apply(SandwichMap::action_b(k).apply(i7));
                fw.require(got == i7, [&] {
                    return octonion_witness("(j, k) = (" + std::to_string(j) + ", " +
                                                std::to_string(k) + ")",
                                            got, i7);
                });
            }
        out.push_back(
            fw.as_check("field.step07_b_pairs_fix_i7", "composite of two B forms fixes i7"));
    }

    {
        // The two single-index forms are not the same linear map; recorded as
        // a finding with the first basis disagreement.
        FirstWitness fw;
        for (int k = 1; k <= 6; ++k)
            for (int n = 0; n < 8; ++n) {
                const Octonion a = SandwichMap::action_a(k).apply(Octonion::unit(n));
                const Octonion b = SandwichMap::action_b(k).apply(Octonion::unit(n));
                fw.require(a == b, [&] {
                    return octonion_witness(
                        "k = " + std::to_string(k) + ", x = " + basis_name(n), a, b);
                });
            }
        out.push_back(fw.as_check("field.step08_a_vs_b_forms",
                                  "ik ((i7 x i7) ik) compared with ((ik i7) x) (i7 ik)",
                                  CheckStatus::finding));
    }

    {
        FirstWitness fw;
        for (int k = 1; k <= 6; ++k) {
            const Octonion a = Octonion::unit(k);
            const Octonion ae = a * i7, ea = i7 * a;
            for (int n = 0; n < 8; ++n) {
                const Octonion p = Octonion::unit(n);
                const Octonion lhs = (ae * (p * i7)) * ea;
                const Octonion rhs = (ae * p) * (i7 * ea);
                fw.require(lhs == rhs, [&] {
                    return octonion_witness(
                        "k = " + std::to_string(k) + ", p = " + basis_name(n), lhs, rhs);
                });
            }
        }
        out.push_back(fw.as_check("field.step09_m3_rebracket",
                                  "((ik i7) (p i7)) (i7 ik) = ((ik i7) p) (i7 (i7 ik))"));
    }

    {
        FirstWitness fw;
        for (int k = 1; k <= 6; ++k) {
            const Octonion a = Octonion::unit(k);
            const Octonion ae = a * i7;
            const Octonion red = i7 * (i7 * a);
            fw.require(red == -a, [&] {
                return octonion_witness("k = " + std::to_string(k), red, -a);
            });
            for (int n = 0; n < 8; ++n) {
                const Octonion p = Octonion::unit(n);
                const Octonion lhs = (ae * p) * red;
                const Octonion rhs = -((ae * p) * a);
                fw.require(lhs == rhs, [&] {
                    return octonion_witness(
                        "k = " + std::to_string(k) + ", p = " + basis_name(n), lhs, rhs);
                });
            }
        }
        out.push_back(fw.as_check("field.step10_i7_square_reduction",
                                  "i7 (i7 ik) = -ik, so ((ik i7) p) (i7 (i7 ik)) = -((ik i7) p) ik"));
    }

    {
        FirstWitness fw;
        for (int k = 1; k <= 6; ++k) {
            const Octonion a = Octonion::unit(k);
            const Octonion ae = a * i7, ea = i7 * a;
            fw.require(ae == -ea, [&] {
                return octonion_witness("k = " + std::to_string(k), ae, -ea);
            });
            for (int n = 0; n < 8; ++n) {
                const Octonion p = Octonion::unit(n);
                const Octonion lhs = -((ae * p) * a);
                const Octonion rhs = (ea * p) * a;
                fw.require(lhs == rhs, [&] {
                    return octonion_witness(
                        "k = " + std::to_string(k) + ", p = " + basis_name(n), lhs, rhs);
                });
            }
        }
        out.push_back(fw.as_check("field.step11_anticommute_swap",
                                  "ik i7 = -(i7 ik), so -((ik i7) p) ik = ((i7 ik) p) ik"));
    }

    {
        FirstWitness fw;
        for (int k = 1; k <= 6; ++k) {
            const Octonion a = Octonion::unit(k);
            const Octonion ea = i7 * a;
            for (int n = 0; n < 8; ++n) {
                const Octonion p = Octonion::unit(n);
                const Octonion lhs = (ea * p) * a;
                const Octonion rhs = i7 * sandwich_same(a, p);
                fw.require(lhs == rhs, [&] {
                    return octonion_witness(
                        "k = " + std::to_string(k) + ", p = " + basis_name(n), lhs, rhs);
                });
            }
        }
        out.push_back(fw.as_check("field.step12_m2_rebracket",
                                  "((i7 ik) p) ik = i7 (ik p ik)"));
    }

    {
        FirstWitness fw;
        for (int k = 1; k <= 6; ++k) {
            const Matrix want = negating_diag({0, k});
            Matrix got(8, 8);
            for (int n = 0; n < 8; ++n) {
                const Octonion col = sandwich_same(Octonion::unit(k), Octonion::unit(n));
                for (int r = 0; r < 8; ++r)
                    got(static_cast<std::size_t>(r), static_cast<std::size_t>(n)) = col.coeff(r);
            }
            fw.require(got == want, [&] {
                const auto pos = first_difference(got, want);
                return Witness{"k = " + std::to_string(k) + ", entry (" +
                                   std::to_string(pos->first) + ", " + std::to_string(pos->second) + ")",
                               got(pos->first, pos->second).str(), want(pos->first, pos->second).str()};
            });
        }
        out.push_back(fw.as_check("field.step13_inner_sandwich_ik",
                                  "ik p ik negates exactly coordinates 0 and k"));
    }

    {
        FirstWitness fw;
        for (int k = 1; k <= 6; ++k) {
            const SandwichMap a = SandwichMap::action_a(k);
            for (int n = 0; n < 8; ++n) {
                const Octonion p = Octonion::unit(n);
                const Octonion lhs = i7 * sandwich_same(Octonion::unit(k), p);
                const Octonion rhs = -(a.apply(p) * i7);
                fw.require(lhs == rhs, [&] {
                    return octonion_witness(
                        "k = " + std::to_string(k) + ", p = " + basis_name(n), lhs, rhs);
                });
            }
        }
        out.push_back(fw.as_check("field.step14_final_right_mult_form",
                                  "i7 (ik p ik) = -(ik ((i7 p i7) ik)) i7"));
    }

    {
        FirstWitness fw;
        for (int j = 1; j <= 6; ++j)
            for (int k = 1; k <= 6; ++k) {
                if (j == k)
                    continue;
                const SandwichMap aj = SandwichMap::action_a(j), ak = SandwichMap::action_a(k);
                const SandwichMap bj = SandwichMap::action_b(j), bk = SandwichMap::action_b(k);
                for (int n = 0; n < 8; ++n) {
                    const Octonion p = Octonion::unit(n);
                    const Octonion lhs = bj.apply(bk.apply(p * i7));
                    const Octonion rhs = aj.apply(ak.apply(p)) * i7;
                    fw.require(lhs == rhs, [&] {
                        return octonion_witness("(j, k) = (" + std::to_string(j) + ", " +
                                                    std::to_string(k) + "), p = " + basis_name(n),
                                                lhs, rhs);
                    });
                }
            }
        out.push_back(fw.as_check("field.step15_pair_conclusion",
                                  "B pairs on p i7 equal A pairs on p followed by right i7"));
    }

    {
        FirstWitness fw;
        for (int j = 1; j <= 6; ++j)
            for (int k = j + 1; k <= 6; ++k) {
                const SandwichMap aj = SandwichMap::action_a(j), ak = SandwichMap::action_a(k);
                for (int n = 0; n < 8; ++n) {
                    const Octonion p = Octonion::unit(n);
                    const Octonion lhs = aj.apply(ak.apply(p * i7));
                    const Octonion rhs = aj.apply(ak.apply(p)) * i7;
                    fw.require(lhs == rhs, [&] {
                        return octonion_witness("(j, k) = (" + std::to_string(j) + ", " +
                                                    std::to_string(k) + "), p = " + basis_name(n),
                                                lhs, rhs);
                    });
                }
            }
        out.push_back(fw.as_check("field.step16_equivariance_pure_a",
                                  "A pairs commuting with right i7 multiplication",
                                  CheckStatus::finding));
    }

    {
        FirstWitness fw;
        for (int j = 1; j <= 6; ++j)
            for (int k = j + 1; k <= 6; ++k) {
                const SandwichMap bj = SandwichMap::action_b(j), bk = SandwichMap::action_b(k);
                for (int n = 0; n < 8; ++n) {
                    const Octonion p = Octonion::unit(n);
                    const Octonion lhs = bj.apply(bk.apply(p * i7));
                    const Octonion rhs = bj.apply(bk.apply(p)) * i7;
                    fw.require(lhs == rhs, [&] {
                        return octonion_witness("(j, k) = (" + std::to_string(j) + ", " +
                                                    std::to_string(k) + "), p = " + basis_name(n),
                                                lhs, rhs);
                    });
                }
            }
        out.push_back(fw.as_check("field.step17_equivariance_pure_b",
                                  "B pairs commuting with right i7 multiplication",
                                  CheckStatus::finding));
    }

    return out;
}

inline std::vector<CheckResult> three_components_steps() {
    std::vector<CheckResult> out;
    const Octonion i0 = Octonion::unit(0);
    const Octonion i7 = Octonion::unit(7);

    {
        FirstWitness fw;
        for (int k = 1; k <= 6; ++k) {
            const Octonion got = SandwichMap::action_a(k).apply(i0);
            fw.require(got == i0,
                       [&] { return octonion_witness("k = " + std::to_string(k), got, i0); });
        }
        out.push_back(fw.as_check("threec.step01_pole_i0_fixed",
                                  "ik ((i7 i0 i7) ik) = i0 for k <= 6"));
    }

    {
        FirstWitness fw;
        for (int k = 1; k <= 6; ++k) {
            const SandwichMap a = SandwichMap::action_a(k);
            for (const auto& [c, s] : unit_pairs())
                for (int n = 1; n <= 7; ++n) {
                    const Octonion x = Octonion::unit(n);
                    const Octonion lhs = a.apply(c * i0 + s * x);
                    const Octonion rhs = c * i0 + s * a.apply(x);
                    fw.require(lhs == rhs, [&] {
                        return octonion_witness("k = " + std::to_string(k) + ", (c, s) = (" +
                                                    c.str() + ", " + s.str() + "), x = " +
                                                    basis_name(n),
                                                lhs, rhs);
                    });
                }
        }
        out.push_back(fw.as_check("threec.step02_slice_decomposition_m7",
                                  "phi(c i0 + s x) = c i0 + s phi(x) on exact unit pairs"));
    }

    {
        FirstWitness fw;
        for (int k = 1; k <= 6; ++k) {
            const SandwichMap a = SandwichMap::action_a(k);
            for (int n = 1; n <= 7; ++n) {
                const Octonion y = a.apply(Octonion::unit(n));
                fw.require(y.is_imaginary() && norm_sq(y) == Rational(1), [&] {
                    return Witness{"k = " + std::to_string(k) + ", x = " + basis_name(n),
                                   to_string(y), "a unit imaginary octonion"};
                });
            }
        }
        out.push_back(fw.as_check("threec.step03_sphere_preserved_m7",
                                  "the A form maps the unit sphere of imaginaries to itself"));
    }

    {
        FirstWitness fw;
        for (int j = 1; j <= 6; ++j)
            for (int k = 1; k <= 6; ++k) {
                if (j == k)
                    continue;
                const Octonion got = SandwichMap::action_c(j, k).apply(i7);
                fw.require(got == i7, [&] {
                    return octonion_witness(
                        "(j, k) = (" + std::to_string(j) + ", " + std::to_string(k) + ")", got, i7);
                });
            }
        out.push_back(fw.as_check("threec.step04_pole_i7_fixed",
                                  "ij ((ik i7 ik) ij) = i7 for j != k <= 6"));
    }

    {
        FirstWitness fw;
        for (int j = 1; j <= 6; ++j)
            for (int k = 1; k <= 6; ++k) {
                if (j == k)
                    continue;
                const SandwichMap c_map = SandwichMap::action_c(j, k);
                for (const auto& [c, s] : unit_pairs())
                    for (int n = 1; n <= 6; ++n) {
                        const Octonion x = Octonion::unit(n);
                        const Octonion lhs = c_map.apply(c * i7 + s * x);
                        const Octonion rhs = c * i7 + s * c_map.apply(x);
                        fw.require(lhs == rhs, [&] {
                            return octonion_witness("(j, k) = (" + std::to_string(j) + ", " +
                                                        std::to_string(k) + "), (c, s) = (" +
                                                        c.str() + ", " + s.str() + "), x = " +
                                                        basis_name(n),
                                                    lhs, rhs);
                        });
                    }
            }
        out.push_back(fw.as_check("threec.step05_slice_decomposition_m6",
                                  "phi(c i7 + s x) = c i7 + s phi(x) on exact unit pairs"));
    }

    {
        FirstWitness fw;
        for (int j = 1; j <= 6; ++j)
            for (int k = 1; k <= 6; ++k) {
                if (j == k)
                    continue;
                const SandwichMap c_map = SandwichMap::action_c(j, k);
                for (int n = 1; n <= 6; ++n) {
                    const Octonion y = c_map.apply(Octonion::unit(n));
                    fw.require(y.is_imaginary() && y.coeff(7).is_zero() &&
                                   norm_sq(y) == Rational(1),
                               [&] {
                                   return Witness{"(j, k) = (" + std::to_string(j) + ", " +
                                                      std::to_string(k) + "), x = " + basis_name(n),
                                                  to_string(y),
                                                  "a unit imaginary octonion with zero i7 part"};
                               });
                }
            }
        out.push_back(fw.as_check("threec.step06_sphere_preserved_m6",
                                  "the C form maps the 5-sphere orthogonal to i0 and i7 to itself"));
    }

    {
        FirstWitness fw;
        for (int k = 1; k <= 6; ++k) {
            const Octonion got = SandwichMap::reflect_basis(k).apply(i7);
            fw.require(got == -i7,
                       [&] { return octonion_witness("k = " + std::to_string(k), got, -i7); });
        }
        out.push_back(fw.as_check("threec.step07_reflections_negate_i7",
                                  "reflect(ik) sends i7 to -i7 for k <= 6"));
    }

    return out;
}

}  // namespace detail

inline std::vector<CheckResult> verify_proof_steps(ProofLemma lemma) {
    return lemma == ProofLemma::field ? detail::field_steps()
                                      : detail::three_components_steps();
}

}  // namespace octo
