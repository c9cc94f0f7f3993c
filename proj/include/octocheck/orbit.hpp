#pragma once

// Orbit geometry of reflection words on the unit octonions, plus the
// parallelizability frame check: for p != 0 the eight products p i_0..p i_7
// form an orthogonal frame whose Gram matrix is |p|^2 I.

#include "octocheck/actions.hpp"
#include "octocheck/check.hpp"
#include "octocheck/linalg.hpp"
#include "octocheck/octonion.hpp"
#include "octocheck/sampling.hpp"

#include <string>
#include <utility>
#include <vector>

namespace octo {

// An exact point c i_pole + s x of the unit sphere, with x a unit imaginary
// octonion orthogonal to the pole axis and c^2 + s^2 = 1.
struct SlicePoint {
    Rational c;
    Rational s;
    Octonion x;
    int pole;

    SlicePoint(Rational c_, Rational s_, Octonion x_, int pole_)
        : c(std::move(c_)), s(std::move(s_)), x(std::move(x_)), pole(pole_) {
        if (pole < 0 || pole > 7)
            throw std::invalid_argument("SlicePoint: pole out of range");
        if (c * c + s * s != Rational(1))
            throw std::invalid_argument("SlicePoint: c^2 + s^2 != 1");
        if (!x.is_imaginary() || norm_sq(x) != Rational(1))
            throw std::invalid_argument("SlicePoint: x must be a unit imaginary octonion");
        if (pole != 0 && !x.coeff(pole).is_zero())
            throw std::invalid_argument("SlicePoint: x must be orthogonal to the pole");
    }

    Octonion value() const { return c * Octonion::unit(pole) + s * x; }
};

inline GroupWord random_even_reflect_word(SampleGen& gen) {
    const int half = static_cast<int>(gen.next_int(2, 4));
    std::vector<SandwichMap> letters;
    letters.reserve(static_cast<std::size_t>(2 * half));
    for (int i = 0; i < 2 * half; ++i)
        letters.push_back(SandwichMap::reflect(gen.next_unit_imaginary()));
    return GroupWord(std::move(letters));
}

// Five checks: the pole i_0 is fixed by all 21 basis reflection pairs and by
// seeded longer even words; basis reflections send i_7 to -i_7; the interior
// point (3/5) i_0 + (4/5) i_7 is fixed by every A-form pair with j < k <= 6;
// and every even word maps a slice point c i_0 + s x to c i_0 + s x' with x'
// again unit imaginary.
inline std::vector<CheckResult> check_orbit_geometry(std::uint64_t seed) {
    std::vector<CheckResult> out;
    SampleGen gen = SampleGen::for_suite(seed, "orbit-geometry");
    const Octonion i0 = Octonion::unit(0);
    const Octonion i7 = Octonion::unit(7);

    std::vector<GroupWord> basis_pairs;
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b)
            basis_pairs.push_back(
                GroupWord{SandwichMap::reflect_basis(a), SandwichMap::reflect_basis(b)});

    std::vector<GroupWord> random_words;
    for (int i = 0; i < 64; ++i)
        random_words.push_back(random_even_reflect_word(gen));

    {
        FirstWitness fw;
        for (const auto& w : basis_pairs) {
            const Octonion got = w.apply(i0);
            fw.require(got == i0, [&] {
                return Witness{"word " + w.describe(), to_string(got), to_string(i0)};
            });
        }
        out.push_back(fw.as_check("orbit.pole_fixed_by_basis_pairs",
                                  "all 21 products of two basis reflections fix i0"));
    }

    {
        FirstWitness fw;
        for (const auto& w : random_words) {
            const Octonion got = w.apply(i0);
            fw.require(got == i0, [&] {
                return Witness{"word " + w.describe(), to_string(got), to_string(i0)};
            });
        }
        out.push_back(fw.as_check("orbit.pole_fixed_by_random_words",
                                  "64 seeded even reflection words fix i0"));
    }

    {
        FirstWitness fw;
        for (int k = 1; k <= 6; ++k) {
            const Octonion got = SandwichMap::reflect_basis(k).apply(i7);
            fw.require(got == -i7, [&] {
                return Witness{"k = " + std::to_string(k), to_string(got), to_string(-i7)};
            });
        }
        out.push_back(fw.as_check("orbit.reflections_negate_i7",
                                  "reflect(ik) sends i7 to -i7 for k <= 6"));
    }

    {
        const SlicePoint v(Rational(3, 5), Rational(4, 5), i7, 0);
        const Octonion p = v.value();
        FirstWitness fw;
        for (int j = 1; j <= 6; ++j)
            for (int k = j + 1; k <= 6; ++k) {
                const Octonion got =
                    SandwichMap::action_a(j).apply(SandwichMap::action_a(k).apply(p));
                fw.require(got == p, [&] {
                    return Witness{"(j, k) = (" + std::to_string(j) + ", " + std::to_string(k) +
                                       "), v = " + to_string(p),
                                   to_string(got), to_string(p)};
                });
            }
        out.push_back(fw.as_check("orbit.interior_point_fixed_by_a_pairs",
                                  "(3/5) i0 + (4/5) i7 is fixed by all A-form pairs j < k <= 6"));
    }

    {
        FirstWitness fw;
        auto check_word = [&](const GroupWord& w) {
            const auto [c, s] = gen.next_unit_pair();
            const Octonion x = gen.next_unit_imaginary();
            const Octonion v = c * i0 + s * x;
            const Octonion img = w.apply(v);
            const bool coeff_ok = img.coeff(0) == c;
            Octonion xp;
            if (coeff_ok)
                xp = (Rational(1) / s) * (img - c * i0);
            fw.require(coeff_ok && xp.is_imaginary() && norm_sq(xp) == Rational(1), [&] {
                return Witness{"word " + w.describe() + ", v = " + to_string(v), to_string(img),
                               "c i0 + s x' with x' unit imaginary"};
            });
        };
        for (const auto& w : basis_pairs)
            check_word(w);
        for (const auto& w : random_words)
            check_word(w);
        out.push_back(fw.as_check("orbit.slice_form_preserved",
                                  "even words map c i0 + s x to c i0 + s x' with x' unit imaginary"));
    }

    return out;
}

// Gram matrix of the frame {p i_0, ..., p i_7} equals |p|^2 I. The name
// distinguishes the base points the suite pins down.
inline CheckResult check_parallelizability(const Octonion& p, std::string name) {
    if (p.is_zero())
        throw std::domain_error("check_parallelizability: zero base point");
    std::vector<Vector> frame;
    frame.reserve(8);
    for (int k = 0; k < 8; ++k)
        frame.push_back(as_vector(p * Octonion::unit(k)));
    const Matrix g = gram(frame);
    const Matrix want = norm_sq(p) * Matrix::identity(8);
    FirstWitness fw;
    fw.require(g == want, [&] {
        const auto pos = first_difference(g, want);
        return Witness{"p = " + to_string(p) + ", Gram entry (" + std::to_string(pos->first) +
                           ", " + std::to_string(pos->second) + ")",
                       g(pos->first, pos->second).str(), want(pos->first, pos->second).str()};
    });
    return fw.as_check(std::move(name),
                       "the products p ik form an orthogonal frame with Gram |p|^2 I");
}

}  // namespace octo
