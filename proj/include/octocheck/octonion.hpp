#pragma once

// Octonions over exact rationals. The basis is i_0..i_7 with i_0 = 1 and
// i_k^2 = -1 for k >= 1. Products of imaginary units follow the seven
// oriented triples in kTriples: for each (a, b, c), i_a i_b = i_c cyclically,
// and swapping two factors flips the sign.
//
// The multiplication table is generated from the triples at startup and
// compared entry by entry against an independently written literal table;
// any disagreement throws. All higher-level identities in this project
// reduce to this one table, so it is the most heavily guarded object here.

#include "octocheck/linalg.hpp"
#include "octocheck/rational.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace octo {

inline constexpr int kTriples[7][3] = {
    {1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 6, 4}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6},
};

struct BasisProduct {
    int sign;   // +1 or -1
    int index;  // 0..7
};

class MultTable {
public:
    struct Data {
        int sign[8][8];
        int index[8][8];
    };

    // Written out by hand, independent of the generation code below.
    static const Data& literal() {
        static const Data d = {
            {
                {+1, +1, +1, +1, +1, +1, +1, +1},
                {+1, -1, +1, -1, +1, -1, +1, -1},
                {+1, -1, -1, +1, -1, +1, +1, -1},
                {+1, +1, -1, -1, +1, +1, -1, -1},
                {+1, -1, +1, -1, -1, +1, -1, +1},
                {+1, +1, -1, -1, -1, -1, +1, +1},
                {+1, -1, -1, +1, +1, -1, -1, +1},
                {+1, +1, +1, +1, -1, -1, -1, -1},
            },
            {
                {0, 1, 2, 3, 4, 5, 6, 7},
                {1, 0, 3, 2, 5, 4, 7, 6},
                {2, 3, 0, 1, 6, 7, 4, 5},
                {3, 2, 1, 0, 7, 6, 5, 4},
                {4, 5, 6, 7, 0, 1, 2, 3},
                {5, 4, 7, 6, 1, 0, 3, 2},
                {6, 7, 4, 5, 2, 3, 0, 1},
                {7, 6, 5, 4, 3, 2, 1, 0},
            },
        };
        return d;
    }

    static Data generate() {
        Data d{};
        bool set[8][8] = {};
        auto put = [&](int k, int l, int sign, int index) {
            if (set[k][l] && (d.sign[k][l] != sign || d.index[k][l] != index))
                throw std::logic_error("MultTable: conflicting entry during generation");
            d.sign[k][l] = sign;
            d.index[k][l] = index;
            set[k][l] = true;
        };
        for (int k = 0; k < 8; ++k) {
            put(0, k, +1, k);
            put(k, 0, +1, k);
        }
        for (int k = 1; k < 8; ++k)
            put(k, k, -1, 0);
        for (const auto& t : kTriples) {
            for (int r = 0; r < 3; ++r) {
                const int a = t[r], b = t[(r + 1) % 3], c = t[(r + 2) % 3];
                put(a, b, +1, c);
                put(b, a, -1, c);
            }
        }
        for (int k = 0; k < 8; ++k)
            for (int l = 0; l < 8; ++l)
                if (!set[k][l])
                    throw std::logic_error("MultTable: triples left an entry undefined");
        return d;
    }

    // True when the generated table and the hand-written one agree everywhere.
    static bool generated_matches_literal() {
        const Data g = generate();
        const Data& l = literal();
        for (int k = 0; k < 8; ++k)
            for (int m = 0; m < 8; ++m)
                if (g.sign[k][m] != l.sign[k][m] || g.index[k][m] != l.index[k][m])
                    return false;
        return true;
    }

    static const MultTable& instance() {
        static const MultTable t;
        return t;
    }

    BasisProduct product(int k, int l) const {
        if (k < 0 || k > 7 || l < 0 || l > 7)
            throw std::invalid_argument("MultTable::product: index out of range");
        return {d_.sign[k][l], d_.index[k][l]};
    }

private:
    MultTable() : d_(generate()) {
        if (!generated_matches_literal())
            throw std::logic_error("MultTable: generated table disagrees with literal table");
    }

    Data d_;
};

class Octonion {
public:
    Octonion() = default;
    explicit Octonion(std::array<Rational, 8> coeffs) : c_(std::move(coeffs)) {}

    static Octonion unit(int k) {
        if (k < 0 || k > 7)
            throw std::invalid_argument("Octonion::unit: index out of range");
        Octonion x;
        x.c_[static_cast<std::size_t>(k)] = 1;
        return x;
    }

    static Octonion scalar(const Rational& t) {
        Octonion x;
        x.c_[0] = t;
        return x;
    }

    const Rational& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }

    bool is_zero() const {
        for (const auto& t : c_)
            if (!t.is_zero())
                return false;
        return true;
    }

    bool is_imaginary() const { return c_[0].is_zero(); }

    Octonion operator+(const Octonion& o) const {
        Octonion r;
        for (int k = 0; k < 8; ++k)
            r.c_[k] = c_[k] + o.c_[k];
        return r;
    }

    Octonion operator-(const Octonion& o) const {
        Octonion r;
        for (int k = 0; k < 8; ++k)
            r.c_[k] = c_[k] - o.c_[k];
        return r;
    }

    Octonion operator-() const {
        Octonion r;
        for (int k = 0; k < 8; ++k)
            r.c_[k] = -c_[k];
        return r;
    }

    Octonion operator*(const Octonion& o) const {
        const MultTable& tab = MultTable::instance();
        Octonion r;
        for (int k = 0; k < 8; ++k) {
            if (c_[k].is_zero())
                continue;
            for (int l = 0; l < 8; ++l) {
                if (o.c_[l].is_zero())
                    continue;
                const BasisProduct p = tab.product(k, l);
                const Rational term = c_[k] * o.c_[l];
                if (p.sign > 0)
                    r.c_[static_cast<std::size_t>(p.index)] += term;
                else
                    r.c_[static_cast<std::size_t>(p.index)] -= term;
            }
        }
        return r;
    }

    friend Octonion operator*(const Rational& s, const Octonion& x) {
        Octonion r;
        for (int k = 0; k < 8; ++k)
            r.c_[k] = s * x.c_[k];
        return r;
    }

    friend bool operator==(const Octonion& a, const Octonion& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Octonion& a, const Octonion& b) { return a.c_ != b.c_; }

private:
    std::array<Rational, 8> c_{};
};

inline Octonion conjugate(const Octonion& x) {
    std::array<Rational, 8> c;
    c[0] = x.coeff(0);
    for (int k = 1; k < 8; ++k)
        c[static_cast<std::size_t>(k)] = -x.coeff(k);
    return Octonion(c);
}

inline Rational norm_sq(const Octonion& x) {
    Rational s;
    for (int k = 0; k < 8; ++k)
        s += x.coeff(k) * x.coeff(k);
    return s;
}

inline Octonion inverse(const Octonion& x) {
    const Rational n = norm_sq(x);
    if (n.is_zero())
        throw std::domain_error("inverse: zero octonion");
    return (Rational(1) / n) * conjugate(x);
}

inline Octonion commutator(const Octonion& x, const Octonion& y) {
    return x * y - y * x;
}

inline Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z) {
    return (x * y) * z - x * (y * z);
}

// Residuals of the three Moufang laws; each is zero exactly when the law
// holds for the given triple. The shared factor xyx is evaluated both ways
// and the two readings must agree (flexibility), otherwise this throws.
struct MoufangResiduals {
    Octonion m1;  // (x y x) z - x (y (x z))
    Octonion m2;  // z (x y x) - ((z x) y) x
    Octonion m3;  // (x (y z)) x - (x y) (z x)
};

inline MoufangResiduals moufang_residuals(const Octonion& x, const Octonion& y,
                                          const Octonion& z) {
    const Octonion xyx_left = (x * y) * x;
    const Octonion xyx_right = x * (y * x);
    if (xyx_left != xyx_right)
        throw std::logic_error("moufang_residuals: (xy)x != x(yx)");
    MoufangResiduals r;
    r.m1 = xyx_left * z - x * (y * (x * z));
    r.m2 = z * xyx_left - ((z * x) * y) * x;
    r.m3 = (x * (y * z)) * x - (x * y) * (z * x);
    return r;
}

// Column n is x * i_n.
inline Matrix left_mult_matrix(const Octonion& x) {
    Matrix m(8, 8);
    for (int n = 0; n < 8; ++n) {
        const Octonion col = x * Octonion::unit(n);
        for (int r = 0; r < 8; ++r)
            m(static_cast<std::size_t>(r), static_cast<std::size_t>(n)) = col.coeff(r);
    }
    return m;
}

// Column n is i_n * x.
inline Matrix right_mult_matrix(const Octonion& x) {
    Matrix m(8, 8);
    for (int n = 0; n < 8; ++n) {
        const Octonion col = Octonion::unit(n) * x;
        for (int r = 0; r < 8; ++r)
            m(static_cast<std::size_t>(r), static_cast<std::size_t>(n)) = col.coeff(r);
    }
    return m;
}

inline Vector as_vector(const Octonion& x) {
    Vector v(8);
    for (int k = 0; k < 8; ++k)
        v[static_cast<std::size_t>(k)] = x.coeff(k);
    return v;
}

inline std::string basis_name(int k) {
    return "i" + std::to_string(k);
}

// Always prints all eight coordinates: "t0 + t1 i1 + ... + t7 i7".
inline std::string to_string(const Octonion& x) {
    std::string s = x.coeff(0).str();
    for (int k = 1; k < 8; ++k) {
        const Rational& t = x.coeff(k);
        if (t < Rational(0))
            s += " - " + (-t).str();
        else
            s += " + " + t.str();
        s += " " + basis_name(k);
    }
    return s;
}

}  // namespace octo
