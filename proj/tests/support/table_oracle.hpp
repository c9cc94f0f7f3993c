#pragma once

// Independent multiplication oracle, used only by tests. Basis products are
// found by searching the defining triples directly, and full products expand
// bilinearly over that search; none of the library's table machinery is
// involved, so the two routes can check each other.

#include "octocheck/octonion.hpp"
#include "octocheck/rational.hpp"

#include <array>
#include <stdexcept>

namespace oracle {

struct Prod {
    int sign;
    int index;
};

inline Prod basis_product(int k, int l) {
    static const int kT[7][3] = {
        {1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 6, 4}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6},
    };
    if (k < 0 || k > 7 || l < 0 || l > 7)
        throw std::invalid_argument("oracle::basis_product: index out of range");
    if (k == 0)
        return {+1, l};
    if (l == 0)
        return {+1, k};
    if (k == l)
        return {-1, 0};
    for (const auto& t : kT)
        for (int r = 0; r < 3; ++r) {
            const int a = t[r], b = t[(r + 1) % 3], c = t[(r + 2) % 3];
            if (k == a && l == b)
                return {+1, c};
            if (k == b && l == a)
                return {-1, c};
        }
    throw std::logic_error("oracle::basis_product: pair not covered by the triples");
}

using Coeffs = std::array<octo::Rational, 8>;

inline Coeffs from_octonion(const octo::Octonion& x) {
    Coeffs c;
    for (int k = 0; k < 8; ++k)
        c[static_cast<std::size_t>(k)] = x.coeff(k);
    return c;
}

inline octo::Octonion to_octonion(const Coeffs& c) {
    return octo::Octonion(c);
}

inline Coeffs mul(const Coeffs& x, const Coeffs& y) {
    Coeffs out{};
    for (int k = 0; k < 8; ++k) {
        if (x[static_cast<std::size_t>(k)].is_zero())
            continue;
        for (int l = 0; l < 8; ++l) {
            if (y[static_cast<std::size_t>(l)].is_zero())
                continue;
            const Prod p = basis_product(k, l);
            const octo::Rational term =
                x[static_cast<std::size_t>(k)] * y[static_cast<std::size_t>(l)];
            if (p.sign < 0)
                out[static_cast<std::size_t>(p.index)] -= term;
            else
                out[static_cast<std::size_t>(p.index)] += term;
        }
    }
    return out;
}

// Oracle-side product directly on library octonions, for readable tests.
inline octo::Octonion mul(const octo::Octonion& x, const octo::Octonion& y) {
    return to_octonion(mul(from_octonion(x), from_octonion(y)));
}

}  // namespace oracle
