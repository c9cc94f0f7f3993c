#pragma once

// Clifford algebras Cl(p, q) with exact rational coefficients. Generators
// e_1..e_p square to +1 and e_{p+1}..e_{p+q} square to -1; distinct
// generators anticommute. A basis blade is a 16-bit mask: bit j set means
// generator e_{j+1} is a factor, mask 0 is the scalar blade. Up to nine
// generators are supported, which covers everything this project touches.

#include "octocheck/rational.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace octo {

struct Signature {
    int p = 0;
    int q = 0;

    Signature(int p_, int q_) : p(p_), q(q_) {
        if (p < 0 || q < 0 || p + q > 9)
            throw std::invalid_argument("Signature: need p, q >= 0 and p + q <= 9");
    }

    int dim() const { return p + q; }

    // Square of generator e_k, k in 1..dim().
    int square_sign(int k) const {
        if (k < 1 || k > dim())
            throw std::invalid_argument("Signature::square_sign: generator out of range");
        return k <= p ? +1 : -1;
    }

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
};

using BladeMask = std::uint16_t;

inline int blade_grade(BladeMask m) { return std::popcount(static_cast<unsigned>(m)); }

inline std::string blade_name(BladeMask m) {
    if (m == 0)
        return "1";
    std::string s;
    for (int j = 0; j < 16; ++j)
        if (m & (BladeMask(1) << j))
            s += "e" + std::to_string(j + 1);
    return s;
}

// Product of two basis blades: the resulting mask is a ^ b, and the sign
// collects one transposition per out-of-order generator pair plus the square
// of every generator the two blades share.
inline std::pair<int, BladeMask> blade_mul(BladeMask a, BladeMask b, const Signature& sig) {
    unsigned swaps = 0;
    BladeMask t = static_cast<BladeMask>(a >> 1);
    while (t) {
        swaps += static_cast<unsigned>(std::popcount(static_cast<unsigned>(t & b)));
        t = static_cast<BladeMask>(t >> 1);
    }
    int sign = (swaps % 2 == 0) ? +1 : -1;
    BladeMask common = static_cast<BladeMask>(a & b);
    for (int j = 0; j < sig.dim(); ++j)
        if (common & (BladeMask(1) << j))
            sign *= sig.square_sign(j + 1);
    return {sign, static_cast<BladeMask>(a ^ b)};
}

class Multivector {
public:
    explicit Multivector(Signature sig) : sig_(sig) {}

    static Multivector scalar(Signature sig, const Rational& t) {
        Multivector m(sig);
        m.add_term(0, t);
        return m;
    }

    static Multivector blade(Signature sig, BladeMask mask, const Rational& coeff = Rational(1)) {
        if (mask >> sig.dim())
            throw std::invalid_argument("Multivector::blade: mask uses generators outside the signature");
        Multivector m(sig);
        m.add_term(mask, coeff);
        return m;
    }

    // Generator e_k, 1-based.
    static Multivector generator(Signature sig, int k) {
        if (k < 1 || k > sig.dim())
            throw std::invalid_argument("Multivector::generator: index out of range");
        return blade(sig, static_cast<BladeMask>(BladeMask(1) << (k - 1)));
    }

    const Signature& signature() const { return sig_; }
    const std::map<BladeMask, Rational>& terms() const { return terms_; }

    Rational coeff(BladeMask mask) const {
        auto it = terms_.find(mask);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }

    Multivector operator+(const Multivector& o) const {
        require_same_signature(o, "Multivector::operator+");
        Multivector r = *this;
        for (const auto& [mask, c] : o.terms_)
            r.add_term(mask, c);
        return r;
    }

    Multivector operator-(const Multivector& o) const {
        require_same_signature(o, "Multivector::operator-");
        Multivector r = *this;
        for (const auto& [mask, c] : o.terms_)
            r.add_term(mask, -c);
        return r;
    }

    Multivector operator-() const {
        Multivector r(sig_);
        for (const auto& [mask, c] : terms_)
            r.terms_.emplace(mask, -c);
        return r;
    }

    Multivector operator*(const Multivector& o) const {
        require_same_signature(o, "Multivector::operator*");
        Multivector r(sig_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                const auto [sign, mask] = blade_mul(ma, mb, sig_);
                Rational term = ca * cb;
                if (sign < 0)
                    term = -term;
                r.add_term(mask, term);
            }
        return r;
    }

    friend Multivector operator*(const Rational& s, const Multivector& m) {
        Multivector r(m.sig_);
        if (s.is_zero())
            return r;
        for (const auto& [mask, c] : m.terms_)
            r.terms_.emplace(mask, s * c);
        return r;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

private:
    void require_same_signature(const Multivector& o, const char* who) const {
        if (sig_ != o.sig_)
            throw std::invalid_argument(std::string(who) + ": signature mismatch");
    }

    // Zero coefficients are never stored.
    void add_term(BladeMask mask, const Rational& c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.emplace(mask, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Signature sig_;
    std::map<BladeMask, Rational> terms_;
};

inline bool is_even(const Multivector& m) {
    for (const auto& [mask, c] : m.terms())
        if (blade_grade(mask) % 2 != 0)
            return false;
    return true;
}

inline Multivector even_part(const Multivector& m) {
    Multivector r(m.signature());
    for (const auto& [mask, c] : m.terms())
        if (blade_grade(mask) % 2 == 0)
            r = r + Multivector::blade(m.signature(), mask, c);
    return r;
}

// Two algebra maps that land in an even subalgebra one generator up:
//   raise_q: Cl(p, q) -> Cl(p, q+1),  e_k -> e_k e_{n+1}   (n = p + q)
//   raise_p: Cl(p, q) -> Cl(q+1, p),  e_k -> e_1 e_{k+1}
// Both send products of generators to products of the images, so a
// multivector maps term by term.
enum class EmbedVariant { raise_q, raise_p };

inline const char* to_string(EmbedVariant v) {
    return v == EmbedVariant::raise_q ? "raise_q" : "raise_p";
}

inline Multivector embed_even(const Multivector& m, EmbedVariant variant) {
    const Signature& s = m.signature();
    const int n = s.dim();
    if (n + 1 > 9)
        throw std::invalid_argument("embed_even: target would exceed nine generators");
    const Signature target = (variant == EmbedVariant::raise_q)
                                 ? Signature(s.p, s.q + 1)
                                 : Signature(s.q + 1, s.p);
    Multivector out(target);
    for (const auto& [mask, c] : m.terms()) {
        Multivector img = Multivector::scalar(target, c);
        for (int k = 1; k <= n; ++k) {
            if (!(mask & (BladeMask(1) << (k - 1))))
                continue;
            BladeMask g;
            if (variant == EmbedVariant::raise_q)
                g = static_cast<BladeMask>((BladeMask(1) << (k - 1)) | (BladeMask(1) << n));
            else
                g = static_cast<BladeMask>(BladeMask(1) | (BladeMask(1) << k));
            img = img * Multivector::blade(target, g);
        }
        out = out + img;
    }
    return out;
}

inline std::string to_string(const Multivector& m) {
    if (m.is_zero())
        return "0";
    std::string s;
    for (const auto& [mask, c] : m.terms()) {
        if (!s.empty())
            s += " + ";
        s += c.str();
        if (mask != 0)
            s += " " + blade_name(mask);
    }
    return s;
}

}  // namespace octo
