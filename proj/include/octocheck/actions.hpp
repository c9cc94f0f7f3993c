#pragma once

// Sandwich maps x -> (products of fixed unit octonions around x) and words
// composed of them. Four forms are implemented, exactly as written:
//
//   reflect(u):      x -> -u x u                     (u unit imaginary)
//   action_a(k):     x -> i_k ((i_7 x i_7) i_k)
//   action_b(k):     x -> ((i_k i_7) x) (i_7 i_k)
//   action_c(j, k):  x -> i_j ((i_k x i_k) i_j)
//
// action_a and action_b are kept as distinct maps on purpose: the lemma-field
// suite compares them entrywise and records the outcome as a finding rather
// than silently picking one. Inner u x u factors are evaluated under both
// bracketings, which must agree (flexibility); a disagreement would mean the
// multiplication table itself is broken and throws.

#include "octocheck/check.hpp"
#include "octocheck/linalg.hpp"
#include "octocheck/octonion.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace octo {

// u x u, with the two bracketings cross-checked.
inline Octonion sandwich_same(const Octonion& u, const Octonion& x) {
    const Octonion a = (u * x) * u;
    const Octonion b = u * (x * u);
    if (a != b)
        throw std::logic_error("sandwich_same: (ux)u != u(xu)");
    return a;
}

enum class SandwichForm { reflect, action_a, action_b, action_c };

class SandwichMap {
public:
    static SandwichMap reflect(const Octonion& u) {
        if (!u.is_imaginary() || norm_sq(u) != Rational(1))
            throw std::invalid_argument("SandwichMap::reflect: u must be a unit imaginary octonion");
        std::string desc = "reflect(";
        bool basis = false;
        for (int k = 1; k < 8; ++k)
            if (u == Octonion::unit(k)) {
                desc += basis_name(k);
                basis = true;
                break;
            }
        if (!basis)
            desc += to_string(u);
        desc += ")";
        return SandwichMap(SandwichForm::reflect, u, 0, 0, std::move(desc));
    }

    static SandwichMap reflect_basis(int k) {
        if (k < 1 || k > 7)
            throw std::invalid_argument("SandwichMap::reflect_basis: index out of range");
        return reflect(Octonion::unit(k));
    }

    static SandwichMap action_a(int k) {
        require_index(k, "SandwichMap::action_a");
        return SandwichMap(SandwichForm::action_a, Octonion(), 0, k,
                           "actionA(" + std::to_string(k) + ")");
    }

    static SandwichMap action_b(int k) {
        require_index(k, "SandwichMap::action_b");
        return SandwichMap(SandwichForm::action_b, Octonion(), 0, k,
                           "actionB(" + std::to_string(k) + ")");
    }

    static SandwichMap action_c(int j, int k) {
        require_index(j, "SandwichMap::action_c");
        require_index(k, "SandwichMap::action_c");
        return SandwichMap(SandwichForm::action_c, Octonion(), j, k,
                           "actionC(" + std::to_string(j) + "," + std::to_string(k) + ")");
    }

    Octonion apply(const Octonion& x) const {
        switch (form_) {
            case SandwichForm::reflect:
                return -sandwich_same(u_, x);
            case SandwichForm::action_a: {
                const Octonion inner = sandwich_same(Octonion::unit(7), x);
                return sandwich_same(Octonion::unit(k_), inner);
            }
            case SandwichForm::action_b: {
                const Octonion left = Octonion::unit(k_) * Octonion::unit(7);
                const Octonion right = Octonion::unit(7) * Octonion::unit(k_);
                return (left * x) * right;
            }
            default: {
                const Octonion inner = sandwich_same(Octonion::unit(k_), x);
                return sandwich_same(Octonion::unit(j_), inner);
            }
        }
    }

    // Column n holds apply(i_n) in coordinates.
    const Matrix& matrix() const { return m_; }

    SandwichForm form() const { return form_; }
    const std::string& describe() const { return desc_; }

private:
    static void require_index(int k, const char* who) {
        if (k < 1 || k > 7)
            throw std::invalid_argument(std::string(who) + ": index out of range");
    }

    SandwichMap(SandwichForm form, Octonion u, int j, int k, std::string desc)
        : form_(form), u_(std::move(u)), j_(j), k_(k), m_(8, 8), desc_(std::move(desc)) {
        for (int n = 0; n < 8; ++n) {
            const Octonion col = apply(Octonion::unit(n));
            for (int r = 0; r < 8; ++r)
                m_(static_cast<std::size_t>(r), static_cast<std::size_t>(n)) = col.coeff(r);
        }
    }

    SandwichForm form_;
    Octonion u_;
    int j_ = 0;
    int k_ = 0;
    Matrix m_;
    std::string desc_;
};

// A composite of sandwich maps, applied right to left like function
// composition: word {f, g}.apply(x) = f(g(x)). The empty word is the
// identity map.
class GroupWord {
public:
    GroupWord() : m_(Matrix::identity(8)) {}

    explicit GroupWord(std::vector<SandwichMap> letters)
        : letters_(std::move(letters)), m_(Matrix::identity(8)) {
        for (const auto& l : letters_)
            m_ = m_ * l.matrix();
    }

    GroupWord(std::initializer_list<SandwichMap> letters)
        : GroupWord(std::vector<SandwichMap>(letters)) {}

    // Applies letters via exact octonion products, not via the cached matrix.
    Octonion apply(const Octonion& x) const {
        Octonion y = x;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            y = it->apply(y);
        return y;
    }

    const Matrix& matrix() const { return m_; }
    std::size_t size() const { return letters_.size(); }
    bool even() const { return letters_.size() % 2 == 0; }

    friend GroupWord compose(const GroupWord& f, const GroupWord& g) {
        std::vector<SandwichMap> letters = f.letters_;
        letters.insert(letters.end(), g.letters_.begin(), g.letters_.end());
        return GroupWord(std::move(letters));
    }

    std::string describe() const {
        if (letters_.empty())
            return "identity";
        std::string s;
        for (const auto& l : letters_) {
            if (!s.empty())
                s += " * ";
            s += l.describe();
        }
        return s;
    }

private:
    std::vector<SandwichMap> letters_;
    Matrix m_;
};

// M^T M = I, evaluated exactly. Fails (not a finding): every map built in
// this project is an isometry, so a miss is an internal error.
inline CheckResult check_orthogonality(const Matrix& m, std::string name, std::string subject) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("check_orthogonality: matrix not square");
    const Matrix gram = m.transpose() * m;
    const Matrix id = Matrix::identity(m.rows());
    FirstWitness fw;
    fw.require(gram == id, [&] {
        const auto pos = first_difference(gram, id);
        return Witness{subject + ", M^T M entry (" + std::to_string(pos->first) + ", " +
                           std::to_string(pos->second) + ")",
                       gram(pos->first, pos->second).str(), id(pos->first, pos->second).str()};
    });
    return fw.as_check(std::move(name), "M^T M = I exactly");
}

inline CheckResult check_orthogonality(const SandwichMap& f, std::string name) {
    return check_orthogonality(f.matrix(), std::move(name), f.describe());
}

inline CheckResult check_orthogonality(const GroupWord& w, std::string name) {
    return check_orthogonality(w.matrix(), std::move(name), w.describe());
}

// Whether every generator phi commutes with right multiplication by i_m:
// phi(p i_m) = phi(p) i_m for all basis p. Outcome pass or finding; nothing
// here decides which generator sets ought to commute.
inline CheckResult check_field_equivariance(const std::vector<GroupWord>& gens, int m,
                                            std::string name) {
    if (m < 1 || m > 7)
        throw std::invalid_argument("check_field_equivariance: m out of range");
    const std::string claim =
        "phi(p " + basis_name(m) + ") = phi(p) " + basis_name(m) + " for every generator phi";
    const Octonion im = Octonion::unit(m);
    FirstWitness fw;
    for (const auto& g : gens) {
        for (int n = 0; n < 8; ++n) {
            const Octonion p = Octonion::unit(n);
            const Octonion lhs = g.apply(p * im);
            const Octonion rhs = g.apply(p) * im;
            fw.require(lhs == rhs, [&] {
                return Witness{"phi = " + g.describe() + ", p = " + basis_name(n) +
                                   ", m = " + std::to_string(m),
                               to_string(lhs), to_string(rhs)};
            });
        }
    }
    return fw.as_check(std::move(name), claim, CheckStatus::finding);
}

// actionB(k) applied to p i_7 against -(actionA(k) applied to p) i_7,
// decided exhaustively over the basis.
inline CheckResult check_mixed_identity(int k) {
    if (k < 1 || k > 6)
        throw std::invalid_argument("check_mixed_identity: k out of range");
    const std::string name = "field.mixed_identity.k" + std::to_string(k);
    const std::string claim = "((ik i7) (p i7)) (i7 ik) = -(ik ((i7 p i7) ik)) i7 for k = " +
                              std::to_string(k) + ", all basis p";
    const SandwichMap a = SandwichMap::action_a(k);
    const SandwichMap b = SandwichMap::action_b(k);
    const Octonion i7 = Octonion::unit(7);
    FirstWitness fw;
    for (int n = 0; n < 8; ++n) {
        const Octonion p = Octonion::unit(n);
        const Octonion lhs = b.apply(p * i7);
        const Octonion rhs = -(a.apply(p) * i7);
        fw.require(lhs == rhs, [&] {
            return Witness{"k = " + std::to_string(k) + ", p = " + basis_name(n),
                           to_string(lhs), to_string(rhs)};
        });
    }
    return fw.as_check(name, claim, CheckStatus::finding);
}

}  // namespace octo
