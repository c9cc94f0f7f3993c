#pragma once

// Exact rational scalar built on boost::multiprecision. Every computation in
// this library is exact: values are kept in lowest terms with a positive
// denominator, and nothing ever rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace octo {

using Int = boost::multiprecision::cpp_int;

namespace detail {
using BoostRational = boost::multiprecision::cpp_rational;
}

class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}  // integer literals promote implicitly
    Rational(const Int& n) : v_(n) {}

    // The backend refuses negative denominators outright, so normalise the
    // sign before handing the pair over.
    Rational(Int num, Int den) {
        if (den.is_zero())
            throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = detail::BoostRational(num, den);
    }
    Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "3/5", "-3/5", plain "7" for integers.
    std::string str() const { return v_.str(); }

private:
    detail::BoostRational v_;
};

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace octo
