#ifndef ABEL_RATIONAL_HPP
#define ABEL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "abel/error.hpp"

namespace abel {

// Exact arbitrary-precision rational, always reduced, denominator > 0.
// Thin value wrapper around GMP's mpq_class; kept deliberately small so the
// rest of the library never touches GMP types directly.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw precondition_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Parses "num/den" or "num".
    static Rational parse(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw precondition_error("Rational: cannot parse '" + s + "'");
        v.canonicalize();
        Rational r;
        r.v_ = v;
        return r;
    }

    // Canonical "num/den" form, denominator always present and positive.
    std::string str() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Uniform coefficient-domain interface shared with PLaurent/USeries.
    bool is_unit() const { return !is_zero(); }
    Rational scaled(const Rational& c) const { return *this * c; }

    // Requires is_integer() and a value fitting in long.
    long to_long() const {
        if (!is_integer())
            throw integrality_error("Rational: " + str() + " is not an integer");
        if (!v_.get_num().fits_slong_p())
            throw precondition_error("Rational: " + str() + " does not fit long");
        return v_.get_num().get_si();
    }

    Rational pow(long e) const {
        if (e < 0) {
            if (is_zero()) throw precondition_error("Rational: 0 has no inverse");
            return inverse().pow(-e);
        }
        Rational r(1);
        Rational base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    Rational inverse() const {
        if (is_zero()) throw precondition_error("Rational: 0 has no inverse");
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    Rational abs() const {
        Rational r;
        r.v_ = ::abs(v_);
        return r;
    }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw precondition_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        if (r.is_integer()) return os << r.v_.get_num().get_str();
        return os << r.str();
    }

private:
    mpq_class v_;
};

// n choose k as an exact rational (integer-valued for integer n >= 0).
inline Rational binomial(long n, long k) {
    if (k < 0) return Rational(0);
    Rational r(1);
    for (long j = 0; j < k; ++j) r *= Rational(n - j, j + 1);
    return r;
}

inline Rational factorial(long n) {
    Rational r(1);
    for (long j = 2; j <= n; ++j) r *= Rational(j);
    return r;
}

}  // namespace abel

#endif
