#ifndef ABEL_QSERIES_HPP
#define ABEL_QSERIES_HPP

#include <algorithm>
#include <vector>

#include "abel/error.hpp"
#include "abel/rational.hpp"

namespace abel {

// Truncated power series in q with coefficients in a pluggable exact
// domain C (Rational, PLaurent or USeries). Operations on operands of
// different orders produce the minimum order; equality is coefficientwise
// through the common order. The zero prototype carries the coefficient
// shape (inner truncation order, window) for padding.
template <typename C>
class QSeries {
public:
    QSeries(int order, const C& zero)
        : order_(order), zero_(zero), c_(order + 1, zero) {
        if (order < 0) throw precondition_error("QSeries: negative order");
    }

    int order() const { return order_; }
    const C& zero_proto() const { return zero_; }

    const C& operator[](int d) const {
        if (d < 0 || d > order_)
            throw precondition_error("QSeries: coefficient index out of range");
        return c_[d];
    }

    void set(int d, const C& value) {
        if (d < 0 || d > order_)
            throw precondition_error("QSeries: coefficient index out of range");
        c_[d] = value;
    }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(),
                           [](const C& x) { return x.is_zero(); });
    }

    QSeries truncated(int new_order) const {
        QSeries s(new_order, zero_);
        for (int d = 0; d <= std::min(order_, new_order); ++d) s.c_[d] = c_[d];
        return s;
    }

    QSeries scaled(const Rational& r) const {
        QSeries s(order_, zero_);
        for (int d = 0; d <= order_; ++d) s.c_[d] = c_[d].scaled(r);
        return s;
    }

    QSeries operator-() const { return scaled(Rational(-1)); }

    // q d/dq: multiplies the coefficient of q^d by d.
    QSeries q_derivative() const {
        QSeries s(order_, zero_);
        for (int d = 1; d <= order_; ++d) s.c_[d] = c_[d].scaled(Rational(d));
        return s;
    }

    // a * invert(a) = 1 through the truncation order; the constant term
    // must be a unit of the coefficient domain.
    QSeries invert() const {
        if (!c_[0].is_unit())
            throw precondition_error("QSeries: constant term is not a unit");
        QSeries b(order_, zero_);
        C c0inv = c_[0].inverse();
        b.c_[0] = c0inv;
        for (int d = 1; d <= order_; ++d) {
            C acc = zero_;
            for (int j = 1; j <= d; ++j) acc = acc + c_[j] * b.c_[d - j];
            b.c_[d] = -(acc * c0inv);
        }
        return b;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        QSeries s(std::min(a.order_, b.order_), a.zero_);
        for (int d = 0; d <= s.order_; ++d) s.c_[d] = a.c_[d] + b.c_[d];
        return s;
    }

    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        QSeries s(std::min(a.order_, b.order_), a.zero_);
        for (int d = 0; d <= s.order_; ++d) s.c_[d] = a.c_[d] - b.c_[d];
        return s;
    }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        QSeries s(std::min(a.order_, b.order_), a.zero_);
        for (int i = 0; i <= std::min(a.order_, s.order_); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= s.order_ && j <= b.order_; ++j) {
                if (b.c_[j].is_zero()) continue;
                s.c_[i + j] = s.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return s;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        int n = std::min(a.order_, b.order_);
        for (int d = 0; d <= n; ++d)
            if (!(a.c_[d] == b.c_[d])) return false;
        return true;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

private:
    int order_;
    C zero_;
    std::vector<C> c_;
};

// unit_coefficient supplies the multiplicative identity shaped like a
// given zero prototype; overloads for PLaurent/USeries live with those types.
inline Rational unit_coefficient(const Rational&) { return Rational(1); }

template <typename C>
QSeries<C> qseries_one(int order, const C& zero) {
    QSeries<C> r(order, zero);
    r.set(0, unit_coefficient(zero));
    return r;
}

template <typename C>
QSeries<C> qpow(const QSeries<C>& a, long e) {
    if (e < 0) return qpow(a.invert(), -e);
    QSeries<C> r = qseries_one(a.order(), a.zero_proto());
    QSeries<C> base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

}  // namespace abel

#endif
