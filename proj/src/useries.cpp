#include "abel/useries.hpp"

#include <algorithm>

#include "abel/error.hpp"

namespace abel {

USeries::USeries(int order) : order_(order) {
    if (order < 0) throw precondition_error("USeries: negative order");
    c_.assign(order_ + 1, Rational(0));
}

USeries USeries::constant(int order, const Rational& value) {
    USeries s(order);
    s.c_[0] = value;
    return s;
}

USeries USeries::monomial(int order, int exp, const Rational& coeff) {
    USeries s(order);
    if (exp < 0) throw precondition_error("USeries: negative exponent");
    if (exp <= order) s.c_[exp] = coeff;
    return s;
}

const Rational& USeries::operator[](int k) const {
    if (k < 0 || k > order_)
        throw precondition_error("USeries: coefficient index out of range");
    return c_[k];
}

void USeries::set(int k, const Rational& value) {
    if (k < 0 || k > order_)
        throw precondition_error("USeries: coefficient index out of range");
    c_[k] = value;
}

bool USeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rational& x) { return x.is_zero(); });
}

UParity USeries::parity() const {
    bool even = true, odd = true;
    for (int k = 0; k <= order_; ++k) {
        if (c_[k].is_zero()) continue;
        if (k % 2 == 0) odd = false;
        else even = false;
    }
    if (even) return UParity::Even;
    if (odd) return UParity::Odd;
    return UParity::Mixed;
}

int USeries::valuation() const {
    for (int k = 0; k <= order_; ++k)
        if (!c_[k].is_zero()) return k;
    return order_ + 1;
}

USeries USeries::truncated(int new_order) const {
    USeries s(new_order);
    for (int k = 0; k <= std::min(order_, new_order); ++k) s.c_[k] = c_[k];
    return s;
}

USeries USeries::scaled(const Rational& c) const {
    USeries s(order_);
    for (int k = 0; k <= order_; ++k) s.c_[k] = c_[k] * c;
    return s;
}

USeries USeries::operator-() const { return scaled(Rational(-1)); }

USeries USeries::inverse() const {
    if (!is_unit())
        throw precondition_error("USeries: constant term is not invertible");
    USeries b(order_);
    Rational c0inv = c_[0].inverse();
    b.c_[0] = c0inv;
    for (int k = 1; k <= order_; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += c_[j] * b.c_[k - j];
        b.c_[k] = -acc * c0inv;
    }
    return b;
}

USeries operator+(const USeries& a, const USeries& b) {
    USeries s(std::min(a.order_, b.order_));
    for (int k = 0; k <= s.order_; ++k) s.c_[k] = a.c_[k] + b.c_[k];
    return s;
}

USeries operator-(const USeries& a, const USeries& b) {
    USeries s(std::min(a.order_, b.order_));
    for (int k = 0; k <= s.order_; ++k) s.c_[k] = a.c_[k] - b.c_[k];
    return s;
}

USeries operator*(const USeries& a, const USeries& b) {
    USeries s(std::min(a.order_, b.order_));
    for (int i = 0; i <= std::min(a.order_, s.order_); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= s.order_ && j <= b.order_; ++j) {
            if (b.c_[j].is_zero()) continue;
            s.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return s;
}

bool operator==(const USeries& a, const USeries& b) {
    int n = std::min(a.order_, b.order_);
    for (int k = 0; k <= n; ++k)
        if (a.c_[k] != b.c_[k]) return false;
    return true;
}

USeries compose_even(const USeries& outer, const USeries& inner) {
    if (!inner[0].is_zero())
        throw precondition_error("compose_even: inner constant term must vanish");
    int order = std::min(outer.order(), inner.order());
    USeries result = USeries::constant(order, outer[0]);
    USeries power = USeries::constant(order, Rational(1));
    USeries inner_t = inner.truncated(order);
    for (int k = 1; k <= order; ++k) {
        power = power * inner_t;
        if (power.is_zero()) break;
        if (!outer[k].is_zero()) result = result + power.scaled(outer[k]);
    }
    return result;
}

USeries revert_odd(const USeries& a) {
    if (a.parity() != UParity::Odd || a.order() < 1)
        throw precondition_error("revert_odd: series must be odd");
    if (a[1] != Rational(1))
        throw precondition_error("revert_odd: linear coefficient must be 1");
    int order = a.order();
    // b starts as r; fixing the degree-k coefficient of b by the current
    // discrepancy of a(b) leaves all lower degrees untouched since a'(0)=1.
    USeries b = USeries::monomial(order, 1, Rational(1));
    for (int k = 3; k <= order; k += 2) {
        USeries comp = compose_even(a, b);
        b.set(k, b[k] - comp[k]);
    }
    return b;
}

USeries cos2n_series(int order, long n) {
    // 2cos(nu) = sum_j (-1)^j 2 n^{2j} u^{2j} / (2j)!
    USeries s(order);
    Rational term(2);  // j = 0
    for (int j = 0; 2 * j <= order; ++j) {
        if (j > 0)
            term *= Rational(-(n * n), (2 * j - 1) * (2 * j));
        s.set(2 * j, term);
    }
    return s;
}

USeries sin2n_half_series(int order, long n) {
    // 2sin(nu/2) = sum_j (-1)^j 2 (n/2)^{2j+1} u^{2j+1} / (2j+1)!
    USeries s(order);
    Rational term = Rational(n);  // j = 0: 2*(n/2) = n
    for (int j = 0; 2 * j + 1 <= order; ++j) {
        if (j > 0)
            term *= Rational(-(n * n), 4 * (2 * j) * (2 * j + 1));
        s.set(2 * j + 1, term);
    }
    return s;
}

}  // namespace abel
