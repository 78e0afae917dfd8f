#ifndef ABEL_USERIES_HPP
#define ABEL_USERIES_HPP

#include <vector>

#include "abel/rational.hpp"

namespace abel {

enum class UParity { Even, Odd, Mixed };

// Truncated power series in u with exact rational coefficients,
// indexed 0..order. The zero series reports parity Even.
class USeries {
public:
    explicit USeries(int order);
    static USeries constant(int order, const Rational& value);
    static USeries monomial(int order, int exp, const Rational& coeff);

    int order() const { return order_; }
    const Rational& operator[](int k) const;
    void set(int k, const Rational& value);

    bool is_zero() const;
    UParity parity() const;
    // Lowest exponent with nonzero coefficient, or order()+1 if zero.
    int valuation() const;

    USeries truncated(int new_order) const;
    USeries scaled(const Rational& c) const;
    USeries operator-() const;

    // Unit-constant-term inverse through the truncation order.
    bool is_unit() const { return !c_[0].is_zero(); }
    USeries inverse() const;

    friend USeries operator+(const USeries& a, const USeries& b);
    friend USeries operator-(const USeries& a, const USeries& b);
    friend USeries operator*(const USeries& a, const USeries& b);

    // Coefficientwise equality through the common order.
    friend bool operator==(const USeries& a, const USeries& b);
    friend bool operator!=(const USeries& a, const USeries& b) { return !(a == b); }

    friend USeries unit_coefficient(const USeries& proto) {
        return USeries::constant(proto.order(), Rational(1));
    }

private:
    int order_;
    std::vector<Rational> c_;  // size order_+1
};

// Exact composition outer(inner); inner must have zero constant term.
USeries compose_even(const USeries& outer, const USeries& inner);

// Compositional inverse of an odd series with linear coefficient 1,
// computed by degree-by-degree substitution.
USeries revert_odd(const USeries& a);

// Taylor series of 2cos(n*u) / 2sin(n*u/2) through the given order.
USeries cos2n_series(int order, long n);
USeries sin2n_half_series(int order, long n);

}  // namespace abel

#endif
