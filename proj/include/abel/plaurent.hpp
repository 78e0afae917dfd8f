#ifndef ABEL_PLAURENT_HPP
#define ABEL_PLAURENT_HPP

#include <map>

#include "abel/rational.hpp"

namespace abel {

enum class LaurentKind { Finite, Window };
enum class WParity { EvenInW, OddInW, Mixed };
enum class WSymmetry { Symmetric, Antisymmetric, None };

// Laurent polynomial (Finite) or window-truncated Laurent series (Window)
// in w = p^{1/2}. Exponents are stored in w-units, so the p-power p^k sits
// at exponent 2k; half-integer p-powers are the odd exponents.
//
// A Window value stores coefficients for |e| <= window() and is exact only
// on |e| <= validity(); it represents an |p| < 1 expansion whose true
// support is bounded below (by its lowest stored exponent) but extends
// upward past the window.
class PLaurent {
public:
    PLaurent() : kind_(LaurentKind::Finite), window_(0), validity_(0) {}

    static PLaurent finite() { return PLaurent(); }
    static PLaurent monomial(int w_exp, const Rational& coeff);
    // c0 + c1 p + c2 p^2 + ... as a finite value (exponents doubled).
    static PLaurent from_p_coeffs(const std::map<int, Rational>& p_coeffs);
    static PLaurent window(int window, int validity);

    LaurentKind kind() const { return kind_; }
    bool is_window() const { return kind_ == LaurentKind::Window; }
    int window_bound() const { return window_; }
    int validity() const { return validity_; }

    // Raw coefficient access: stored value or 0, no trust check.
    Rational coeff(int w_exp) const;
    // Trust-checked access; throws window_error outside the trusted region.
    Rational coeff_checked(int w_exp) const;
    void set(int w_exp, const Rational& value);

    const std::map<int, Rational>& support() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int max_abs_exponent() const;
    int min_exponent() const;  // 0 for the zero value

    WParity parity() const;
    WSymmetry symmetry() const;
    bool is_pure_p() const;  // only even w-exponents

    PLaurent scaled(const Rational& c) const;
    PLaurent operator-() const { return scaled(Rational(-1)); }

    // Unit = single nonzero monomial; exact Laurent inverse.
    bool is_unit() const;
    PLaurent inverse() const;

    friend PLaurent operator+(const PLaurent& a, const PLaurent& b);
    friend PLaurent operator-(const PLaurent& a, const PLaurent& b);
    friend PLaurent operator*(const PLaurent& a, const PLaurent& b);

    // Coefficientwise equality through the common trusted region.
    friend bool operator==(const PLaurent& a, const PLaurent& b);
    friend bool operator!=(const PLaurent& a, const PLaurent& b) { return !(a == b); }

    friend PLaurent unit_coefficient(const PLaurent&) {
        return PLaurent::monomial(0, Rational(1));
    }

private:
    static PLaurent combine(const PLaurent& a, const PLaurent& b, int sign);

    LaurentKind kind_;
    int window_;
    int validity_;
    std::map<int, Rational> c_;  // exponent (w-units) -> nonzero coefficient
};

}  // namespace abel

#endif
