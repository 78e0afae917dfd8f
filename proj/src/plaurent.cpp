#include "abel/plaurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "abel/error.hpp"

namespace abel {

namespace {
constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;
}

PLaurent PLaurent::monomial(int w_exp, const Rational& coeff) {
    PLaurent f;
    if (!coeff.is_zero()) f.c_[w_exp] = coeff;
    return f;
}

PLaurent PLaurent::from_p_coeffs(const std::map<int, Rational>& p_coeffs) {
    PLaurent f;
    for (const auto& [k, v] : p_coeffs)
        if (!v.is_zero()) f.c_[2 * k] = v;
    return f;
}

PLaurent PLaurent::window(int window, int validity) {
    if (window < 0 || validity < 0 || validity > window)
        throw precondition_error("PLaurent: need 0 <= validity <= window");
    PLaurent f;
    f.kind_ = LaurentKind::Window;
    f.window_ = window;
    f.validity_ = validity;
    return f;
}

Rational PLaurent::coeff(int w_exp) const {
    auto it = c_.find(w_exp);
    return it == c_.end() ? Rational(0) : it->second;
}

Rational PLaurent::coeff_checked(int w_exp) const {
    if (is_window() && std::abs(w_exp) > validity_)
        throw window_error("PLaurent: exponent outside trusted window");
    return coeff(w_exp);
}

void PLaurent::set(int w_exp, const Rational& value) {
    if (is_window() && std::abs(w_exp) > window_)
        throw window_error("PLaurent: exponent outside window");
    if (value.is_zero())
        c_.erase(w_exp);
    else
        c_[w_exp] = value;
}

int PLaurent::max_abs_exponent() const {
    if (c_.empty()) return 0;
    return std::max(std::abs(c_.begin()->first), std::abs(c_.rbegin()->first));
}

int PLaurent::min_exponent() const {
    return c_.empty() ? 0 : c_.begin()->first;
}

WParity PLaurent::parity() const {
    bool even = true, odd = true;
    for (const auto& [e, v] : c_) {
        (void)v;
        if (e % 2 == 0) odd = false;
        else even = false;
    }
    if (even) return WParity::EvenInW;
    if (odd) return WParity::OddInW;
    return WParity::Mixed;
}

WSymmetry PLaurent::symmetry() const {
    bool sym = true, anti = true;
    for (const auto& [e, v] : c_) {
        Rational mirror = coeff(-e);
        if (v != mirror) sym = false;
        if (v != -mirror) anti = false;
    }
    if (sym) return WSymmetry::Symmetric;
    if (anti) return WSymmetry::Antisymmetric;
    return WSymmetry::None;
}

bool PLaurent::is_pure_p() const { return parity() == WParity::EvenInW; }

PLaurent PLaurent::scaled(const Rational& c) const {
    PLaurent f = *this;
    if (c.is_zero()) {
        f.c_.clear();
        return f;
    }
    for (auto& [e, v] : f.c_) {
        (void)e;
        v *= c;
    }
    return f;
}

bool PLaurent::is_unit() const {
    return kind_ == LaurentKind::Finite && c_.size() == 1;
}

PLaurent PLaurent::inverse() const {
    if (!is_unit())
        throw precondition_error("PLaurent: only monomials are invertible");
    const auto& [e, v] = *c_.begin();
    return monomial(-e, v.inverse());
}

PLaurent PLaurent::combine(const PLaurent& a, const PLaurent& b, int sign) {
    PLaurent r;
    if (a.is_window() || b.is_window()) {
        int w = std::min(a.is_window() ? a.window_ : kUnbounded,
                         b.is_window() ? b.window_ : kUnbounded);
        int v = std::min(a.is_window() ? a.validity_ : kUnbounded,
                         b.is_window() ? b.validity_ : kUnbounded);
        r = PLaurent::window(w, std::min(v, w));
    }
    // Entries beyond the trusted region are dropped, never stored.
    for (const auto& [e, v] : a.c_)
        if (!r.is_window() || std::abs(e) <= r.validity_) r.set(e, v);
    for (const auto& [e, v] : b.c_) {
        if (r.is_window() && std::abs(e) > r.validity_) continue;
        r.set(e, r.coeff(e) + (sign > 0 ? v : -v));
    }
    return r;
}

PLaurent operator+(const PLaurent& a, const PLaurent& b) {
    return PLaurent::combine(a, b, +1);
}

PLaurent operator-(const PLaurent& a, const PLaurent& b) {
    return PLaurent::combine(a, b, -1);
}

PLaurent operator*(const PLaurent& a, const PLaurent& b) {
    if (!a.is_window() && !b.is_window()) {
        PLaurent r;
        for (const auto& [i, av] : a.c_)
            for (const auto& [j, bv] : b.c_) {
                Rational acc = r.coeff(i + j) + av * bv;
                r.set(i + j, acc);
            }
        return r;
    }

    // At least one window-truncated factor. Finite times window of validity
    // V is exact on |e| <= V - M, where M is the max |exponent| of the
    // finite factor. Window times window is exact on
    // e <= min(V_a + floor_b, V_b + floor_a), floor being the exact lower
    // support bound of the |p| < 1 expansion.
    int window = std::min(a.is_window() ? a.window_bound() : kUnbounded,
                          b.is_window() ? b.window_bound() : kUnbounded);
    long validity = kUnbounded;
    if (a.is_window() && !b.is_window())
        validity = a.validity() - b.max_abs_exponent();
    else if (b.is_window() && !a.is_window())
        validity = b.validity() - a.max_abs_exponent();
    else {
        long floor_a = a.is_zero() ? kUnbounded : a.min_exponent();
        long floor_b = b.is_zero() ? kUnbounded : b.min_exponent();
        validity = std::min((long)a.validity() + floor_b,
                            (long)b.validity() + floor_a);
    }
    validity = std::min(validity, (long)window);
    if (validity < 0)
        throw window_error("PLaurent: product has no trusted region");

    PLaurent r = PLaurent::window(window, (int)validity);
    for (const auto& [i, av] : a.c_)
        for (const auto& [j, bv] : b.c_) {
            if (std::abs(i + j) > (int)validity) continue;
            Rational acc = r.coeff(i + j) + av * bv;
            r.set(i + j, acc);
        }
    return r;
}

bool operator==(const PLaurent& a, const PLaurent& b) {
    if (!a.is_window() && !b.is_window()) return a.c_ == b.c_;
    int v = std::min(a.is_window() ? a.validity_ : kUnbounded,
                     b.is_window() ? b.validity_ : kUnbounded);
    for (int e = -v; e <= v; ++e)
        if (a.coeff(e) != b.coeff(e)) return false;
    return true;
}

}  // namespace abel
