#ifndef ABEL_SERIES_OPS_HPP
#define ABEL_SERIES_OPS_HPP

#include <string>
#include <vector>

#include "abel/plaurent.hpp"
#include "abel/qseries.hpp"
#include "abel/useries.hpp"

namespace abel {

// One family of Pochhammer-type factors: the product over m >= 1 of
//   (1 - coeff * w^{w_exp} * q^{q_stride * m})^{outer_exp}.
struct ProductFactor {
    Rational coeff;
    int w_exp;
    int q_stride;   // >= 1
    int outer_exp;  // any integer; negative expands the geometric inverse
};

// Exact expansion of leading * prod(factors) through q^{qmax}. All factor
// families are truncated at q^{qmax}. Throws window_error if any
// coefficient's support exceeds w_bound.
QSeries<PLaurent> product_form(const std::vector<ProductFactor>& factors,
                               const PLaurent& leading, int qmax, int w_bound);

// Substitutes p -> p^{k_p}, q -> q^{k_q}; the output order equals the
// input order (coefficients of q^d vanish unless k_q | d).
QSeries<PLaurent> dilate(const QSeries<PLaurent>& a, int k_p, int k_q);

// Multiplies the coefficient of p^n by (-1)^n; requires pure p-powers.
QSeries<PLaurent> sign_flip_p(const QSeries<PLaurent>& a);

// c0 + sum c_n (p^n + p^{-n})  |->  c0 + sum c_n * 2cos(nu).
// Every coefficient must be finite, pure p-powers and symmetric.
QSeries<USeries> symmetric_p_to_u(const QSeries<PLaurent>& a, int umax);

// sum c_n (w^n - w^{-n})  |->  sum c_n * 2sin(nu/2), the rational
// (divided by i) u-form of antisymmetric odd-in-w data.
QSeries<USeries> antisymmetric_w_to_u(const QSeries<PLaurent>& a, int umax);

// Coefficientwise product with a scalar q-series.
template <typename C>
QSeries<C> mul_scalar_series(const QSeries<C>& a, const QSeries<Rational>& s) {
    QSeries<C> r(std::min(a.order(), s.order()), a.zero_proto());
    for (int i = 0; i <= std::min(a.order(), r.order()); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= r.order() && j <= s.order(); ++j) {
            if (s[j].is_zero()) continue;
            r.set(i + j, r[i + j] + a[i].scaled(s[j]));
        }
    }
    return r;
}

// Exact coefficient extraction with range checks.
template <typename C>
C coeff(const QSeries<C>& a, int q_exp) {
    if (q_exp < 0 || q_exp > a.order())
        throw precondition_error("coeff: q exponent out of range");
    return a[q_exp];
}
Rational coeff(const QSeries<PLaurent>& a, int q_exp, int p_exp);
Rational coeff(const QSeries<USeries>& a, int q_exp, int u_exp);

// Convenience builders.
QSeries<Rational> qseries_rational(int order);
QSeries<PLaurent> qseries_plaurent(int order);
QSeries<USeries> qseries_useries(int order, int umax);

// p -> p^k on a single coefficient (w-exponents scaled by k).
PLaurent p_dilate(const PLaurent& f, int k);

// Equality through the common trusted region, with the region actually
// compared and a first-discrepancy locator for reporting.
struct SeriesComparison {
    bool equal = true;
    std::string region;
    std::string locator;  // empty when equal
};
SeriesComparison compare_series(const QSeries<PLaurent>& a,
                                const QSeries<PLaurent>& b);
SeriesComparison compare_series(const QSeries<USeries>& a,
                                const QSeries<USeries>& b);
SeriesComparison compare_series(const QSeries<Rational>& a,
                                const QSeries<Rational>& b);

}  // namespace abel

#endif
