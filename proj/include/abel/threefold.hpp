#ifndef ABEL_THREEFOLD_HPP
#define ABEL_THREEFOLD_HPP

#include "abel/plaurent.hpp"
#include "abel/qseries.hpp"
#include "abel/report.hpp"
#include "abel/useries.hpp"

namespace abel {

// Curve class type (d1, d2, d3) on an abelian threefold.
struct ThreefoldClassType {
    long d1, d2, d3;
    ThreefoldClassType(long a, long b, long c);
    long degree() const { return d1 * d2 * d3; }
};

// Sign convention for Donaldson-Thomas partition functions: the stored
// q^d coefficients pair the invariants against p^n (PlainP) or against
// (-p)^n (MinusP). Conversions between the two go through sign_flip_p
// exactly once.
enum class PSign { PlainP, MinusP };

struct DTSeries {
    QSeries<PLaurent> series;
    PSign sign;
};

DTSeries to_plain_p(const DTSeries& dt);
DTSeries to_minus_p(const DTSeries& dt);

// Euler-characteristic theory in the first nontrivial vertical degree: K^2.
DTSeries dt_hat_1(int qmax, int w_bound);

// Nodal-curve bracket 1 + p/(1-p)^2 + sum_d sum_{k|d} k (p^k + p^{-k}) q^d;
// window-truncated at q^0, finite in positive q-orders.
QSeries<PLaurent> nodal_factor(int qmax, int w_bound);

// sum_a F(a) q^a = prod_m (1 - q^m) / ((1 - p q^m)(1 - p^{-1} q^m)).
QSeries<PLaurent> f_a_series(int qmax, int w_bound);

// (sum_a g(a) q^a)^{euler}; requires constant term 1.
QSeries<PLaurent> sym_prod_euler(const QSeries<PLaurent>& g, long euler);

// Stratified assembly p^{-1}(1-p)^2 (sum F(a) q^a)^{-2} prod (1-q^m)^{-2};
// equals dt_hat_1 coefficientwise.
DTSeries dt_hat_1_assembled(int qmax, int w_bound);

// Closed form of the degree-two vertical theory:
// K^4 (1/2 + 3p/(1-p)^2 + sum_d sum_{k|d} k (3(p^k+p^{-k}) q^d + 12 q^{2d})).
DTSeries dt_hat_2_closed(int qmax, int w_bound);

// Assembly from the pencil stratification: (1/4)(-10 K^4 + 12 K^4 * nodal)
// plus the diagonal-curve term K^4 * 12 sum_d sigma(d) q^{2d}.
DTSeries dt_hat_2_assembled(int qmax, int w_bound);

// Behrend-weighted theories (conjectural sign change): -K^2 and
// -(3/2) K^4 wp - (3/8) K(p^2, q^2)^2, both in the (-p)^n convention.
DTSeries dt_1(int qmax, int w_bound);
DTSeries dt_2(int qmax, int w_bound);
// Same value via the theta-function route -K^4 (3 wp + (1/4) theta_D4).
DTSeries dt_2_via_theta(int qmax, int w_bound);

// Machine check of the kernel identity
// K^4 (3 wp + (1/4) theta_D4) = (3/2) K^4 wp + (3/8) K(p^2,q^2)^2.
VerifyReport modular_identity_check(int qmax, int w_bound);

// Variable change y = -e^{iu} on a DT partition function; every stored
// q-coefficient must be symmetric with pure p-powers.
QSeries<USeries> gw_from_dt(const DTSeries& dt, int umax);

// (y + 2 + y^{-1}) prod_m (1 + y q^m)^2 (1 + y^{-1} q^m)^2 / (1 - q^m)^4,
// the curve-count series of type (1,1,d); stored in the y = -p convention.
DTSeries gw_11d_series(int qmax, int w_bound);

// u^{2g-2} coefficient of sum_{k | gcd(d',d)} (1/k) f_{(1,1,d'd/k^2)}(k u).
Rational mc_threefold_f(int g, long d_prime, long d);

// n(d1,d2,d3,k) = sum of delta^2 over divisors delta of
// gcd(k, d1, d2, d3, d1d2/k, d1d3/k, d2d3/k, d1d2d3/k^2).
long n_mc_factor(long d1, long d2, long d3, long k);

// Multiple-cover value sum_k n(d1,d2,d3,k) k^{2g-3} N_{g,(1,1,deg/k^2)}
// with primitives read from gw_from_dt(dt_1).
Rational n_g_imprimitive(int g, const ThreefoldClassType& t);

// Multiple-cover rule on the DT side, primitives read from dt_1.
Rational dt_mc(long n, const ThreefoldClassType& t);

// Degenerate horizontal classes: ((-1)^{n-1}/n) sum_{k | gcd(n,d)} k^2.
Rational dt_degenerate(long n, long d);

// 12 sigma(d/2) isolated diagonal classes for even d > 0, else 0.
long diagonal_count(long d);

// Per-degree check g_d = f_{2d} (+ (1/2) f_{d/2}(p^2) for even d), with
// f from K^2 and g from (3/2) K^4 wp + (3/8) K(p^2,q^2)^2.
VerifyReport consistency_fg(int dmax, int w_bound);

}  // namespace abel

#endif
