#ifndef ABEL_MODULAR_HPP
#define ABEL_MODULAR_HPP

#include "abel/plaurent.hpp"
#include "abel/qseries.hpp"
#include "abel/series_ops.hpp"
#include "abel/useries.hpp"

namespace abel {

// Exact Bernoulli number B_k for even k >= 2 (B_2 = 1/6).
Rational bernoulli(int k);

// E_{2k} = 1 - (4k / B_{2k}) sum_{d>=1} sigma_{2k-1}(d) q^d.
QSeries<Rational> eisenstein(int weight, int qmax);

// Jacobi theta kernel, product form:
//   (w - w^{-1}) prod_{m>=1} (1 - p q^m)(1 - p^{-1} q^m) / (1 - q^m)^2,
// finite antisymmetric odd-in-w coefficients.
QSeries<PLaurent> theta_K_pq(int qmax, int w_bound);

// Same kernel divided by i, exponential form:
//   u * exp( sum_{k>=1} (-1)^k B_{2k} / (2k (2k)!) E_{2k} u^{2k} ),
// odd u-series per q-order with leading term u at q^0.
QSeries<USeries> theta_K_u(int qmax, int umax);

// Weierstrass elliptic function expanded in |p| < 1:
//   1/12 + p/(1-p)^2 + sum_{d>=1} sum_{m|d} m (p^m - 2 + p^{-m}) q^d;
// the q^0 coefficient is window-truncated, the rest are finite.
QSeries<PLaurent> weierstrass_p(int qmax, int w_bound);

// Theta function of the D4 lattice: 1 + 24 sum_d (sum_{k|d, k odd} k) q^d.
QSeries<Rational> theta_d4(int qmax);

// S = - sum_{d>=1} sum_{m|d} (d/m) (p^m - 2 + p^{-m}) q^d.
QSeries<PLaurent> s_function(int qmax);

}  // namespace abel

#endif
