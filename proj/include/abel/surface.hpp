#ifndef ABEL_SURFACE_HPP
#define ABEL_SURFACE_HPP

#include <string>
#include <vector>

#include "abel/plaurent.hpp"
#include "abel/qseries.hpp"
#include "abel/rational.hpp"
#include "abel/useries.hpp"

namespace abel {

// Curve class type (d1, d2) on an abelian surface; primitive iff coprime.
struct SurfaceClassType {
    long d1, d2;
    SurfaceClassType(long a, long b);
    bool primitive() const;
    long degree() const { return d1 * d2; }
};

// Labeled table of exact values with a formula tag per cell.
struct InvariantTable {
    std::string row_label, col_label;
    std::vector<long> rows, cols;
    std::vector<std::vector<Rational>> cells;       // [row][col]
    std::vector<std::vector<std::string>> sources;  // formula name per cell
};

// Genus g count in a fixed linear system:
//   (d1 d2)^2 * 2 (-1)^(g-2) / (2g-2)! * sum_{k | gcd} sum_{m | d1d2/k^2}
//   k^{2g-1} m^{2g-3}.
Rational n_fls(int g, const SurfaceClassType& t);

// Count up to translation: n_fls / (d1 d2)^2.
Rational n_quotient(int g, const SurfaceClassType& t);

// Multiple-cover evaluation of the u^{2g-2} coefficient of
// sum_{k | gcd} k f_{(1, d1d2/k^2)}(k u), primitive inputs from n_quotient.
Rational multiple_cover_surface(int g, const SurfaceClassType& t);

// Generating series q d/dq (S^{k+1} / (k+1)) in the u-regime:
// the coefficient of u^{2g-2} q^d is the genus-g count with k point
// insertions in a primitive class of degree d.
QSeries<USeries> fls_point_series(int k, int qmax, int umax);

// Signed Euler characteristics of stable-pairs moduli in primitive
// classes: - sum_{d>=1} sum_{m|d} (d^2/m) (p^m - 2 + p^{-m}) q^d.
QSeries<PLaurent> gs_stable_pairs_series(int qmax);

// Virtual hyperelliptic series (q d/dq)^2 K^4 / 4 in the u-regime.
QSeries<USeries> hyp_H_series(int qmax, int umax);

// Hyperelliptic counts h_g(d) for 2 <= g <= gmax, 1 <= d <= dmax, from the
// H-series after substituting the inverse of r = 2sin(u/2). Cells are
// asserted integral; a non-integer is an internal error, never rounded.
InvariantTable hyp_h_table(int gmax, int dmax);

// Closed genus 3 hyperelliptic count: d^2 sum_{m|d} m (3m^2 + 1 - 4d) / 4.
Rational hyp3_closed(long d);

// Non-vanishing criterion:
//   (g-1) + floor((g-1)/4) * ((g-1) - 2 floor((g-1)/4) - 2) <= d.
bool hyp_nonvanishing(int g, long d);

// Degenerate genus 1 invariant sigma(d)/d.
Rational genus1_degenerate(long d);

}  // namespace abel

#endif
