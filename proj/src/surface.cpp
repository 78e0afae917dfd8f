#include "abel/surface.hpp"

#include <numeric>

#include "abel/error.hpp"
#include "abel/lattice.hpp"
#include "abel/modular.hpp"
#include "abel/series_ops.hpp"

namespace abel {

SurfaceClassType::SurfaceClassType(long a, long b) : d1(a), d2(b) {
    if (d1 < 1 || d2 < 1)
        throw precondition_error("SurfaceClassType: entries must be positive");
}

bool SurfaceClassType::primitive() const { return std::gcd(d1, d2) == 1; }

Rational n_fls(int g, const SurfaceClassType& t) {
    if (g < 2) throw precondition_error("n_fls: genus must be >= 2");
    long n = t.degree();
    Rational sum(0);
    long gcd12 = std::gcd(t.d1, t.d2);
    for (long k = 1; k <= gcd12; ++k) {
        if (gcd12 % k != 0) continue;
        long rest = n / (k * k);
        for (long m = 1; m <= rest; ++m) {
            if (rest % m != 0) continue;
            sum += Rational(k).pow(2 * g - 1) * Rational(m).pow(2 * g - 3);
        }
    }
    Rational pref = Rational(2 * n * n) / factorial(2 * g - 2);
    if (g % 2 == 1) pref = -pref;  // (-1)^(g-2)
    return pref * sum;
}

Rational n_quotient(int g, const SurfaceClassType& t) {
    return n_fls(g, t) / Rational(t.degree() * t.degree());
}

Rational multiple_cover_surface(int g, const SurfaceClassType& t) {
    if (g < 2) throw precondition_error("multiple_cover_surface: genus >= 2");
    long n = t.degree();
    long gcd12 = std::gcd(t.d1, t.d2);
    Rational total(0);
    for (long k = 1; k <= gcd12; ++k) {
        if (gcd12 % k != 0) continue;
        // k * f_{(1, n/k^2)}(k u) contributes k * k^{2g-2} at u^{2g-2}.
        total += Rational(k).pow(2 * g - 1) *
                 n_quotient(g, SurfaceClassType(1, n / (k * k)));
    }
    return total;
}

QSeries<USeries> fls_point_series(int k, int qmax, int umax) {
    if (k < 0) throw precondition_error("fls_point_series: k must be >= 0");
    QSeries<USeries> s_u = symmetric_p_to_u(s_function(qmax), umax);
    QSeries<USeries> powered = qpow(s_u, k + 1).scaled(Rational(1, k + 1));
    return powered.q_derivative();
}

QSeries<PLaurent> gs_stable_pairs_series(int qmax) {
    QSeries<PLaurent> s = qseries_plaurent(qmax);
    for (int d = 1; d <= qmax; ++d) {
        PLaurent c;
        for (long m = 1; m <= d; ++m) {
            if (d % m != 0) continue;
            Rational w(-(long)d * d / m);
            c.set(2 * m, c.coeff(2 * m) + w);
            c.set(0, c.coeff(0) - Rational(2) * w);
            c.set(-2 * m, c.coeff(-2 * m) + w);
        }
        s.set(d, c);
    }
    return s;
}

QSeries<USeries> hyp_H_series(int qmax, int umax) {
    QSeries<USeries> k4 = qpow(theta_K_u(qmax, umax), 4);
    return k4.q_derivative().q_derivative().scaled(Rational(1, 4));
}

InvariantTable hyp_h_table(int gmax, int dmax) {
    if (gmax < 2 || dmax < 1)
        throw precondition_error("hyp_h_table: need gmax >= 2 and dmax >= 1");
    // Reading h_g for g <= gmax needs orders 2 gmax + 2; over-provision by 2.
    int umax = 2 * gmax + 4;
    QSeries<USeries> H = hyp_H_series(dmax, umax);
    USeries u_of_r = revert_odd(sin2n_half_series(umax, 1));

    InvariantTable table;
    table.row_label = "g";
    table.col_label = "d";
    for (int g = 2; g <= gmax; ++g) table.rows.push_back(g);
    for (int d = 1; d <= dmax; ++d) table.cols.push_back(d);
    table.cells.assign(table.rows.size(),
                       std::vector<Rational>(table.cols.size(), Rational(0)));
    table.sources.assign(table.rows.size(),
                         std::vector<std::string>(table.cols.size(),
                                                  "hyp_h_table"));
    for (int d = 1; d <= dmax; ++d) {
        USeries in_r = compose_even(H[d], u_of_r);
        for (int g = 2; g <= gmax; ++g) {
            const Rational& cell = in_r[2 * g + 2];
            if (!cell.is_integer())
                throw integrality_error("hyp_h_table: non-integer count at g=" +
                                        std::to_string(g) + ", d=" +
                                        std::to_string(d) + ": " + cell.str());
            table.cells[g - 2][d - 1] = cell;
        }
    }
    return table;
}

Rational hyp3_closed(long d) {
    if (d < 1) throw precondition_error("hyp3_closed: degree must be >= 1");
    Rational sum(0);
    for (long m = 1; m <= d; ++m) {
        if (d % m != 0) continue;
        sum += Rational(m * (3 * m * m + 1 - 4 * d), 4);
    }
    return Rational(d * d) * sum;
}

bool hyp_nonvanishing(int g, long d) {
    if (g < 2 || d < 1)
        throw precondition_error("hyp_nonvanishing: need g >= 2 and d >= 1");
    long a = g - 1;
    long f = a / 4;
    return a + f * (a - 2 * f - 2) <= d;
}

Rational genus1_degenerate(long d) {
    if (d < 1) throw precondition_error("genus1_degenerate: degree must be >= 1");
    return Rational(divisor_sigma(d), d);
}

}  // namespace abel
