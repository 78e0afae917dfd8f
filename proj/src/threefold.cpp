#include "abel/threefold.hpp"

#include <numeric>

#include "abel/error.hpp"
#include "abel/lattice.hpp"
#include "abel/modular.hpp"
#include "abel/series_ops.hpp"

namespace abel {

namespace {

QSeries<PLaurent> kernel_sq(int qmax, int w_bound) {
    QSeries<PLaurent> k = theta_K_pq(qmax, w_bound);
    return k * k;
}

QSeries<PLaurent> mul_const(const QSeries<PLaurent>& a, const PLaurent& c) {
    QSeries<PLaurent> r(a.order(), a.zero_proto());
    for (int d = 0; d <= a.order(); ++d) r.set(d, a[d] * c);
    return r;
}

int max_support(const QSeries<PLaurent>& a) {
    int m = 0;
    for (int d = 0; d <= a.order(); ++d)
        m = std::max(m, a[d].max_abs_exponent());
    return m;
}

void require_window(const QSeries<PLaurent>& finite_factor, int w_bound,
                    const char* who) {
    int need = max_support(finite_factor);
    if (need > w_bound)
        throw window_error(std::string(who) + ": window " +
                           std::to_string(w_bound) + " insufficient, need >= " +
                           std::to_string(need));
}

long parity_sign(long n) { return (n % 2 != 0) ? -1 : 1; }

}  // namespace

ThreefoldClassType::ThreefoldClassType(long a, long b, long c)
    : d1(a), d2(b), d3(c) {
    if (d1 < 1 || d2 < 1 || d3 < 0)
        throw precondition_error(
            "ThreefoldClassType: need d1, d2 >= 1 and d3 >= 0");
}

DTSeries to_plain_p(const DTSeries& dt) {
    if (dt.sign == PSign::PlainP) return dt;
    return {sign_flip_p(dt.series), PSign::PlainP};
}

DTSeries to_minus_p(const DTSeries& dt) {
    if (dt.sign == PSign::MinusP) return dt;
    return {sign_flip_p(dt.series), PSign::MinusP};
}

DTSeries dt_hat_1(int qmax, int w_bound) {
    return {kernel_sq(qmax, w_bound), PSign::PlainP};
}

QSeries<PLaurent> nodal_factor(int qmax, int w_bound) {
    QSeries<PLaurent> n = qseries_plaurent(qmax);
    PLaurent q0 = PLaurent::window(w_bound, w_bound);
    q0.set(0, Rational(1));
    for (int k = 1; 2 * k <= w_bound; ++k) q0.set(2 * k, Rational(k));
    n.set(0, q0);
    for (int d = 1; d <= qmax; ++d) {
        PLaurent c;
        for (long k = 1; k <= d; ++k) {
            if (d % k != 0) continue;
            c.set(2 * k, c.coeff(2 * k) + Rational(k));
            c.set(-2 * k, c.coeff(-2 * k) + Rational(k));
        }
        n.set(d, c);
    }
    return n;
}

QSeries<PLaurent> f_a_series(int qmax, int w_bound) {
    std::vector<ProductFactor> factors = {
        {Rational(1), 0, 1, 1},
        {Rational(1), 2, 1, -1},
        {Rational(1), -2, 1, -1},
    };
    return product_form(factors, unit_coefficient(PLaurent()), qmax, w_bound);
}

QSeries<PLaurent> sym_prod_euler(const QSeries<PLaurent>& g, long euler) {
    if (!(g[0] == unit_coefficient(PLaurent())))
        throw precondition_error("sym_prod_euler: constant term must be 1");
    return qpow(g, euler);
}

DTSeries dt_hat_1_assembled(int qmax, int w_bound) {
    QSeries<PLaurent> fa_pow = sym_prod_euler(f_a_series(qmax, w_bound), -2);
    QSeries<PLaurent> points = product_form({{Rational(1), 0, 1, -2}},
                                            unit_coefficient(PLaurent()), qmax,
                                            w_bound);
    PLaurent prefactor;  // p^{-1}(1-p)^2 = p - 2 + p^{-1}
    prefactor.set(2, Rational(1));
    prefactor.set(0, Rational(-2));
    prefactor.set(-2, Rational(1));
    return {mul_const(fa_pow * points, prefactor), PSign::PlainP};
}

DTSeries dt_hat_2_closed(int qmax, int w_bound) {
    QSeries<PLaurent> k4 = qpow(kernel_sq(qmax, w_bound), 2);
    QSeries<PLaurent> bracket = qseries_plaurent(qmax);
    PLaurent q0 = PLaurent::window(w_bound, w_bound);
    q0.set(0, Rational(1, 2));
    for (int k = 1; 2 * k <= w_bound; ++k) q0.set(2 * k, Rational(3 * k));
    bracket.set(0, q0);
    for (int d = 1; d <= qmax; ++d) {
        PLaurent c;
        for (long k = 1; k <= d; ++k) {
            if (d % k != 0) continue;
            c.set(2 * k, c.coeff(2 * k) + Rational(3 * k));
            c.set(-2 * k, c.coeff(-2 * k) + Rational(3 * k));
        }
        if (d % 2 == 0)
            c.set(0, c.coeff(0) + Rational(12 * divisor_sigma(d / 2)));
        bracket.set(d, c);
    }
    require_window(k4, w_bound, "dt_hat_2_closed");
    return {k4 * bracket, PSign::PlainP};
}

DTSeries dt_hat_2_assembled(int qmax, int w_bound) {
    QSeries<PLaurent> k4 = qpow(kernel_sq(qmax, w_bound), 2);
    require_window(k4, w_bound, "dt_hat_2_assembled");
    QSeries<PLaurent> vertical =
        (k4.scaled(Rational(-10)) +
         (k4 * nodal_factor(qmax, w_bound)).scaled(Rational(12)))
            .scaled(Rational(1, 4));
    QSeries<Rational> diag = qseries_rational(qmax);
    for (int d = 1; 2 * d <= qmax; ++d)
        diag.set(2 * d, Rational(12 * divisor_sigma(d)));
    return {vertical + mul_scalar_series(k4, diag), PSign::PlainP};
}

DTSeries dt_1(int qmax, int w_bound) {
    return {-kernel_sq(qmax, w_bound), PSign::MinusP};
}

DTSeries dt_2(int qmax, int w_bound) {
    QSeries<PLaurent> k2 = kernel_sq(qmax, w_bound);
    QSeries<PLaurent> k4 = k2 * k2;
    require_window(k4, w_bound, "dt_2");
    QSeries<PLaurent> wp = weierstrass_p(qmax, w_bound);
    QSeries<PLaurent> total = (k4 * wp).scaled(Rational(-3, 2)) +
                              dilate(k2, 2, 2).scaled(Rational(-3, 8));
    return {total, PSign::MinusP};
}

DTSeries dt_2_via_theta(int qmax, int w_bound) {
    QSeries<PLaurent> k2 = kernel_sq(qmax, w_bound);
    QSeries<PLaurent> k4 = k2 * k2;
    require_window(k4, w_bound, "dt_2_via_theta");
    QSeries<PLaurent> wp = weierstrass_p(qmax, w_bound);
    QSeries<PLaurent> total =
        (k4 * wp).scaled(Rational(3)) +
        mul_scalar_series(k4, theta_d4(qmax)).scaled(Rational(1, 4));
    return {-total, PSign::MinusP};
}

VerifyReport modular_identity_check(int qmax, int w_bound) {
    VerifyReport report;
    report.check = "modular-identity";
    QSeries<PLaurent> k2 = kernel_sq(qmax, w_bound);
    QSeries<PLaurent> k4 = k2 * k2;
    require_window(k4, w_bound, "modular_identity_check");
    QSeries<PLaurent> wp = weierstrass_p(qmax, w_bound);
    QSeries<PLaurent> lhs =
        (k4 * wp).scaled(Rational(3)) +
        mul_scalar_series(k4, theta_d4(qmax)).scaled(Rational(1, 4));
    QSeries<PLaurent> rhs = (k4 * wp).scaled(Rational(3, 2)) +
                            dilate(k2, 2, 2).scaled(Rational(3, 8));
    SeriesComparison cmp = compare_series(lhs, rhs);
    report.region = cmp.region;
    report.verdict = cmp.equal ? Verdict::Pass : Verdict::Fail;
    report.locator = cmp.locator;
    return report;
}

QSeries<USeries> gw_from_dt(const DTSeries& dt, int umax) {
    return symmetric_p_to_u(to_minus_p(dt).series, umax);
}

DTSeries gw_11d_series(int qmax, int w_bound) {
    PLaurent leading;  // y + 2 + y^{-1}
    leading.set(2, Rational(1));
    leading.set(0, Rational(2));
    leading.set(-2, Rational(1));
    std::vector<ProductFactor> factors = {
        {Rational(-1), 2, 1, 2},
        {Rational(-1), -2, 1, 2},
        {Rational(1), 0, 1, -4},
    };
    return {product_form(factors, leading, qmax, w_bound), PSign::MinusP};
}

Rational mc_threefold_f(int g, long d_prime, long d) {
    if (g < 2) throw precondition_error("mc_threefold_f: genus must be >= 2");
    if (d_prime < 1 || d < 1)
        throw precondition_error("mc_threefold_f: degrees must be >= 1");
    int qmax = (int)(d_prime * d);
    QSeries<USeries> gw =
        gw_from_dt(dt_1(qmax, 2 * qmax + 4), 2 * g - 2);
    Rational total(0);
    long gcd_dd = std::gcd(d_prime, d);
    for (long k = 1; k <= gcd_dd; ++k) {
        if (gcd_dd % k != 0) continue;
        // (1/k) f(ku) contributes k^{2g-3} at u^{2g-2}.
        long target = d_prime * d / (k * k);
        total += Rational(k).pow(2 * g - 3) * coeff(gw, (int)target, 2 * g - 2);
    }
    return total;
}

long n_mc_factor(long d1, long d2, long d3, long k) {
    if (k < 1) throw precondition_error("n_mc_factor: k must be >= 1");
    long pair_gcd = std::gcd(std::gcd(d1 * d2, d1 * d3), d2 * d3);
    if (pair_gcd % k != 0 || (d1 * d2 * d3) % (k * k) != 0)
        throw precondition_error(
            "n_mc_factor: k must divide the pairwise products with k^2 "
            "dividing d1 d2 d3");
    long g = k;
    g = std::gcd(g, d1);
    g = std::gcd(g, d2);
    g = std::gcd(g, d3);
    g = std::gcd(g, d1 * d2 / k);
    g = std::gcd(g, d1 * d3 / k);
    g = std::gcd(g, d2 * d3 / k);
    g = std::gcd(g, d1 * d2 * d3 / (k * k));
    long total = 0;
    for (long delta = 1; delta <= g; ++delta)
        if (g % delta == 0) total += delta * delta;
    return total;
}

Rational n_g_imprimitive(int g, const ThreefoldClassType& t) {
    if (g < 2) throw precondition_error("n_g_imprimitive: genus must be >= 2");
    long deg = t.degree();
    int qmax = (int)deg;
    QSeries<USeries> gw =
        gw_from_dt(dt_1(qmax, 2 * qmax + 4), 2 * g - 2);
    long pair_gcd = std::gcd(std::gcd(t.d1 * t.d2, t.d1 * t.d3), t.d2 * t.d3);
    Rational total(0);
    for (long k = 1; k <= pair_gcd; ++k) {
        if (pair_gcd % k != 0) continue;
        if (deg % (k * k) != 0) continue;
        long target = deg / (k * k);
        total += Rational(n_mc_factor(t.d1, t.d2, t.d3, k)) *
                 Rational(k).pow(2 * g - 3) * coeff(gw, (int)target, 2 * g - 2);
    }
    return total;
}

Rational dt_mc(long n, const ThreefoldClassType& t) {
    int positive = (t.d1 > 0) + (t.d2 > 0) + (t.d3 > 0);
    if (n == 0 && positive < 2)
        throw precondition_error(
            "dt_mc: n = 0 requires at least two positive entries");
    long deg = t.degree();
    int qmax = (int)deg;
    DTSeries base = dt_1(qmax, 2 * qmax + 4);
    long pair_gcd = std::gcd(std::gcd(t.d1 * t.d2, t.d1 * t.d3), t.d2 * t.d3);
    long k_range = std::gcd(std::labs(n), pair_gcd);  // gcd(0, x) = x
    Rational total(0);
    for (long k = 1; k <= k_range; ++k) {
        if (k_range % k != 0) continue;
        if (deg % (k * k) != 0) continue;
        long target = deg / (k * k);
        long m = n / k;
        // DT_{m,(1,1,target)} read through the (-p)^n convention.
        Rational primitive =
            Rational(parity_sign(m)) * coeff(base.series, (int)target, (int)m);
        Rational term = Rational(n_mc_factor(t.d1, t.d2, t.d3, k), k) *
                        Rational(parity_sign(n - m)) * primitive;
        total += term;
    }
    return total;
}

Rational dt_degenerate(long n, long d) {
    if (n < 1) throw precondition_error("dt_degenerate: n must be >= 1");
    if (d < 0) throw precondition_error("dt_degenerate: d must be >= 0");
    long g = std::gcd(n, d);
    long sum = 0;
    for (long k = 1; k <= g; ++k)
        if (g % k == 0) sum += k * k;
    return Rational(parity_sign(n - 1) * sum, n);
}

long diagonal_count(long d) {
    if (d < 0) throw precondition_error("diagonal_count: d must be >= 0");
    if (d == 0 || d % 2 != 0) return 0;
    return 12 * divisor_sigma(d / 2);
}

VerifyReport consistency_fg(int dmax, int w_bound) {
    VerifyReport report;
    report.check = "fg-consistency";
    int qmax = 2 * dmax;
    QSeries<PLaurent> f = kernel_sq(qmax, w_bound);
    QSeries<PLaurent> k2 = f.truncated(dmax);
    QSeries<PLaurent> k4 = k2 * k2;
    require_window(k4, w_bound, "consistency_fg");
    QSeries<PLaurent> wp = weierstrass_p(dmax, w_bound);
    QSeries<PLaurent> g_series = (k4 * wp).scaled(Rational(3, 2)) +
                                 dilate(k2, 2, 2).scaled(Rational(3, 8));

    QSeries<PLaurent> rhs = qseries_plaurent(dmax);
    for (int d = 0; d <= dmax; ++d) {
        PLaurent val = f[2 * d];
        if (d % 2 == 0)
            val = val + p_dilate(f[d / 2], 2).scaled(Rational(1, 2));
        rhs.set(d, val);
    }
    SeriesComparison cmp = compare_series(g_series, rhs);
    report.region = cmp.region;
    report.verdict = cmp.equal ? Verdict::Pass : Verdict::Fail;
    report.locator = cmp.locator;
    return report;
}

}  // namespace abel
