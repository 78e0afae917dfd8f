#include "abel/modular.hpp"

#include "abel/error.hpp"

namespace abel {

Rational bernoulli(int k) {
    if (k < 2 || k % 2 != 0)
        throw precondition_error("bernoulli: weight must be even and >= 2");
    std::vector<Rational> b(k + 1);
    b[0] = Rational(1);
    for (int m = 1; m <= k; ++m) {
        Rational acc(0);
        for (int j = 0; j < m; ++j) acc += binomial(m + 1, j) * b[j];
        b[m] = -acc / Rational(m + 1);
    }
    return b[k];
}

QSeries<Rational> eisenstein(int weight, int qmax) {
    if (weight < 2 || weight % 2 != 0)
        throw precondition_error("eisenstein: weight must be even and >= 2");
    int k = weight / 2;
    Rational prefactor = Rational(-4 * k) / bernoulli(weight);
    QSeries<Rational> e = qseries_rational(qmax);
    e.set(0, Rational(1));
    for (int d = 1; d <= qmax; ++d) {
        Rational sigma(0);
        for (long m = 1; m <= d; ++m)
            if (d % m == 0) sigma += Rational(m).pow(weight - 1);
        e.set(d, prefactor * sigma);
    }
    return e;
}

QSeries<PLaurent> theta_K_pq(int qmax, int w_bound) {
    PLaurent leading;
    leading.set(1, Rational(1));
    leading.set(-1, Rational(-1));
    std::vector<ProductFactor> factors = {
        {Rational(1), 2, 1, 1},
        {Rational(1), -2, 1, 1},
        {Rational(1), 0, 1, -2},
    };
    return product_form(factors, leading, qmax, w_bound);
}

QSeries<USeries> theta_K_u(int qmax, int umax) {
    // Exponent sum: c_k = (-1)^k B_{2k} / (2k (2k)!), paired with E_{2k} u^{2k}.
    QSeries<USeries> expo = qseries_useries(qmax, umax);
    for (int k = 1; 2 * k <= umax; ++k) {
        Rational ck = bernoulli(2 * k) / (Rational(2 * k) * factorial(2 * k));
        if (k % 2 == 1) ck = -ck;
        QSeries<Rational> e = eisenstein(2 * k, qmax);
        for (int d = 0; d <= qmax; ++d) {
            USeries u = expo[d];
            u.set(2 * k, u[2 * k] + ck * e[d]);
            expo.set(d, u);
        }
    }
    // exp via the u-adic expansion: every coefficient of expo starts at u^2.
    QSeries<USeries> result = qseries_one(qmax, USeries(umax));
    QSeries<USeries> term = result;
    for (int j = 1; 2 * j <= umax; ++j) {
        term = (term * expo).scaled(Rational(1, j));
        result = result + term;
    }
    // Multiply by the leading factor u.
    QSeries<USeries> shifted = qseries_useries(qmax, umax);
    for (int d = 0; d <= qmax; ++d) {
        USeries u(umax);
        for (int k = 0; k + 1 <= umax; ++k) u.set(k + 1, result[d][k]);
        shifted.set(d, u);
    }
    return shifted;
}

QSeries<PLaurent> weierstrass_p(int qmax, int w_bound) {
    QSeries<PLaurent> wp = qseries_plaurent(qmax);
    PLaurent q0 = PLaurent::window(w_bound, w_bound);
    q0.set(0, Rational(1, 12));
    for (int k = 1; 2 * k <= w_bound; ++k) q0.set(2 * k, Rational(k));
    wp.set(0, q0);
    for (int d = 1; d <= qmax; ++d) {
        PLaurent c;
        for (long m = 1; m <= d; ++m) {
            if (d % m != 0) continue;
            c.set(2 * m, c.coeff(2 * m) + Rational(m));
            c.set(0, c.coeff(0) - Rational(2 * m));
            c.set(-2 * m, c.coeff(-2 * m) + Rational(m));
        }
        wp.set(d, c);
    }
    return wp;
}

QSeries<Rational> theta_d4(int qmax) {
    QSeries<Rational> t = qseries_rational(qmax);
    t.set(0, Rational(1));
    for (int d = 1; d <= qmax; ++d) {
        long s = 0;
        for (long k = 1; k <= d; k += 2)
            if (d % k == 0) s += k;
        t.set(d, Rational(24 * s));
    }
    return t;
}

QSeries<PLaurent> s_function(int qmax) {
    QSeries<PLaurent> s = qseries_plaurent(qmax);
    for (int d = 1; d <= qmax; ++d) {
        PLaurent c;
        for (long m = 1; m <= d; ++m) {
            if (d % m != 0) continue;
            Rational weight(d / m);
            c.set(2 * m, c.coeff(2 * m) - weight);
            c.set(0, c.coeff(0) + Rational(2) * weight);
            c.set(-2 * m, c.coeff(-2 * m) - weight);
        }
        s.set(d, c);
    }
    return s;
}

}  // namespace abel
