#ifndef ABEL_TEST_SUPPORT_HPP
#define ABEL_TEST_SUPPORT_HPP

// Test-only helpers: random series generators and independent oracles that
// must stay decoupled from the library implementation paths they check.

#include <random>
#include <set>
#include <vector>

#include "abel/plaurent.hpp"
#include "abel/qseries.hpp"
#include "abel/rational.hpp"
#include "abel/useries.hpp"

namespace abel::testing {

using Rng = std::mt19937;

inline Rational rand_rational(Rng& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng), den(rng));
}

inline Rational rand_nonzero_rational(Rng& rng) {
    Rational r = rand_rational(rng);
    while (r.is_zero()) r = rand_rational(rng);
    return r;
}

inline QSeries<Rational> rand_qseries(Rng& rng, int order) {
    QSeries<Rational> s(order, Rational(0));
    for (int d = 0; d <= order; ++d) s.set(d, rand_rational(rng));
    return s;
}

inline QSeries<Rational> rand_unit_qseries(Rng& rng, int order) {
    QSeries<Rational> s = rand_qseries(rng, order);
    s.set(0, rand_nonzero_rational(rng));
    return s;
}

inline PLaurent rand_plaurent(Rng& rng, int max_exp) {
    std::uniform_int_distribution<int> exp(-max_exp, max_exp);
    std::uniform_int_distribution<int> count(0, 4);
    PLaurent f;
    int n = count(rng);
    for (int i = 0; i < n; ++i) f.set(exp(rng), rand_rational(rng));
    return f;
}

inline PLaurent rand_symmetric_p_laurent(Rng& rng, int max_p_exp) {
    std::uniform_int_distribution<int> exp(1, max_p_exp);
    std::uniform_int_distribution<int> count(0, 3);
    PLaurent f;
    f.set(0, rand_rational(rng));
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        int e = exp(rng);
        Rational c = rand_rational(rng);
        f.set(2 * e, f.coeff(2 * e) + c);
        f.set(-2 * e, f.coeff(-2 * e) + c);
    }
    return f;
}

inline QSeries<PLaurent> rand_pq_series(Rng& rng, int order, int max_exp) {
    QSeries<PLaurent> s(order, PLaurent());
    for (int d = 0; d <= order; ++d) s.set(d, rand_plaurent(rng, max_exp));
    return s;
}

inline QSeries<PLaurent> rand_symmetric_pq_series(Rng& rng, int order,
                                                  int max_p_exp) {
    QSeries<PLaurent> s(order, PLaurent());
    for (int d = 0; d <= order; ++d)
        s.set(d, rand_symmetric_p_laurent(rng, max_p_exp));
    return s;
}

inline USeries rand_useries(Rng& rng, int order) {
    USeries s(order);
    for (int k = 0; k <= order; ++k) s.set(k, rand_rational(rng));
    return s;
}

inline QSeries<USeries> rand_uq_series(Rng& rng, int order, int umax) {
    QSeries<USeries> s(order, USeries(umax));
    for (int d = 0; d <= order; ++d) s.set(d, rand_useries(rng, umax));
    return s;
}

inline USeries rand_odd_normalized(Rng& rng, int order) {
    USeries s(order);
    s.set(1, Rational(1));
    for (int k = 3; k <= order; k += 2) s.set(k, rand_rational(rng));
    return s;
}

// Independent reversion oracle via the Lagrange inversion formula:
// [r^n] b = (1/n) [t^{n-1}] (t / a(t))^n.
inline USeries lagrange_revert(const USeries& a) {
    int order = a.order();
    USeries b(order);
    // t/a(t) = 1 / (1 + a_3 t^2 + a_5 t^4 + ...).
    USeries shifted(order);
    for (int k = 1; k <= order; ++k) shifted.set(k - 1, a[k]);
    USeries base = shifted.inverse();
    for (int n = 1; n <= order; ++n) {
        USeries power = USeries::constant(order, Rational(1));
        for (int i = 0; i < n; ++i) power = power * base;
        if (n - 1 <= order) b.set(n, power[n - 1] / Rational(n));
    }
    return b;
}

// Subgroup count of Z/f1 x ... x Z/fk by exhaustive subset closure; only
// usable for groups of order <= ~16.
inline long brute_force_subgroup_count(const std::vector<long>& factors) {
    long order = 1;
    for (long f : factors) order *= f;
    int n = (int)factors.size();
    std::vector<std::vector<long>> elems;
    for (long idx = 0; idx < order; ++idx) {
        std::vector<long> v(n);
        long rem = idx;
        for (int i = 0; i < n; ++i) {
            v[i] = rem % factors[i];
            rem /= factors[i];
        }
        elems.push_back(v);
    }
    auto add_index = [&](long a, long b) {
        long idx = 0, mult = 1;
        for (int i = 0; i < n; ++i) {
            idx += ((elems[a][i] + elems[b][i]) % factors[i]) * mult;
            mult *= factors[i];
        }
        return idx;
    };
    long count = 0;
    for (unsigned long mask = 1; mask < (1ul << order); ++mask) {
        if (!(mask & 1)) continue;  // must contain the identity
        bool closed = true;
        for (long a = 0; a < order && closed; ++a) {
            if (!(mask >> a & 1)) continue;
            for (long b = a; b < order && closed; ++b) {
                if (!(mask >> b & 1)) continue;
                if (!(mask >> add_index(a, b) & 1)) closed = false;
            }
        }
        if (closed) ++count;
    }
    return count;
}

}  // namespace abel::testing

#endif
