#include "abel/series_ops.hpp"

#include <cstdlib>

#include "abel/error.hpp"

namespace abel {

namespace {

// Multiplies acc by (1 - c * w^i * q^M)^e, truncated at the order of acc.
void mul_one_factor(QSeries<PLaurent>& acc, const Rational& c, int i, int M,
                    int e) {
    int qmax = acc.order();
    if (M <= 0) throw precondition_error("product_form: q exponent must be >= 1");
    if (e == 0 || c.is_zero()) return;

    // Expansion of the factor as sum_j t_j w^{i j} q^{M j}.
    std::vector<Rational> t;
    int jmax = qmax / M;
    if (e > 0) jmax = std::min(jmax, e);
    t.reserve(jmax + 1);
    for (int j = 0; j <= jmax; ++j) {
        if (e > 0)
            t.push_back(binomial(e, j) * (-c).pow(j));
        else
            t.push_back(binomial(-e + j - 1, j) * c.pow(j));
    }

    QSeries<PLaurent> out(qmax, acc.zero_proto());
    for (int d = 0; d <= qmax; ++d) {
        PLaurent sum = acc.zero_proto();
        for (int j = 0; j <= jmax && M * j <= d; ++j) {
            if (t[j].is_zero()) continue;
            PLaurent shifted;
            for (const auto& [w, v] : acc[d - M * j].support())
                shifted.set(w + i * j, v * t[j]);
            sum = sum + shifted;
        }
        out.set(d, sum);
    }
    acc = out;
}

}  // namespace

QSeries<PLaurent> product_form(const std::vector<ProductFactor>& factors,
                               const PLaurent& leading, int qmax, int w_bound) {
    QSeries<PLaurent> acc(qmax, PLaurent());
    acc.set(0, leading);
    for (const auto& f : factors) {
        if (f.q_stride < 1)
            throw precondition_error("product_form: q stride must be >= 1");
        for (int m = 1; f.q_stride * m <= qmax; ++m)
            mul_one_factor(acc, f.coeff, f.w_exp, f.q_stride * m, f.outer_exp);
    }
    for (int d = 0; d <= qmax; ++d)
        if (acc[d].max_abs_exponent() > w_bound)
            throw window_error("product_form: coefficient support exceeds window bound");
    return acc;
}

QSeries<PLaurent> dilate(const QSeries<PLaurent>& a, int k_p, int k_q) {
    if (k_p < 1 || k_q < 1)
        throw precondition_error("dilate: dilation factors must be >= 1");
    QSeries<PLaurent> r(a.order(), a.zero_proto());
    for (int d = 0; d * k_q <= a.order() && d <= a.order(); ++d) {
        const PLaurent& src = a[d];
        PLaurent dst;
        if (src.is_window()) {
            if ((long)src.max_abs_exponent() * k_p > src.window_bound())
                throw window_error("dilate: dilated support exceeds window");
            dst = PLaurent::window(
                src.window_bound(),
                (int)std::min((long)src.window_bound(), (long)src.validity() * k_p));
        }
        for (const auto& [w, v] : src.support()) dst.set(w * k_p, v);
        r.set(d * k_q, dst);
    }
    return r;
}

QSeries<PLaurent> sign_flip_p(const QSeries<PLaurent>& a) {
    QSeries<PLaurent> r(a.order(), a.zero_proto());
    for (int d = 0; d <= a.order(); ++d) {
        const PLaurent& src = a[d];
        if (!src.is_pure_p())
            throw precondition_error("sign_flip_p: half-integer p-power present");
        PLaurent dst = src.is_window()
                           ? PLaurent::window(src.window_bound(), src.validity())
                           : PLaurent();
        for (const auto& [w, v] : src.support())
            dst.set(w, (w / 2) % 2 == 0 ? v : -v);
        r.set(d, dst);
    }
    return r;
}

QSeries<USeries> symmetric_p_to_u(const QSeries<PLaurent>& a, int umax) {
    QSeries<USeries> r(a.order(), USeries(umax));
    for (int d = 0; d <= a.order(); ++d) {
        const PLaurent& src = a[d];
        if (src.is_window())
            throw precondition_error("symmetric_p_to_u: window-truncated input");
        if (!src.is_pure_p())
            throw precondition_error("symmetric_p_to_u: half-integer p-power present");
        if (src.symmetry() != WSymmetry::Symmetric)
            throw precondition_error("symmetric_p_to_u: input is not symmetric");
        USeries u = USeries::constant(umax, src.coeff(0));
        for (const auto& [w, v] : src.support()) {
            if (w <= 0) continue;
            u = u + cos2n_series(umax, w / 2).scaled(v);
        }
        r.set(d, u);
    }
    return r;
}

QSeries<USeries> antisymmetric_w_to_u(const QSeries<PLaurent>& a, int umax) {
    QSeries<USeries> r(a.order(), USeries(umax));
    for (int d = 0; d <= a.order(); ++d) {
        const PLaurent& src = a[d];
        if (src.is_window())
            throw precondition_error("antisymmetric_w_to_u: window-truncated input");
        if (src.symmetry() != WSymmetry::Antisymmetric)
            throw precondition_error("antisymmetric_w_to_u: input is not antisymmetric");
        USeries u(umax);
        for (const auto& [w, v] : src.support()) {
            if (w <= 0) continue;
            u = u + sin2n_half_series(umax, w).scaled(v);
        }
        r.set(d, u);
    }
    return r;
}

Rational coeff(const QSeries<PLaurent>& a, int q_exp, int p_exp) {
    if (q_exp < 0 || q_exp > a.order())
        throw precondition_error("coeff: q exponent out of range");
    return a[q_exp].coeff_checked(2 * p_exp);
}

Rational coeff(const QSeries<USeries>& a, int q_exp, int u_exp) {
    if (q_exp < 0 || q_exp > a.order())
        throw precondition_error("coeff: q exponent out of range");
    return a[q_exp][u_exp];
}

PLaurent p_dilate(const PLaurent& f, int k) {
    if (k < 1) throw precondition_error("p_dilate: factor must be >= 1");
    PLaurent out = f.is_window()
                       ? PLaurent::window(
                             f.window_bound(),
                             (int)std::min((long)f.window_bound(),
                                           (long)f.validity() * k))
                       : PLaurent();
    for (const auto& [w, v] : f.support()) {
        if (out.is_window() && std::abs(w) * k > out.window_bound())
            throw window_error("p_dilate: dilated support exceeds window");
        out.set(w * k, v);
    }
    return out;
}

namespace {
std::string join_ints(const std::vector<int>& xs) {
    std::string s = "[";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i]);
    }
    return s + "]";
}
}  // namespace

SeriesComparison compare_series(const QSeries<PLaurent>& a,
                                const QSeries<PLaurent>& b) {
    SeriesComparison out;
    int n = std::min(a.order(), b.order());
    std::vector<int> trust;
    bool any_window = false;
    for (int d = 0; d <= n; ++d) {
        const PLaurent& x = a[d];
        const PLaurent& y = b[d];
        int v;
        if (x.is_window() || y.is_window()) {
            any_window = true;
            v = std::min(x.is_window() ? x.validity() : 1 << 20,
                         y.is_window() ? y.validity() : 1 << 20);
        } else {
            v = std::max(x.max_abs_exponent(), y.max_abs_exponent());
        }
        trust.push_back(v);
        for (int e = -v; e <= v && out.equal; ++e) {
            if (x.coeff(e) != y.coeff(e)) {
                out.equal = false;
                out.locator = "q^" + std::to_string(d) + ", w-exp " +
                              std::to_string(e) + ": expected " +
                              y.coeff(e).str() + ", got " + x.coeff(e).str();
            }
        }
        if (!out.equal) break;
    }
    out.region = "q<=" + std::to_string(n) +
                 (any_window ? ", trusted |w-exp| per order " + join_ints(trust)
                             : ", full support");
    return out;
}

SeriesComparison compare_series(const QSeries<USeries>& a,
                                const QSeries<USeries>& b) {
    SeriesComparison out;
    int n = std::min(a.order(), b.order());
    int m = n >= 0 ? std::min(a[0].order(), b[0].order()) : 0;
    for (int d = 0; d <= n && out.equal; ++d)
        for (int k = 0; k <= m; ++k)
            if (a[d][k] != b[d][k]) {
                out.equal = false;
                out.locator = "q^" + std::to_string(d) + ", u-exp " +
                              std::to_string(k) + ": expected " + b[d][k].str() +
                              ", got " + a[d][k].str();
                break;
            }
    out.region = "q<=" + std::to_string(n) + ", u<=" + std::to_string(m);
    return out;
}

SeriesComparison compare_series(const QSeries<Rational>& a,
                                const QSeries<Rational>& b) {
    SeriesComparison out;
    int n = std::min(a.order(), b.order());
    for (int d = 0; d <= n; ++d)
        if (a[d] != b[d]) {
            out.equal = false;
            out.locator = "q^" + std::to_string(d) + ": expected " + b[d].str() +
                          ", got " + a[d].str();
            break;
        }
    out.region = "q<=" + std::to_string(n);
    return out;
}

QSeries<Rational> qseries_rational(int order) {
    return QSeries<Rational>(order, Rational(0));
}

QSeries<PLaurent> qseries_plaurent(int order) {
    return QSeries<PLaurent>(order, PLaurent());
}

QSeries<USeries> qseries_useries(int order, int umax) {
    return QSeries<USeries>(order, USeries(umax));
}

}  // namespace abel
