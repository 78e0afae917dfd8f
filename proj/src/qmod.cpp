#include "abel/qmod.hpp"

#include <algorithm>

#include "abel/error.hpp"
#include "abel/modular.hpp"
#include "abel/series_ops.hpp"

namespace abel {

namespace {
int mono_weight(const std::array<int, 3>& m) {
    return 2 * m[0] + 4 * m[1] + 6 * m[2];
}
}  // namespace

void QModElement::set_term(const std::array<int, 3>& mono, const Rational& coeff) {
    if (mono_weight(mono) > weight_bound_)
        throw precondition_error("QModElement: monomial exceeds weight bound");
    if (coeff.is_zero())
        terms_.erase(mono);
    else
        terms_[mono] = coeff;
}

void QModElement::finalize() {
    pure_weight_.reset();
    if (terms_.empty()) return;
    int w = mono_weight(terms_.begin()->first);
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (mono_weight(m) != w) return;
    }
    pure_weight_ = w;
}

QSeries<Rational> QModElement::expansion(int qmax) const {
    QSeries<Rational> e2 = eisenstein(2, qmax);
    QSeries<Rational> e4 = eisenstein(4, qmax);
    QSeries<Rational> e6 = eisenstein(6, qmax);
    QSeries<Rational> out = qseries_rational(qmax);
    for (const auto& [m, c] : terms_) {
        QSeries<Rational> term = qpow(e2, m[0]) * qpow(e4, m[1]) * qpow(e6, m[2]);
        out = out + term.scaled(c);
    }
    return out;
}

nlohmann::json QModElement::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    std::vector<std::array<int, 3>> order = qmod_monomials(weight_bound_);
    for (const auto& m : order) {
        auto it = terms_.find(m);
        if (it == terms_.end()) continue;
        terms.push_back({{"e2", m[0]},
                         {"e4", m[1]},
                         {"e6", m[2]},
                         {"coeff", it->second.str()}});
    }
    return nlohmann::json{{"weight_bound", weight_bound_}, {"terms", terms}};
}

std::vector<std::array<int, 3>> qmod_monomials(int weight_bound) {
    std::vector<std::array<int, 3>> out;
    for (int w = 0; w <= weight_bound; w += 2)
        for (int a = 0; a <= w / 2; ++a)
            for (int b = 0; b <= w / 4; ++b)
                for (int c = 0; c <= w / 6; ++c)
                    if (2 * a + 4 * b + 6 * c == w) out.push_back({a, b, c});
    return out;
}

std::optional<QModElement> qmod_fit(const QSeries<Rational>& series,
                                    int weight_bound) {
    if (weight_bound < 0 || weight_bound % 2 != 0)
        throw precondition_error("qmod_fit: weight bound must be even and >= 0");
    std::vector<std::array<int, 3>> monos = qmod_monomials(weight_bound);
    int ncols = (int)monos.size();
    int nrows = series.order() + 1;
    // Requires order >= dim QMod_{<= bound} + 2 (safety margin of two
    // coefficients beyond a square system).
    if (series.order() < ncols + 2)
        throw precondition_error(
            "qmod_fit: series order " + std::to_string(series.order()) +
            " too small for weight bound " + std::to_string(weight_bound) +
            " (need at least " + std::to_string(ncols + 2) + ")");

    QSeries<Rational> e2 = eisenstein(2, series.order());
    QSeries<Rational> e4 = eisenstein(4, series.order());
    QSeries<Rational> e6 = eisenstein(6, series.order());

    // Augmented system over Q: columns are monomial expansions.
    std::vector<std::vector<Rational>> a(nrows,
                                         std::vector<Rational>(ncols + 1));
    for (int j = 0; j < ncols; ++j) {
        QSeries<Rational> col =
            qpow(e2, monos[j][0]) * qpow(e4, monos[j][1]) * qpow(e6, monos[j][2]);
        for (int i = 0; i < nrows; ++i) a[i][j] = col[i];
    }
    for (int i = 0; i < nrows; ++i) a[i][ncols] = series[i];

    // Exact Gaussian elimination.
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int p = -1;
        for (int i = row; i < nrows; ++i)
            if (!a[i][col].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[row], a[p]);
        Rational inv = a[row][col].inverse();
        for (int j = col; j <= ncols; ++j) a[row][j] *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (int j = col; j <= ncols; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    int rank = row;
    if (rank < ncols)
        throw precondition_error(
            "qmod_fit: basis expansions are rank deficient at this order");
    // Inconsistent rows signal that no quasi-modular form matches.
    for (int i = rank; i < nrows; ++i)
        if (!a[i][ncols].is_zero()) return std::nullopt;

    QModElement elem(weight_bound);
    for (int i = 0; i < rank; ++i)
        elem.set_term(monos[pivot_col_of_row[i]], a[i][ncols]);
    elem.finalize();
    return elem;
}

}  // namespace abel
