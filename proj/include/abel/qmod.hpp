#ifndef ABEL_QMOD_HPP
#define ABEL_QMOD_HPP

#include <json.hpp>

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "abel/qseries.hpp"
#include "abel/rational.hpp"

namespace abel {

// Element of Q[E2, E4, E6], stored as monomial exponents (a, b, c) with
// coefficient of E2^a E4^b E6^c; weight of a monomial is 2a + 4b + 6c.
class QModElement {
public:
    explicit QModElement(int weight_bound) : weight_bound_(weight_bound) {}

    int weight_bound() const { return weight_bound_; }
    const std::map<std::array<int, 3>, Rational>& terms() const { return terms_; }
    std::optional<int> pure_weight() const { return pure_weight_; }

    void set_term(const std::array<int, 3>& mono, const Rational& coeff);
    void finalize();  // recomputes pure_weight from the terms

    QSeries<Rational> expansion(int qmax) const;
    nlohmann::json to_json() const;

    friend bool operator==(const QModElement& a, const QModElement& b) {
        return a.weight_bound_ == b.weight_bound_ && a.terms_ == b.terms_;
    }

private:
    int weight_bound_;
    std::map<std::array<int, 3>, Rational> terms_;
    std::optional<int> pure_weight_;
};

// Monomials (a, b, c) with 2a + 4b + 6c <= weight_bound in graded
// lexicographic order (by weight, then lexicographically).
std::vector<std::array<int, 3>> qmod_monomials(int weight_bound);

// Recognizes a truncated q-series as an element of QMod_{<= weight_bound}.
// Requires series order >= dim QMod_{<= bound} + 2 (else a precondition
// error, distinct from a no-fit result). Returns nullopt when no exact
// fit matches all available coefficients.
std::optional<QModElement> qmod_fit(const QSeries<Rational>& series,
                                    int weight_bound);

}  // namespace abel

#endif
