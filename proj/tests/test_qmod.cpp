#include <doctest.h>

#include "abel/error.hpp"
#include "abel/lattice.hpp"
#include "abel/modular.hpp"
#include "abel/qmod.hpp"
#include "abel/series_ops.hpp"

using namespace abel;

TEST_SUITE("qmod") {

TEST_CASE("monomial basis in graded-lex order") {
    auto monos = qmod_monomials(4);
    REQUIRE(monos.size() == 4);
    CHECK(monos[0] == std::array<int, 3>{0, 0, 0});
    CHECK(monos[1] == std::array<int, 3>{1, 0, 0});
    CHECK(monos[2] == std::array<int, 3>{0, 1, 0});
    CHECK(monos[3] == std::array<int, 3>{2, 0, 0});
    CHECK(qmod_monomials(8).size() == 11);
}

TEST_CASE("fit recovers a basis element") {
    auto fit = qmod_fit(eisenstein(2, 8), 2);
    REQUIRE(fit.has_value());
    REQUIRE(fit->terms().size() == 1);
    CHECK(fit->terms().begin()->first == std::array<int, 3>{1, 0, 0});
    CHECK(fit->terms().begin()->second == Rational(1));
    REQUIRE(fit->pure_weight().has_value());
    CHECK(*fit->pure_weight() == 2);
}

TEST_CASE("fit of the weight-two point-insertion series") {
    // -1/12 + 2q + 6q^2 + 8q^3 + ... = -E2/12, built from divisor sums.
    QSeries<Rational> s = qseries_rational(8);
    s.set(0, Rational(-1, 12));
    for (int d = 1; d <= 8; ++d) s.set(d, Rational(2 * divisor_sigma(d)));
    auto fit = qmod_fit(s, 2);
    REQUIRE(fit.has_value());
    REQUIRE(fit->terms().size() == 1);
    CHECK(fit->terms().begin()->first == std::array<int, 3>{1, 0, 0});
    CHECK(fit->terms().begin()->second == Rational(-1, 12));
    CHECK(fit->pure_weight().has_value());
}

TEST_CASE("no-fit is distinct from insufficient order") {
    // sigma-like series cannot be a constant.
    QSeries<Rational> s = qseries_rational(6);
    s.set(1, Rational(1));
    s.set(2, Rational(1));
    auto fit = qmod_fit(s, 0);
    CHECK_FALSE(fit.has_value());

    QSeries<Rational> tiny = qseries_rational(2);
    CHECK_THROWS_AS(qmod_fit(tiny, 4), precondition_error);

    // Boundary: weight bound 2 has dimension 2, so order 3 is one short
    // of the required dimension-plus-two margin and order 4 suffices.
    CHECK_THROWS_AS(qmod_fit(eisenstein(2, 3), 2), precondition_error);
    CHECK(qmod_fit(eisenstein(2, 4), 2).has_value());
}

TEST_CASE("refitting an expansion reproduces the coefficients exactly") {
    QModElement elem(8);
    elem.set_term({1, 0, 0}, Rational(3, 7));
    elem.set_term({0, 1, 0}, Rational(-2));
    elem.set_term({1, 0, 1}, Rational(1, 2));
    elem.finalize();
    CHECK_FALSE(elem.pure_weight().has_value());
    auto fit = qmod_fit(elem.expansion(14), 8);
    REQUIRE(fit.has_value());
    CHECK(*fit == elem);
}

TEST_CASE("pure weight detected for homogeneous combinations") {
    QModElement elem(4);
    elem.set_term({2, 0, 0}, Rational(1));
    elem.set_term({0, 1, 0}, Rational(-1));
    elem.finalize();
    REQUIRE(elem.pure_weight().has_value());
    CHECK(*elem.pure_weight() == 4);
    auto fit = qmod_fit(elem.expansion(10), 4);
    REQUIRE(fit.has_value());
    CHECK(*fit->pure_weight() == 4);
}

TEST_CASE("serialization shape") {
    QModElement elem(4);
    elem.set_term({0, 1, 0}, Rational(5, 2));
    elem.finalize();
    nlohmann::json j = elem.to_json();
    CHECK(j["weight_bound"] == 4);
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0]["e4"] == 1);
    CHECK(j["terms"][0]["coeff"] == "5/2");
}

}
