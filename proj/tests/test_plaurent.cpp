#include <doctest.h>

#include "abel/error.hpp"
#include "abel/plaurent.hpp"
#include "test_support.hpp"

using namespace abel;

TEST_SUITE("plaurent") {

TEST_CASE("finite arithmetic: (w - w^-1)^2 = p - 2 + p^-1") {
    PLaurent w;
    w.set(1, Rational(1));
    w.set(-1, Rational(-1));
    PLaurent sq = w * w;
    CHECK(sq.coeff(2) == Rational(1));
    CHECK(sq.coeff(0) == Rational(-2));
    CHECK(sq.coeff(-2) == Rational(1));
    CHECK(sq.is_pure_p());
    CHECK(sq.symmetry() == WSymmetry::Symmetric);
    CHECK(w.symmetry() == WSymmetry::Antisymmetric);
    CHECK(w.parity() == WParity::OddInW);
    CHECK(sq.parity() == WParity::EvenInW);
}

TEST_CASE("monomial units invert, others do not") {
    PLaurent m = PLaurent::monomial(3, Rational(2, 5));
    CHECK(m.is_unit());
    PLaurent prod = m * m.inverse();
    CHECK(prod == PLaurent::monomial(0, Rational(1)));
    PLaurent two_terms;
    two_terms.set(0, Rational(1));
    two_terms.set(2, Rational(1));
    CHECK_FALSE(two_terms.is_unit());
    CHECK_THROWS_AS(two_terms.inverse(), precondition_error);
}

TEST_CASE("window validity shrinks by the finite factor's max exponent") {
    // Geometric-style window value: sum k p^k, exact through |e| <= 12.
    PLaurent win = PLaurent::window(12, 12);
    for (int k = 0; 2 * k <= 12; ++k) win.set(2 * k, Rational(k + 1));
    PLaurent fin;
    fin.set(4, Rational(1));
    fin.set(-4, Rational(2));
    PLaurent prod = win * fin;
    CHECK(prod.is_window());
    CHECK(prod.validity() == 8);

    // Spot-check against a wider-window recomputation.
    PLaurent wide = PLaurent::window(20, 20);
    for (int k = 0; 2 * k <= 20; ++k) wide.set(2 * k, Rational(k + 1));
    PLaurent prod_wide = wide * fin;
    for (int e = -8; e <= 8; ++e) CHECK(prod.coeff(e) == prod_wide.coeff(e));
}

TEST_CASE("window equality compares the common trusted region only") {
    PLaurent a = PLaurent::window(10, 4);
    PLaurent b = PLaurent::window(10, 6);
    a.set(2, Rational(3));
    b.set(2, Rational(3));
    b.set(6, Rational(99));  // outside a's validity
    CHECK(a == b);
    b.set(-2, Rational(1));
    CHECK(a != b);
}

TEST_CASE("window products with no trusted region are errors") {
    // Finite factor reaching past the window's validity.
    PLaurent win = PLaurent::window(8, 2);
    win.set(0, Rational(1));
    PLaurent far;
    far.set(4, Rational(1));
    CHECK_THROWS_AS(win * far, window_error);

    // Two windows whose trusted regions cannot overlap in the product.
    PLaurent a = PLaurent::window(8, 0);
    a.set(0, Rational(1));
    PLaurent b = PLaurent::window(8, 4);
    b.set(-4, Rational(1));
    b.set(0, Rational(1));
    CHECK_THROWS_AS(a * b, window_error);
}

TEST_CASE("trust-checked access") {
    PLaurent w = PLaurent::window(8, 4);
    w.set(2, Rational(1));
    CHECK(w.coeff_checked(2) == Rational(1));
    CHECK(w.coeff_checked(-4) == Rational(0));
    CHECK_THROWS_AS(w.coeff_checked(6), window_error);
    CHECK_THROWS_AS(PLaurent::window(4, 6), precondition_error);
}

TEST_CASE("ring axioms on random finite values") {
    testing::Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        PLaurent a = testing::rand_plaurent(rng, 5);
        PLaurent b = testing::rand_plaurent(rng, 5);
        PLaurent c = testing::rand_plaurent(rng, 5);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("symmetry flags on random data") {
    testing::Rng rng(9);
    for (int i = 0; i < 50; ++i) {
        PLaurent s = testing::rand_symmetric_p_laurent(rng, 4);
        CHECK(s.symmetry() == WSymmetry::Symmetric);
        CHECK(s.is_pure_p());
        // Symmetric times symmetric stays symmetric.
        PLaurent t = testing::rand_symmetric_p_laurent(rng, 3);
        CHECK((s * t).symmetry() == WSymmetry::Symmetric);
    }
}

}
