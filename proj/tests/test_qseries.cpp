#include <doctest.h>

#include "abel/error.hpp"
#include "abel/qseries.hpp"
#include "abel/series_ops.hpp"
#include "test_support.hpp"

using namespace abel;

TEST_SUITE("qseries") {

TEST_CASE("(1+q)(1-q) = 1 - q^2 at order 4") {
    QSeries<Rational> a = qseries_rational(4);
    a.set(0, Rational(1));
    a.set(1, Rational(1));
    QSeries<Rational> b = qseries_rational(4);
    b.set(0, Rational(1));
    b.set(1, Rational(-1));
    QSeries<Rational> p = a * b;
    CHECK(p[0] == Rational(1));
    CHECK(p[1] == Rational(0));
    CHECK(p[2] == Rational(-1));
    CHECK(p[3] == Rational(0));
    CHECK(p[4] == Rational(0));
}

TEST_CASE("scale") {
    QSeries<Rational> a = qseries_rational(3);
    a.set(1, Rational(1));
    a.set(2, Rational(3));
    QSeries<Rational> s = a.scaled(Rational(1, 2));
    CHECK(s[1] == Rational(1, 2));
    CHECK(s[2] == Rational(3, 2));
}

TEST_CASE("minimum order propagation and equality window") {
    QSeries<Rational> a = qseries_rational(3);
    QSeries<Rational> b = qseries_rational(7);
    b.set(5, Rational(1));
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
    CHECK(a == b);  // equal through the common order 3
}

TEST_CASE("invert: geometric series") {
    QSeries<Rational> a = qseries_rational(3);
    a.set(0, Rational(1));
    a.set(1, Rational(-1));
    QSeries<Rational> inv = a.invert();
    for (int d = 0; d <= 3; ++d) CHECK(inv[d] == Rational(1));

    QSeries<Rational> one = qseries_one(3, Rational(0));
    CHECK(one.invert() == one);

    QSeries<Rational> c = qseries_rational(2);
    c.set(0, Rational(2));
    c.set(1, Rational(1));
    QSeries<Rational> cinv = c.invert();
    CHECK(cinv[0] == Rational(1, 2));
    CHECK(cinv[1] == Rational(-1, 4));
    CHECK(cinv[2] == Rational(1, 8));
    CHECK(c * cinv == one.truncated(2));

    QSeries<Rational> zero = qseries_rational(2);
    CHECK_THROWS_AS(zero.invert(), precondition_error);
}

TEST_CASE("invert round trip, randomized, all three regimes") {
    testing::Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        QSeries<Rational> a = testing::rand_unit_qseries(rng, 6);
        CHECK(a * a.invert() == qseries_one(6, Rational(0)));
    }
    for (int i = 0; i < 60; ++i) {
        QSeries<PLaurent> a = testing::rand_pq_series(rng, 4, 3);
        a.set(0, PLaurent::monomial(
                     (int)(rng() % 5) - 2, testing::rand_nonzero_rational(rng)));
        CHECK(a * a.invert() == qseries_one(4, PLaurent()));
    }
    for (int i = 0; i < 60; ++i) {
        QSeries<USeries> a = testing::rand_uq_series(rng, 4, 4);
        USeries c0 = a[0];
        c0.set(0, testing::rand_nonzero_rational(rng));
        a.set(0, c0);
        CHECK(a * a.invert() == qseries_one(4, USeries(4)));
    }
}

TEST_CASE("q_derivative and the Leibniz rule") {
    QSeries<Rational> a = qseries_rational(4);
    a.set(0, Rational(1));
    a.set(1, Rational(1));
    a.set(3, Rational(1));
    QSeries<Rational> da = a.q_derivative();
    CHECK(da[0] == Rational(0));
    CHECK(da[1] == Rational(1));
    CHECK(da[3] == Rational(3));

    QSeries<Rational> q2 = qseries_rational(4);
    q2.set(2, Rational(1));
    CHECK(q2.q_derivative().q_derivative()[2] == Rational(4));

    testing::Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        QSeries<Rational> x = testing::rand_qseries(rng, 6);
        QSeries<Rational> y = testing::rand_qseries(rng, 6);
        CHECK((x * y).q_derivative() ==
              x.q_derivative() * y + x * y.q_derivative());
    }
}

TEST_CASE("ring axioms, randomized, all three regimes") {
    testing::Rng rng(59);
    for (int i = 0; i < 200; ++i) {
        QSeries<Rational> a = testing::rand_qseries(rng, 5);
        QSeries<Rational> b = testing::rand_qseries(rng, 5);
        QSeries<Rational> c = testing::rand_qseries(rng, 5);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
    for (int i = 0; i < 60; ++i) {
        QSeries<PLaurent> a = testing::rand_pq_series(rng, 3, 3);
        QSeries<PLaurent> b = testing::rand_pq_series(rng, 3, 3);
        QSeries<PLaurent> c = testing::rand_pq_series(rng, 3, 3);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
    for (int i = 0; i < 60; ++i) {
        QSeries<USeries> a = testing::rand_uq_series(rng, 3, 4);
        QSeries<USeries> b = testing::rand_uq_series(rng, 3, 4);
        QSeries<USeries> c = testing::rand_uq_series(rng, 3, 4);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("power helper") {
    QSeries<Rational> a = qseries_rational(3);
    a.set(0, Rational(1));
    a.set(1, Rational(1));
    QSeries<Rational> cube = qpow(a, 3);
    CHECK(cube[0] == Rational(1));
    CHECK(cube[1] == Rational(3));
    CHECK(cube[2] == Rational(3));
    CHECK(cube[3] == Rational(1));
    CHECK(qpow(a, 0) == qseries_one(3, Rational(0)));
    CHECK(qpow(a, -2) * qpow(a, 2) == qseries_one(3, Rational(0)));
}

TEST_CASE("coefficient access errors") {
    QSeries<Rational> a = qseries_rational(5);
    a.set(0, Rational(1));
    a.set(1, Rational(1));
    CHECK(coeff(a, 5) == Rational(0));
    CHECK_THROWS_AS(coeff(a, 6), precondition_error);
    CHECK_THROWS_AS(a[-1], precondition_error);
}

}
