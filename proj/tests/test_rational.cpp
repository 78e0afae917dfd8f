#include <doctest.h>

#include "abel/error.hpp"
#include "abel/rational.hpp"

using namespace abel;

TEST_SUITE("rational") {

TEST_CASE("construction reduces to lowest terms") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), precondition_error);
}

TEST_CASE("arithmetic") {
    Rational a(1, 3), b(2, 5);
    CHECK(a + b == Rational(11, 15));
    CHECK(a - b == Rational(-1, 15));
    CHECK(a * b == Rational(2, 15));
    CHECK(a / b == Rational(5, 6));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), precondition_error);
}

TEST_CASE("pow and inverse") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(7).pow(0) == Rational(1));
    CHECK(Rational(-2).pow(3) == Rational(-8));
    CHECK_THROWS_AS(Rational(0).inverse(), precondition_error);
}

TEST_CASE("string round trip") {
    CHECK(Rational(-7, 12).str() == "-7/12");
    CHECK(Rational(5).str() == "5/1");
    CHECK(Rational::parse("-7/12") == Rational(-7, 12));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK_THROWS_AS(Rational::parse("x"), precondition_error);
}

TEST_CASE("integrality") {
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).to_long() == 2);
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK_THROWS_AS(Rational(1, 2).to_long(), integrality_error);
}

TEST_CASE("binomial and factorial helpers") {
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(-2, 3) == Rational(-4));
    CHECK(binomial(4, 0) == Rational(1));
    CHECK(binomial(4, -1) == Rational(0));
    CHECK(factorial(6) == Rational(720));
}

}
