#include "ribbon/errors.hpp"
#include "ribbon/rational.hpp"

#include <doctest.h>

using namespace ribbon;

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    CHECK(factorial(20) == Integer("2432902008176640000"));
}

TEST_CASE("binomial") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(16, 8) == 12870);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(52, 5) == 2598960);
}

TEST_CASE("rational to_string") {
    CHECK(to_string(Rational(1, 12)) == "1/12");
    CHECK(to_string(Rational(-1, 6)) == "-1/6");
    CHECK(to_string(Rational(6, 3)) == "2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(Rational(-4, 2)) == "-2");
}

TEST_CASE("rational parsing round trip") {
    CHECK(rational_from_string("5/2") == Rational(5, 2));
    CHECK(rational_from_string("-7") == Rational(-7));
    CHECK(rational_from_string("0") == Rational(0));
    CHECK(rational_from_string("+3/9") == Rational(1, 3));
    for (const char* s : {"1/12", "-1/6", "2", "0", "355/113"})
        CHECK(to_string(rational_from_string(s)) == s);
}

TEST_CASE("rational parsing rejects junk") {
    CHECK_THROWS_AS(rational_from_string(""), InvalidGraphJson);
    CHECK_THROWS_AS(rational_from_string("abc"), InvalidGraphJson);
    CHECK_THROWS_AS(rational_from_string("1/0"), InvalidGraphJson);
    CHECK_THROWS_AS(rational_from_string("2/"), InvalidGraphJson);
    CHECK_THROWS_AS(rational_from_string("/3"), InvalidGraphJson);
    CHECK_THROWS_AS(rational_from_string("1.5"), InvalidGraphJson);
    CHECK_THROWS_AS(rational_from_string("1 / 2"), InvalidGraphJson);
}

TEST_CASE("integrality and conversions") {
    CHECK(is_integer(Rational(4, 2)));
    CHECK_FALSE(is_integer(Rational(1, 2)));
    CHECK(to_double(Rational(1, 4)) == 0.25);
    CHECK(to_long_long(Integer(-42)) == -42);
}
