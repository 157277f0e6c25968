#include "ribbon/characteristic.hpp"
#include "ribbon/errors.hpp"

#include <doctest.h>

#include <vector>

using namespace ribbon;

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(5) == 0);
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(8) == Rational(-1, 30));
    CHECK(bernoulli(10) == Rational(5, 66));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("zeta at negative odd integers") {
    CHECK(zeta_one_minus_2g(1) == Rational(-1, 12));
    CHECK(zeta_one_minus_2g(2) == Rational(1, 120));
    CHECK(zeta_one_minus_2g(3) == Rational(-1, 252));
    CHECK(zeta_one_minus_2g(4) == Rational(1, 240));
}

TEST_CASE("characteristic sums over the small censuses") {
    auto c11 = enumerate(1, 1);
    CHECK(chi_sum(c11, ChiMode::Plain) == Rational(1, 12));
    CHECK(chi_sum(c11, ChiMode::Orbifold) == Rational(1, 6));
    CHECK(chi_sum(c11, ChiMode::Labeled) == Rational(1, 6));

    auto c03 = enumerate(0, 3);
    CHECK(chi_sum(c03, ChiMode::Plain) == Rational(-1, 6));
    CHECK(chi_sum(c03, ChiMode::Orbifold) == Rational(-1, 6));
    CHECK(chi_sum(c03, ChiMode::Labeled) == Rational(-1));

    // labeled chi(0,4) = chi of configurations of 4 points on the sphere
    // up to Moebius transformations, a genuinely independent value
    auto c04 = enumerate(0, 4);
    CHECK(chi_sum(c04, ChiMode::Orbifold) == Rational(-1, 24));
    CHECK(chi_sum(c04, ChiMode::Labeled) == Rational(-1));

    auto c12 = enumerate(1, 2);
    CHECK(chi_sum(c12, ChiMode::Plain) == Rational(1, 24));
    CHECK(chi_sum(c12, ChiMode::Labeled) == Rational(1, 12));
}

TEST_CASE("characteristic sum rejects partial censuses") {
    auto c11 = enumerate(1, 1);
    CHECK_THROWS_AS(chi_sum(c11, ChiMode::Plain, false), IncompleteCensus);
    CHECK_THROWS_AS(chi_sum({}, ChiMode::Plain), IncompleteCensus);
    auto mixed = enumerate(0, 3);
    mixed.insert(mixed.end(), c11.begin(), c11.end());
    CHECK_THROWS_AS(chi_sum(mixed, ChiMode::Plain), IncompleteCensus);
}

TEST_CASE("closed form via zeta") {
    CHECK(chi_closed_form(1, 1) == Rational(1, 12));
    CHECK(chi_closed_form(1, 2) == Rational(1, 24));
    CHECK(chi_closed_form(2, 1) == Rational(-1, 120));
    CHECK(chi_closed_form(3, 1) == Rational(1, 252));
    CHECK_THROWS_AS(chi_closed_form(0, 3), GenusZeroUnsupported);
    CHECK_THROWS_AS(chi_closed_form(0, 4), GenusZeroUnsupported);
}

TEST_CASE("composition coefficients") {
    CHECK(composition_identity(1) == Rational(-1));
    CHECK(composition_identity(2) == Rational(1, 2));
    CHECK(composition_identity(3) == Rational(-1, 6));
    CHECK(composition_identity(4) == Rational(1, 24));
    CHECK(composition_identity(7) == Rational(-1, 5040));
}

TEST_CASE("orbifold quotient characteristics") {
    // trivial group on one coordinate
    CHECK(chi_orbifold_quotient(1, {}) == Rational(-1));
    // the swap on two coordinates
    CHECK(chi_orbifold_quotient(2, {{1, 0}}) == Rational(1, 2));
    // full symmetric group on three coordinates
    CHECK(chi_orbifold_quotient(3, {{1, 0, 2}, {1, 2, 0}}) ==
          Rational(-1, 6));
    // cyclic rotation on four coordinates
    CHECK(chi_orbifold_quotient(4, {{1, 2, 3, 0}}) == Rational(1, 4));
}

TEST_CASE("orbifold quotient demands a faithful action") {
    CHECK(chi_orbifold_quotient(2, {{1, 0}}, 2) == Rational(1, 2));
    CHECK_THROWS_AS(chi_orbifold_quotient(2, {{1, 0}}, 4), NotFaithful);
    CHECK_THROWS_AS(chi_orbifold_quotient(3, {{1, 1, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(chi_orbifold_quotient(3, {{1, 0}}),
                    std::invalid_argument);
}
