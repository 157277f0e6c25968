#include "ribbon/elliptic.hpp"
#include "ribbon/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace ribbon;

namespace {

using Complex = std::complex<double>;

// q-series references: g2 = (4 pi^4/3) E4(q), g3 = (8 pi^6/27) E6(q)
constexpr double kG2Square = 189.07272012923383;
constexpr double kG3Hex = 820.82443707955611;
constexpr double kScaleSquare = 2.6220575542921196;
constexpr double kScaleHex = 2.4286506478875816;

Lattice square_unit() { return {}; }

Lattice hex_unit() {
    Lattice L;
    L.tau = {0.5, std::sqrt(3.0) / 2.0};
    return L;
}

} // namespace

TEST_CASE("weierstrass function is even with the right pole") {
    Lattice L = square_unit();
    for (Complex z : {Complex(0.31, 0.17), Complex(-0.42, 0.23),
                      Complex(0.11, -0.38)}) {
        CHECK(std::abs(wp(z, L) - wp(-z, L)) < 1e-9);
        CHECK(std::abs(wp_prime(z, L) + wp_prime(-z, L)) < 1e-9);
    }
    // near the pole, wp ~ 1/z^2
    Complex z(1e-4, 0.0);
    CHECK(std::abs(wp(z, L) * z * z - 1.0) < 1e-6);
}

TEST_CASE("square lattice has the quarter turn symmetry") {
    Lattice L = square_unit();
    const Complex i(0.0, 1.0);
    for (Complex z : {Complex(0.3, 0.2), Complex(0.15, -0.27)}) {
        CHECK(std::abs(wp(i * z, L) + wp(z, L)) < 1e-9);
        CHECK(std::abs(wp_prime(i * z, L) - i * wp_prime(z, L)) < 1e-9);
    }
}

TEST_CASE("lattice points are poles") {
    Lattice L = square_unit();
    CHECK_THROWS_AS(wp({0.0, 0.0}, L), PoleAtLatticePoint);
    CHECK_THROWS_AS(wp({1.0, 0.0}, L), PoleAtLatticePoint);
    CHECK_THROWS_AS(wp({0.0, 1.0}, L), PoleAtLatticePoint);
    CHECK_THROWS_AS(wp({2.0, 3.0}, L), PoleAtLatticePoint);
    CHECK_THROWS_AS(wp_prime({0.0, 0.0}, L), PoleAtLatticePoint);
}

TEST_CASE("invariants of the unit square lattice") {
    auto [g2, g3] = invariants(square_unit());
    CHECK(std::abs(g2.real() - kG2Square) < 1e-9 * kG2Square);
    CHECK(std::abs(g2.imag()) < 1e-9);
    CHECK(std::abs(g3) < 1e-8);
}

TEST_CASE("invariants of the unit hexagonal lattice") {
    auto [g2, g3] = invariants(hex_unit());
    CHECK(std::abs(g2) < 1e-8);
    CHECK(std::abs(g3.real() - kG3Hex) < 1e-9 * kG3Hex);
    CHECK(std::abs(g3.imag()) < 1e-8);
}

TEST_CASE("invariants scale with weight four and six") {
    Lattice L = square_unit();
    Lattice scaled = L;
    scaled.scale = {2.0, 0.0};
    auto [g2, g3] = invariants(L);
    auto [G2, G3] = invariants(scaled);
    CHECK(std::abs(G2 - g2 / 16.0) < 1e-9);
    CHECK(std::abs(G3 - g3 / 64.0) < 1e-9);

    Complex z(0.3, 0.2);
    CHECK(std::abs(wp(2.0 * z, scaled) - wp(z, L) / 4.0) < 1e-9);
    CHECK(std::abs(wp_prime(2.0 * z, scaled) - wp_prime(z, L) / 8.0) < 1e-9);
}

TEST_CASE("differential equation holds") {
    for (const Lattice& L : {square_unit(), hex_unit()}) {
        auto [g2, g3] = invariants(L);
        for (Complex z : {Complex(0.29, 0.13), Complex(0.41, 0.37)}) {
            Complex p = wp(z, L);
            Complex dp = wp_prime(z, L);
            Complex lhs = dp * dp;
            Complex rhs = 4.0 * p * p * p - g2 * p - g3;
            CHECK(std::abs(lhs - rhs) / (1.0 + std::abs(rhs)) < 1e-8);
        }
    }
}

TEST_CASE("normalization reaches the target invariants") {
    Lattice sq = normalize(square_unit());
    CHECK(std::abs(sq.scale - Complex(kScaleSquare, 0.0)) < 1e-10);
    auto [g2s, g3s] = invariants(sq);
    CHECK(std::abs(g2s - 4.0) < 1e-9);
    CHECK(std::abs(g3s) < 1e-9);

    Lattice hex = normalize(hex_unit());
    CHECK(std::abs(hex.scale - Complex(kScaleHex, 0.0)) < 1e-10);
    auto [g2h, g3h] = invariants(hex);
    CHECK(std::abs(g2h) < 1e-9);
    CHECK(std::abs(g3h - 4.0) < 1e-9);

    // normalizing twice is the same as once
    Lattice again = normalize(sq);
    CHECK(std::abs(again.scale - sq.scale) < 1e-12);

    Lattice bad;
    bad.tau = {0.0, 2.0};
    CHECK_THROWS_AS(normalize(bad), UnsupportedTau);
}

TEST_CASE("half period values after normalization") {
    Lattice sq = normalize(square_unit());
    auto e = half_period_values(sq);
    CHECK(std::abs(e[0] - Complex(1.0, 0.0)) < 1e-6);
    CHECK(std::abs(e[1] - Complex(0.0, 0.0)) < 1e-6);
    CHECK(std::abs(e[2] - Complex(-1.0, 0.0)) < 1e-6);
    CHECK(std::abs(e[0] + e[1] + e[2]) < 1e-8);

    Lattice hex = normalize(hex_unit());
    auto f = half_period_values(hex);
    const Complex omega = std::polar(1.0, 2.0 * std::acos(-1.0) / 3.0);
    CHECK(std::abs(f[0] - Complex(1.0, 0.0)) < 1e-6);
    CHECK(std::abs(f[1] - omega) < 1e-6);
    CHECK(std::abs(f[2] - omega * omega) < 1e-6);
    CHECK(std::abs(f[0] + f[1] + f[2]) < 1e-8);
}

TEST_CASE("strebel pullback identities") {
    CHECK(pullback_residual(EllipticCase::Square, 25, 9) < 1e-6);
    CHECK(pullback_residual(EllipticCase::Hexagonal, 25, 10) < 1e-6);
}

TEST_CASE("full reports come back clean") {
    for (EllipticCase kind :
         {EllipticCase::Square, EllipticCase::Hexagonal}) {
        EllipticReport rep = elliptic_report(kind);
        CHECK(rep.e_deviation < 1e-6);
        CHECK(rep.e_sum < 1e-8);
        CHECK(rep.pullback_max < 1e-6);
        CHECK(rep.doubling_delta < 1e-8);
        CHECK(rep.ok);
    }
}

TEST_CASE("bad lattices are rejected") {
    Lattice flipped;
    flipped.tau = {0.0, -1.0};
    CHECK_THROWS_AS(invariants(flipped), std::invalid_argument);
    Lattice degenerate;
    degenerate.scale = {0.0, 0.0};
    CHECK_THROWS_AS(invariants(degenerate), std::invalid_argument);
}
