#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <utility>

namespace ribbon {

// Period lattice scale * (Z + Z tau). The truncation counts resummed rows of
// the lattice sums (each row is a closed-form cosecant/cotangent expression,
// so the tail decays like e^{-2 pi n Im tau}); at least 10 rows are used.
struct Lattice {
    std::complex<double> tau = {0.0, 1.0};
    std::complex<double> scale = {1.0, 0.0};
    int truncation = 20;
};

enum class EllipticCase { Square, Hexagonal };

// Weierstrass functions on the lattice; throws PoleAtLatticePoint when z is
// (numerically) a lattice point.
std::complex<double> wp(std::complex<double> z, const Lattice& L);
std::complex<double> wp_prime(std::complex<double> z, const Lattice& L);

// (g2, g3) Eisenstein invariants.
std::pair<std::complex<double>, std::complex<double>> invariants(
    const Lattice& L);

// Rescales a square (tau = i) lattice to (g2, g3) = (4, 0) or a hexagonal
// (tau = e^{i pi/3}) lattice to (0, 4); throws UnsupportedTau otherwise.
Lattice normalize(const Lattice& L);

// wp at the half periods scale/2, scale(1+tau)/2, scale*tau/2.
std::array<std::complex<double>, 3> half_period_values(const Lattice& L);

// Max relative residual of the Strebel pullback identity on the normalized
// lattice: wp'^2 = -4 wp (1 - wp^2) for the square case,
// wp'^2 = 4 (wp^3 - 1) for the hexagonal one.
double pullback_residual(EllipticCase kind, int samples,
                         std::uint64_t seed = 1);

struct EllipticReport {
    EllipticCase kind = EllipticCase::Square;
    Lattice normalized;
    std::complex<double> g2, g3;
    std::array<std::complex<double>, 3> e; // e1, e2, e3
    double e_deviation = 0.0;   // from (1,0,-1) resp. cube roots of unity
    double e_sum = 0.0;         // |e1 + e2 + e3|
    double pullback_max = 0.0;  // residual over 50 samples
    double quadratic_zero = 0.0; // square case: max magnitude of both sides
                                 // of the identity at omega_2
    double doubling_delta = 0.0; // change in wp/g2/g3 when the truncation
                                 // doubles
    bool ok = false;
};

EllipticReport elliptic_report(EllipticCase kind);

} // namespace ribbon
