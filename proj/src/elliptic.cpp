#include "ribbon/elliptic.hpp"

#include "ribbon/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace ribbon {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

// 1/sin^2 and cot with overflow-safe exponential tails for |Im| large; the
// row sums feed arguments with imaginary part up to truncation * Im tau.
Complex csc2(Complex w) {
    if (std::abs(w.imag()) > 20.0) {
        const Complex ww = w.imag() > 0 ? w : -w;
        return -4.0 * std::exp(Complex(0.0, 2.0) * ww);
    }
    const Complex s = std::sin(w);
    return 1.0 / (s * s);
}

Complex cot(Complex w) {
    if (std::abs(w.imag()) > 20.0)
        return Complex(0.0, w.imag() > 0 ? -1.0 : 1.0);
    return std::cos(w) / std::sin(w);
}

void check_lattice(const Lattice& L) {
    if (!(L.tau.imag() > 0))
        throw std::invalid_argument("lattice tau must have Im > 0");
    if (L.scale == Complex(0.0, 0.0))
        throw std::invalid_argument("lattice scale must be nonzero");
}

int rows(const Lattice& L) { return std::max(L.truncation, 10); }

// Distance from z to the nearest point of Z + Z tau.
double lattice_distance(Complex z, Complex tau) {
    const double y = z.imag() / tau.imag();
    const double x = z.real() - y * tau.real();
    double best = 1e300;
    for (int dm = -1; dm <= 1; ++dm) {
        for (int dn = -1; dn <= 1; ++dn) {
            const double m = std::round(x) + dm, n = std::round(y) + dn;
            best = std::min(best, std::abs(z - m - n * tau));
        }
    }
    return best;
}

// wp on the unit lattice Z + Z tau: the inner sum over each row n is the
// closed form pi^2/sin^2(pi (z - n tau)), with the n != 0 rows recentred by
// their value at the row's lattice point so the total matches the defining
// normalization wp(z) ~ 1/z^2 - 0 + O(z^2).
Complex wp_base(Complex z, Complex tau, int n_rows) {
    Complex s = kPi * kPi * csc2(kPi * z) - kPi * kPi / 3.0;
    for (int n = 1; n <= n_rows; ++n) {
        const Complex center = kPi * kPi * csc2(kPi * (double(n) * tau));
        s += kPi * kPi * csc2(kPi * (z - double(n) * tau)) - center;
        s += kPi * kPi * csc2(kPi * (z + double(n) * tau)) - center;
    }
    return s;
}

Complex wp_prime_base(Complex z, Complex tau, int n_rows) {
    Complex s = 0.0;
    for (int n = -n_rows; n <= n_rows; ++n) {
        const Complex w = kPi * (z - double(n) * tau);
        s += -2.0 * kPi * kPi * kPi * cot(w) * csc2(w);
    }
    return s;
}

// Row sums of the Eisenstein series: sum_m 1/(x - m)^4 and ^6 in closed
// cotangent form (repeated derivatives of pi^2/sin^2).
Complex row4(Complex x) {
    const Complex c = cot(kPi * x);
    const Complex c2 = c * c;
    return std::pow(kPi, 4) / 3.0 * (1.0 + c2) * (1.0 + 3.0 * c2);
}

Complex row6(Complex x) {
    const Complex c = cot(kPi * x);
    const Complex c2 = c * c;
    return std::pow(kPi, 6) / 15.0 * (1.0 + c2) *
           (2.0 + 15.0 * c2 + 15.0 * c2 * c2);
}

std::pair<Complex, Complex> invariants_base(Complex tau, int n_rows) {
    // n = 0 rows equal 2 zeta(4) and 2 zeta(6).
    Complex g4 = std::pow(kPi, 4) / 45.0;
    Complex g6 = 2.0 * std::pow(kPi, 6) / 945.0;
    for (int n = 1; n <= n_rows; ++n) {
        g4 += 2.0 * row4(double(n) * tau);
        g6 += 2.0 * row6(double(n) * tau);
    }
    return {60.0 * g4, 140.0 * g6};
}

const Complex kTauSquare(0.0, 1.0);
const Complex kTauHex(0.5, std::sqrt(3.0) / 2.0);

} // namespace

Complex wp(Complex z, const Lattice& L) {
    check_lattice(L);
    const Complex zb = z / L.scale;
    if (lattice_distance(zb, L.tau) < 1e-9)
        throw PoleAtLatticePoint("wp has a double pole on the lattice");
    return wp_base(zb, L.tau, rows(L)) / (L.scale * L.scale);
}

Complex wp_prime(Complex z, const Lattice& L) {
    check_lattice(L);
    const Complex zb = z / L.scale;
    if (lattice_distance(zb, L.tau) < 1e-9)
        throw PoleAtLatticePoint("wp' has a triple pole on the lattice");
    return wp_prime_base(zb, L.tau, rows(L)) /
           (L.scale * L.scale * L.scale);
}

std::pair<Complex, Complex> invariants(const Lattice& L) {
    check_lattice(L);
    auto [g2, g3] = invariants_base(L.tau, rows(L));
    const Complex s2 = L.scale * L.scale;
    return {g2 / (s2 * s2), g3 / (s2 * s2 * s2)};
}

Lattice normalize(const Lattice& L) {
    check_lattice(L);
    auto [g2, g3] = invariants(L);
    Lattice out = L;
    if (std::abs(L.tau - kTauSquare) < 1e-9) {
        out.scale = L.scale * std::pow(g2 / 4.0, 0.25);
    } else if (std::abs(L.tau - kTauHex) < 1e-9) {
        out.scale = L.scale * std::pow(g3 / 4.0, 1.0 / 6.0);
    } else {
        throw UnsupportedTau("normalization handles tau = i and e^{i pi/3}");
    }
    return out;
}

std::array<Complex, 3> half_period_values(const Lattice& L) {
    const Complex s = L.scale;
    return {wp(s * 0.5, L), wp(s * (1.0 + L.tau) * 0.5, L),
            wp(s * L.tau * 0.5, L)};
}

double pullback_residual(EllipticCase kind, int samples, std::uint64_t seed) {
    const Lattice L = normalize(
        {kind == EllipticCase::Square ? kTauSquare : kTauHex, 1.0, 20});
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        Complex z;
        for (int tries = 0;; ++tries) {
            const double x = 0.05 + 0.9 * unit(rng);
            const double y = 0.05 + 0.9 * unit(rng);
            const Complex base = x + y * L.tau;
            // Stay away from the pole and the half-period ramification
            // points, where both sides vanish to second order.
            if (lattice_distance(2.0 * base, L.tau) > 0.2 || tries > 200) {
                z = L.scale * base;
                break;
            }
        }
        const Complex p = wp(z, L);
        const Complex q = wp_prime(z, L);
        Complex lhs = q * q;
        Complex rhs = kind == EllipticCase::Square
                          ? -4.0 * p * (1.0 - p * p)
                          : 4.0 * (p * p * p - 1.0);
        const double denom = std::max(1.0, std::abs(lhs));
        worst = std::max(worst, std::abs(lhs - rhs) / denom);
    }
    return worst;
}

EllipticReport elliptic_report(EllipticCase kind) {
    EllipticReport rep;
    rep.kind = kind;
    const Complex tau = kind == EllipticCase::Square ? kTauSquare : kTauHex;
    rep.normalized = normalize({tau, 1.0, 20});
    auto [g2, g3] = invariants(rep.normalized);
    rep.g2 = g2;
    rep.g3 = g3;
    rep.e = half_period_values(rep.normalized);

    const Complex omega = std::exp(Complex(0.0, 2.0 * kPi / 3.0));
    const std::array<Complex, 3> expected =
        kind == EllipticCase::Square
            ? std::array<Complex, 3>{1.0, 0.0, -1.0}
            : std::array<Complex, 3>{1.0, omega, omega * omega};
    for (int i = 0; i < 3; ++i)
        rep.e_deviation =
            std::max(rep.e_deviation, std::abs(rep.e[i] - expected[i]));
    rep.e_sum = std::abs(rep.e[0] + rep.e[1] + rep.e[2]);

    rep.pullback_max = pullback_residual(kind, 50);

    if (kind == EllipticCase::Square) {
        // q and its pullback both vanish at omega_2; check the two sides of
        // the differential identity there in the cancelled form.
        const Complex w2 = rep.normalized.scale * (1.0 + tau) * 0.5;
        const Complex p = wp(w2, rep.normalized);
        const Complex dp = wp_prime(w2, rep.normalized);
        const double lhs = std::abs(-4.0 / (kPi * kPi) * p);
        const double rhs = std::abs(1.0 / (kPi * kPi) * dp * dp /
                                    (1.0 - p * p));
        rep.quadratic_zero = std::max(lhs, rhs);
    }

    {
        Lattice doubled = rep.normalized;
        doubled.truncation = rep.normalized.truncation * 2;
        const Complex z = rep.normalized.scale * (0.31 + 0.17 * tau);
        rep.doubling_delta =
            std::abs(wp(z, rep.normalized) - wp(z, doubled));
        auto [h2, h3] = invariants(doubled);
        rep.doubling_delta =
            std::max({rep.doubling_delta, std::abs(rep.g2 - h2),
                      std::abs(rep.g3 - h3)});
    }

    const double target_g =
        kind == EllipticCase::Square ? std::abs(rep.g3) : std::abs(rep.g2);
    const Complex main_g = kind == EllipticCase::Square ? rep.g2 : rep.g3;
    rep.ok = rep.e_deviation < 1e-6 && rep.pullback_max < 1e-6 &&
             rep.e_sum < 1e-8 && target_g < 1e-8 &&
             std::abs(main_g - 4.0) < 1e-8 && rep.doubling_delta < 1e-8;
    return rep;
}

} // namespace ribbon
