#pragma once

#include "ribbon/map.hpp"
#include "ribbon/rational.hpp"

#include <array>
#include <complex>

namespace ribbon {

enum class DiscCase { Positive, Zero, Negative };

// The three-punctured sphere carries a unique quadratic differential with
// double poles of prescribed perimeters (a0, a1, ainf) at 0, 1, infinity:
//   q = -(1/4 pi^2) N(x) / (x^2 (1-x)^2),  N(x) = (a+b) x^2 - 2a x + (a+c).
// Everything except the zeros (which need a square root) stays rational.
struct Strebel03Solution {
    Rational a0, a1, ainf;
    Rational a, b, c;       // a = (a0^2+ainf^2-a1^2)/2 and cyclic siblings
    Rational discriminant;  // ab + bc + ca
    DiscCase disc_case = DiscCase::Positive;
    int degenerate_factor = -1; // which triangle factor is <= 0:
                                // 0: a1+ainf-a0, 1: a0+ainf-a1,
                                // 2: a0+a1-ainf; -1 in the Positive case
    std::array<std::complex<double>, 2> zeros; // roots of N, + branch first
    Rational L1, L2, L3;
    MetricRibbonGraph graph;
    std::vector<int> boundary_labels; // per boundary cycle: 0, 1, or
                                      // 2 (= infinity), matching perimeters
};

// Throws NonPositivePerimeter. Case Positive yields the planar theta graph,
// Zero the planar figure-eight (one length vanishes), Negative the dumbbell.
Strebel03Solution solve_m03(const Rational& a0, const Rational& a1,
                            const Rational& ainf);

// Inverse of the Positive case: a0 = L1+L3, a1 = L2+L3, ainf = L1+L2.
// Throws NonPositiveLength.
std::array<Rational, 3> perimeters_from_lengths(const Rational& L1,
                                                const Rational& L2,
                                                const Rational& L3);

// Exact check that the stored zeros satisfy N(x) = 0: both the real and
// imaginary parts vanish iff (a+b)(a+c) - a^2 equals the discriminant.
bool zeros_are_exact(const Strebel03Solution& sol);

struct S3CheckData {
    std::array<Rational, 3> lengths_before;
    std::array<Rational, 3> lengths_after;
    std::array<int, 3> induced; // length slot in the input -> slot in the
                                // relabeled solution
    bool ok = false;
};

// Relabels the poles by perm (index 2 = infinity) and verifies the lengths
// move by the pairing L1 <-> {0,inf}, L2 <-> {1,inf}, L3 <-> {0,1}.
// Requires a Positive-case triple.
S3CheckData s3_action_check(const std::array<int, 3>& perm,
                            const std::array<Rational, 3>& a);

} // namespace ribbon
