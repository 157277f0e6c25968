#include "ribbon/strebel.hpp"

#include "ribbon/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace ribbon {

namespace {

MetricRibbonGraph theta_graph(const Rational& l0, const Rational& l1,
                              const Rational& l2) {
    MetricRibbonGraph m;
    m.graph = build(6, {1, 2, 0, 4, 5, 3}, {3, 5, 4, 0, 2, 1});
    m.lengths = {l0, l1, l2};
    return m;
}

MetricRibbonGraph figure_eight_graph(const Rational& l0, const Rational& l1) {
    MetricRibbonGraph m;
    m.graph = build(4, {1, 2, 3, 0}, {1, 0, 3, 2});
    m.lengths = {l0, l1};
    return m;
}

MetricRibbonGraph dumbbell_graph(const Rational& l0, const Rational& l1,
                                 const Rational& l2) {
    MetricRibbonGraph m;
    m.graph = build(6, {1, 2, 0, 4, 5, 3}, {1, 0, 5, 4, 3, 2});
    m.lengths = {l0, l1, l2};
    return m;
}

} // namespace

Strebel03Solution solve_m03(const Rational& a0, const Rational& a1,
                            const Rational& ainf) {
    for (const Rational* p : {&a0, &a1, &ainf})
        if (*p <= 0)
            throw NonPositivePerimeter("perimeters must be positive, got " +
                                       to_string(*p));
    Strebel03Solution sol;
    sol.a0 = a0;
    sol.a1 = a1;
    sol.ainf = ainf;
    sol.a = (a0 * a0 + ainf * ainf - a1 * a1) / 2;
    sol.b = (a1 * a1 + ainf * ainf - a0 * a0) / 2;
    sol.c = (a0 * a0 + a1 * a1 - ainf * ainf) / 2;
    sol.discriminant = sol.a * sol.b + sol.b * sol.c + sol.c * sol.a;

    // Triangle factors; at most one can be non-positive since any two of
    // them sum to twice a perimeter.
    const Rational f[3] = {a1 + ainf - a0, a0 + ainf - a1, a0 + a1 - ainf};
    sol.degenerate_factor = -1;
    for (int i = 0; i < 3; ++i)
        if (f[i] <= 0) sol.degenerate_factor = i;

    const double da = to_double(sol.a);
    const double dab = to_double(sol.a + sol.b);
    if (sol.discriminant > 0) {
        sol.disc_case = DiscCase::Positive;
        const double root = std::sqrt(to_double(sol.discriminant));
        sol.zeros = {std::complex<double>(da / dab, root / dab),
                     std::complex<double>(da / dab, -root / dab)};
    } else if (sol.discriminant == 0) {
        sol.disc_case = DiscCase::Zero;
        sol.zeros = {std::complex<double>(da / dab, 0.0),
                     std::complex<double>(da / dab, 0.0)};
    } else {
        sol.disc_case = DiscCase::Negative;
        const double root = std::sqrt(to_double(-sol.discriminant));
        sol.zeros = {std::complex<double>((da + root) / dab, 0.0),
                     std::complex<double>((da - root) / dab, 0.0)};
    }

    if (sol.disc_case != DiscCase::Negative) {
        // The generic length formulas; on a Zero wall exactly one vanishes.
        sol.L1 = (a0 + ainf - a1) / 2;
        sol.L2 = (a1 + ainf - a0) / 2;
        sol.L3 = (a0 + a1 - ainf) / 2;
    } else {
        // One loop around each of the two non-dominant poles plus a bridge
        // of length -f/2; the assignment to L-slots follows the relabeling
        // action from the canonical wall a0 + a1 - ainf < 0.
        switch (sol.degenerate_factor) {
        case 2:
            sol.L1 = a0;
            sol.L2 = a1;
            sol.L3 = -f[2] / 2;
            break;
        case 1:
            sol.L1 = -f[1] / 2;
            sol.L2 = ainf;
            sol.L3 = a0;
            break;
        default:
            sol.L1 = ainf;
            sol.L2 = -f[0] / 2;
            sol.L3 = a1;
            break;
        }
    }

    switch (sol.disc_case) {
    case DiscCase::Positive:
        // Theta: boundary cycles (0 4), (1 3), (2 5) pick up length pairs
        // L3+L1 = a0, L2+L3 = a1, L1+L2 = ainf.
        sol.graph = theta_graph(sol.L3, sol.L2, sol.L1);
        sol.boundary_labels = {0, 1, 2};
        break;
    case DiscCase::Zero:
        // Figure-eight: cycles (0 2), (1), (3); the outer cycle carries the
        // degenerate pole, the loops take the remaining poles in order.
        switch (sol.degenerate_factor) {
        case 2:
            sol.graph = figure_eight_graph(sol.L1, sol.L2);
            sol.boundary_labels = {2, 0, 1};
            break;
        case 1:
            sol.graph = figure_eight_graph(sol.L3, sol.L2);
            sol.boundary_labels = {1, 0, 2};
            break;
        default:
            sol.graph = figure_eight_graph(sol.L3, sol.L1);
            sol.boundary_labels = {0, 1, 2};
            break;
        }
        break;
    case DiscCase::Negative:
        // Dumbbell: cycles (0 2 3 5), (1), (4); the long cycle carries the
        // dominant pole, the loops the remaining poles in order.
        switch (sol.degenerate_factor) {
        case 2:
            sol.graph = dumbbell_graph(sol.L1, sol.L3, sol.L2);
            sol.boundary_labels = {2, 0, 1};
            break;
        case 1:
            sol.graph = dumbbell_graph(sol.L3, sol.L1, sol.L2);
            sol.boundary_labels = {1, 0, 2};
            break;
        default:
            sol.graph = dumbbell_graph(sol.L3, sol.L2, sol.L1);
            sol.boundary_labels = {0, 1, 2};
            break;
        }
        break;
    }
    return sol;
}

std::array<Rational, 3> perimeters_from_lengths(const Rational& L1,
                                                const Rational& L2,
                                                const Rational& L3) {
    for (const Rational* p : {&L1, &L2, &L3})
        if (*p <= 0)
            throw NonPositiveLength("lengths must be positive, got " +
                                    to_string(*p));
    return {L1 + L3, L2 + L3, L1 + L2};
}

bool zeros_are_exact(const Strebel03Solution& sol) {
    // N((a +- s)/(a+b)) with s^2 = -discriminant reduces to
    // ((a+b)(a+c) - a^2 - discriminant) / (a+b); the cross terms cancel.
    return (sol.a + sol.b) * (sol.a + sol.c) - sol.a * sol.a ==
           sol.discriminant;
}

S3CheckData s3_action_check(const std::array<int, 3>& perm,
                            const std::array<Rational, 3>& a) {
    {
        bool hit[3] = {false, false, false};
        for (int x : perm) {
            if (x < 0 || x > 2 || hit[x])
                throw std::invalid_argument("perm is not a permutation");
            hit[x] = true;
        }
    }
    Strebel03Solution before = solve_m03(a[0], a[1], a[2]);
    if (before.disc_case != DiscCase::Positive)
        throw std::invalid_argument("s3_action_check needs a Positive triple");
    std::array<Rational, 3> moved;
    for (int i = 0; i < 3; ++i) moved[perm[i]] = a[i];
    Strebel03Solution after = solve_m03(moved[0], moved[1], moved[2]);

    // Pole pairs behind each length slot.
    static const int pair_of[3][2] = {{0, 2}, {1, 2}, {0, 1}};
    auto slot_of = [](int x, int y) {
        for (int s = 0; s < 3; ++s) {
            if ((pair_of[s][0] == x && pair_of[s][1] == y) ||
                (pair_of[s][0] == y && pair_of[s][1] == x))
                return s;
        }
        throw std::logic_error("bad pole pair");
    };

    S3CheckData data;
    data.lengths_before = {before.L1, before.L2, before.L3};
    data.lengths_after = {after.L1, after.L2, after.L3};
    for (int s = 0; s < 3; ++s)
        data.induced[s] = slot_of(perm[pair_of[s][0]], perm[pair_of[s][1]]);
    data.ok = true;
    for (int s = 0; s < 3; ++s)
        data.ok = data.ok &&
                  data.lengths_after[data.induced[s]] == data.lengths_before[s];
    return data;
}

} // namespace ribbon
