#include "ribbon/characteristic.hpp"

#include "ribbon/errors.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace ribbon {

Rational bernoulli(int m) {
    if (m < 0) throw std::invalid_argument("bernoulli index must be >= 0");
    std::vector<Rational> b(m + 1);
    for (int i = 0; i <= m; ++i) {
        Rational acc = 0;
        for (int k = 0; k < i; ++k)
            acc += Rational(binomial(i + 1, k)) * b[k];
        b[i] = i == 0 ? Rational(1) : -acc / (i + 1);
    }
    return b[m];
}

Rational zeta_one_minus_2g(int g) {
    if (g < 1) throw std::invalid_argument("zeta_one_minus_2g needs g >= 1");
    return -bernoulli(2 * g) / (2 * g);
}

namespace {

Rational signed_unit(int e) { return e % 2 == 0 ? 1 : -1; }

} // namespace

Rational chi_sum(const std::vector<CensusEntry>& census, ChiMode mode,
                 bool complete) {
    if (!complete) throw IncompleteCensus("census flagged as partial");
    if (census.empty()) throw IncompleteCensus("empty census");
    const int g = census[0].g, n = census[0].b;
    for (const CensusEntry& entry : census)
        if (entry.g != g || entry.b != n)
            throw IncompleteCensus("mixed (g, n) in census input");

    const bool elliptic_correction = g == 1 && n == 1;
    Rational total = 0;
    for (const CensusEntry& entry : census) {
        switch (mode) {
        case ChiMode::Plain:
            total += signed_unit(entry.e) / Rational(entry.aut_order);
            break;
        case ChiMode::Orbifold: {
            Rational weight(entry.aut_order);
            if (elliptic_correction) weight /= 2;
            total += signed_unit(entry.e) / weight;
            break;
        }
        case ChiMode::Labeled: {
            Rational weight(entry.aut_boundary_order);
            if (elliptic_correction) weight /= 2;
            total += Rational(entry.labeled_orbit_count) *
                     signed_unit(entry.e) / weight;
            break;
        }
        }
    }
    return total;
}

Rational chi_closed_form(int g, int n) {
    if (g == 0)
        throw GenusZeroUnsupported(
            "closed form degenerates at g = 0; use a census sum");
    if (g < 0 || n < 1)
        throw std::invalid_argument("need g >= 1 and n >= 1");
    Rational front = Rational(factorial(2 * g + n - 3)) * (2 * g) *
                     (2 * g - 1) /
                     (Rational(factorial(2 * g)) * factorial(n));
    return -front * zeta_one_minus_2g(g);
}

Rational composition_identity(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    return signed_unit(n) / Rational(factorial(static_cast<unsigned>(n)));
}

Rational chi_orbifold_quotient(int n,
                               const std::vector<std::vector<int>>& generators,
                               long long abstract_order) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    for (const auto& gen : generators) {
        if (static_cast<int>(gen.size()) != n)
            throw std::invalid_argument("generator has wrong size");
        std::vector<char> hit(n, 0);
        for (int x : gen) {
            if (x < 0 || x >= n || hit[x])
                throw std::invalid_argument("generator is not a permutation");
            hit[x] = 1;
        }
    }
    std::set<std::vector<int>> closure = {id};
    std::vector<std::vector<int>> frontier = {id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& a : frontier) {
            for (const auto& gen : generators) {
                std::vector<int> prod(n);
                for (int i = 0; i < n; ++i) prod[i] = gen[a[i]];
                if (closure.insert(prod).second) next.push_back(std::move(prod));
            }
        }
        frontier = std::move(next);
    }
    const long long image_order = static_cast<long long>(closure.size());
    if (abstract_order > 0 && abstract_order != image_order)
        throw NotFaithful("abstract order " + std::to_string(abstract_order) +
                          " but the permutation image has order " +
                          std::to_string(image_order));
    return signed_unit(n) / Rational(image_order);
}

} // namespace ribbon
