#pragma once

#include "ribbon/census.hpp"
#include "ribbon/rational.hpp"

#include <vector>

namespace ribbon {

// B_m by the recurrence sum_{k=0}^{m} C(m+1, k) B_k = 0 with B_0 = 1
// (so B_1 = -1/2). Any m >= 0 is accepted; odd m > 1 give 0.
Rational bernoulli(int m);

// zeta(1 - 2g) = -B_{2g} / (2g) for g >= 1.
Rational zeta_one_minus_2g(int g);

enum class ChiMode { Plain, Orbifold, Labeled };

// Euler characteristic from a complete census of one (g, n):
//   plain:    sum (-1)^e / |Aut|
//   orbifold: same, except (g, n) = (1, 1) weighs each class by |Aut|/2
//   labeled:  sum over labeled classes of (-1)^e / |Aut_boundary|, with the
//             same (1, 1) convention so labeled = n! * orbifold throughout
// Throws IncompleteCensus if the caller flags the census as partial or the
// entries do not all share one (g, n).
Rational chi_sum(const std::vector<CensusEntry>& census, ChiMode mode,
                 bool complete = true);

// -(2g+n-3)! (2g)(2g-1) / ((2g)! n!) * zeta(1-2g) for g >= 1; throws
// GenusZeroUnsupported for g = 0 where the formula degenerates.
Rational chi_closed_form(int g, int n);

// (-1)^n / n!, the n-th coefficient of the characteristic composition.
Rational composition_identity(int n);

// (-1)^n / |G| for a group acting faithfully on n coordinates. The group is
// given by permutation generators; if abstract_order > 0 and differs from
// the generated permutation group's order, the abstract group cannot act
// faithfully through these images and NotFaithful is thrown.
Rational chi_orbifold_quotient(int n,
                               const std::vector<std::vector<int>>& generators,
                               long long abstract_order = 0);

} // namespace ribbon
