#pragma once

#include "ribbon/map.hpp"

#include <compare>
#include <vector>

namespace ribbon {

// Automorphisms are dart permutations commuting with sigma and alpha. The
// action on darts is free, so every element is determined by the image of
// dart 0 and the group order divides 2e.
struct AutGroup {
    std::vector<std::vector<int>> elements; // image arrays, lex sorted;
                                            // identity first
    int order = 0;
    int edge_kernel_order = 0; // elements with psi(d) in {d, alpha(d)} for
                               // every dart d
};

struct CanonicalForm {
    int n_darts = 0;
    std::vector<int> sigma;
    std::vector<int> alpha;

    friend auto operator<=>(const CanonicalForm&,
                            const CanonicalForm&) = default;
};

AutGroup automorphisms(const RibbonGraph& g);

// The subgroup fixing every boundary cycle setwise.
AutGroup boundary_preserving_automorphisms(const RibbonGraph& g);

// Permutation induced on boundary cycles (indices into
// boundary_components(g).cycles) by the dart permutation psi.
std::vector<int> boundary_permutation(const RibbonGraph& g,
                                      const std::vector<int>& psi);

// True when some nontrivial automorphism acts trivially on edges, i.e. the
// edge-action kernel has order 2.
bool is_exceptional(const RibbonGraph& g);

// Lexicographically smallest breadth-first relabeling over all base darts.
// Equal canonical forms characterize isomorphic graphs.
CanonicalForm canonical_form(const RibbonGraph& g);

bool is_isomorphic(const RibbonGraph& a, const RibbonGraph& b);

RibbonGraph from_canonical(const CanonicalForm& cf, int min_degree = 3);

// Small generating set (greedy closure over the sorted elements).
std::vector<std::vector<int>> generating_set(const AutGroup& aut);

} // namespace ribbon
