#pragma once

#include "ribbon/map.hpp"
#include "ribbon/symmetry.hpp"

#include <vector>

namespace ribbon {

struct CensusOptions {
    int max_edges = 9; // guard on e_max = 6g - 6 + 3n
    int jobs = 1;
};

struct CensusEntry {
    CanonicalForm canonical;
    int v = 0, e = 0, b = 0, g = 0;
    int aut_order = 0;
    int aut_boundary_order = 0;
    bool exceptional = false;
    long long labeled_orbit_count = 0; // n! * aut_boundary_order / aut_order
};

// All isomorphism classes of ribbon graphs with every vertex of degree >= 3,
// genus g and n boundary components, sorted by canonical form (dart count
// first). Throws UnsatisfiableParameters unless 2 - 2g - n < 0, TooLarge when
// e_max = 6g - 6 + 3n exceeds options.max_edges.
std::vector<CensusEntry> enumerate(int g, int n,
                                   const CensusOptions& options = {});

struct LabeledCensusEntry {
    CensusEntry entry;          // the underlying unlabeled class
    std::vector<int> labels;    // per boundary cycle, a permutation of 0..n-1
    int aut_order = 0;          // automorphisms respecting the labels
};

// Isomorphism classes of boundary-labeled graphs: each unlabeled class
// splits into labeled_orbit_count classes, represented by the lex-least
// labeling in each orbit of the induced boundary action.
std::vector<LabeledCensusEntry> enumerate_labeled(
    int g, int n, const CensusOptions& options = {});

// Poset of expansions of a base graph, up to isomorphisms fixing the base
// darts. Nodes are indexed level by level (codim = number of added edges),
// each level sorted by its relabel key.
struct ExpansionPoset {
    struct Node {
        RibbonGraph graph;
        std::vector<int> key; // fixed_relabel_key over the base darts
        int codim = 0;
        std::vector<int> covers; // codim-1 nodes reached by contracting one
                                 // added edge, sorted, no duplicates
    };
    std::vector<Node> nodes; // nodes[0] is the base
    int base_darts = 0;
    std::vector<long long> cells_by_codim;
};

// Throws TooLarge when the full expansion depth sum(max(deg - 3, 0)) exceeds
// max_codim.
ExpansionPoset expansion_poset(const RibbonGraph& g, int max_codim = 6);

} // namespace ribbon
