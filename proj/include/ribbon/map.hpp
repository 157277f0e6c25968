#pragma once

#include "ribbon/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ribbon {

// Combinatorial map on darts 0..n_darts-1. sigma cycles are vertices (the
// counterclockwise order of darts around each vertex), alpha is a fixed-point
// free involution pairing the two darts of each edge. Faces are traced by
// phi = sigma after alpha: phi(d) = sigma[alpha[d]].
struct RibbonGraph {
    int n_darts = 0;
    std::vector<int> sigma;
    std::vector<int> alpha;
    int min_degree = 3;

    // Derived structure, filled by build().
    std::vector<std::vector<int>> vertices; // each cycle rotated to start at
                                            // its smallest dart, list sorted
                                            // by that dart
    std::vector<int> vertex_of;             // dart -> index into vertices
    std::vector<std::pair<int, int>> edges; // (smaller, larger) dart, sorted
    std::vector<int> edge_of;               // dart -> index into edges

    int v() const { return static_cast<int>(vertices.size()); }
    int e() const { return static_cast<int>(edges.size()); }
    int degree(int vertex) const {
        return static_cast<int>(vertices[vertex].size());
    }
    bool is_loop(int edge) const {
        return vertex_of[edges[edge].first] == vertex_of[edges[edge].second];
    }
};

struct BoundaryDecomposition {
    std::vector<std::vector<int>> cycles; // phi cycles, each starting at its
                                          // smallest dart, sorted by that dart
    int b = 0;
    std::vector<int> edge_counts; // darts per cycle, aligned with cycles
};

struct MetricRibbonGraph {
    RibbonGraph graph;
    std::vector<Rational> lengths; // per edge, aligned with graph.edges
};

// Validates and assembles a ribbon graph. Throws AlphaNotInvolution,
// AlphaHasFixedPoint, Disconnected, DegreeTooSmall, EmptyGraph.
RibbonGraph build(int n_darts, const std::vector<int>& sigma,
                  const std::vector<int>& alpha, int min_degree = 3);

BoundaryDecomposition boundary_components(const RibbonGraph& g);

// (2 - v + e - b) / 2; throws NonIntegralGenus if the parity is broken,
// which cannot happen for a graph assembled by build().
int genus(const RibbonGraph& g);

struct RefinedGraph {
    RibbonGraph graph;
    std::vector<std::uint8_t> white; // per vertex: 1 for edge midpoints,
                                     // 0 for original vertices
};

// Subdivides every edge with a degree-2 midpoint vertex. Edge i of the input
// (sorted by smaller dart) contributes darts 2e+2i and 2e+2i+1, the even one
// paired with the smaller original dart. Original darts keep their labels.
RefinedGraph edge_refinement(const RibbonGraph& g);

// Contracts a non-loop edge (index into g.edges), merging its endpoints and
// splicing their rotations. Remaining darts are relabeled downward to stay
// contiguous; relative order is preserved. Throws LoopContraction.
RibbonGraph contract_edge(const RibbonGraph& g, int edge);

// All ways to split the given vertex along a chord: one new edge, each side
// keeping at least two of the original darts. A degree-m vertex yields
// m(m-3)/2 results, in lexicographic cut-pair order; empty for m <= 3.
// New darts get labels n_darts and n_darts+1.
std::vector<RibbonGraph> expansions_at_vertex(const RibbonGraph& g,
                                              int vertex);

// Number of trivalent full expansions of a degree-d star, closed form
// Catalan(d-2) = C(2d-4, d-2)/(d-1).
Integer maximal_expansion_count(int d);

// Same count obtained by actually expanding a degree-d star to trivalence and
// deduplicating; must agree with the closed form.
Integer maximal_expansion_count_generated(int d);

// Encoded (sigma, alpha) after relabeling darts >= n_fixed in deterministic
// discovery order (scan darts by label; assign sigma image, then alpha image).
// Two graphs on the same dart set are related by an isomorphism fixing darts
// 0..n_fixed-1 iff their keys are equal. Requires n_fixed >= 1.
std::vector<int> fixed_relabel_key(const RibbonGraph& g, int n_fixed);

// Conjugates the graph by a dart permutation: sigma' = p sigma p^-1.
RibbonGraph relabel(const RibbonGraph& g, const std::vector<int>& perm);

} // namespace ribbon
