#pragma once

#include "ribbon/map.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace ribbon {

enum class ChartKind { Strip, Vertex, Disk };

// Chart-relative point: id is a dart for Strip charts (the strip of that
// dart's edge, coordinate measured from the dart's tail vertex), a vertex
// index for Vertex charts, a boundary-cycle index for Disk charts.
struct SurfacePoint {
    ChartKind kind = ChartKind::Strip;
    int id = 0;
    std::complex<double> coord;
};

// Canonical coordinate atlas of the surface glued from a metric ribbon
// graph: one strip of width L per edge, one degree-m cone chart per vertex
// (w = e^{2 pi i k/m} z^{2/m} on the k-th incident sector), one punctured
// disk per boundary cycle (u = e^{2 pi i (offset + z)/perimeter}).
struct ChartAtlas {
    MetricRibbonGraph metric;
    BoundaryDecomposition boundary;
    std::vector<double> edge_length; // per edge
    std::vector<int> branch_index;   // per dart: position k in sigma-order
                                     // around its vertex, 0 at the smallest
                                     // dart
    std::vector<int> cycle_of;       // per dart: boundary cycle index
    std::vector<double> dart_offset; // per dart: accumulated length before it
                                     // along its boundary cycle
    std::vector<double> perimeter;   // per cycle

    bool integer_lengths = false;
    std::vector<long long> edge_length_int;
    std::vector<long long> dart_offset_int;
    std::vector<long long> perimeter_int;
};

// Throws NonPositiveLength on a non-positive edge length or a length count
// mismatch.
ChartAtlas build_atlas(const MetricRibbonGraph& metric);

// Transition maps from the strip of dart d into the chart at its tail
// vertex and into the boundary disk over the strip's upper half.
std::complex<double> to_vertex_chart(const ChartAtlas& atlas, int dart,
                                     std::complex<double> z);
std::complex<double> to_disk_chart(const ChartAtlas& atlas, int dart,
                                   std::complex<double> z);

// Samples overlap points and verifies the quadratic differential transforms
// as (dz)^2 = (m^2/4) w^{m-2} (dw)^2 into vertex charts and as
// (dz)^2 = -(a^2/4 pi^2) (du/u)^2 into disk charts, differentiating the
// recorded transition maps numerically. Returns the max relative residual.
double transition_check(const ChartAtlas& atlas, int samples,
                        std::uint64_t seed = 1);

// Belyi map value at a point, integer edge lengths required:
// sin^2(pi z) on strips, sin^2(pi w^{m/2}) at vertices,
// -(u^a + u^-a - 2)/4 on boundary disks. Throws NonIntegerLengths,
// PointOutsideAtlas.
std::complex<double> belyi_evaluate(const ChartAtlas& atlas,
                                    const SurfacePoint& p);

// Max |f(p) - f(p')| over random pairs of charts presenting the same point
// (strip/vertex, strip/disk, and the two directions of each strip).
double belyi_chart_consistency(const ChartAtlas& atlas, int samples,
                               std::uint64_t seed = 1);

struct RamificationProfile {
    std::vector<int> over_zero;     // vertex degrees, descending
    std::vector<int> over_one;      // e copies of 2
    std::vector<int> over_infinity; // boundary dart counts, descending
};

// Passport of the unit-length Belyi map of degree 2e.
RamificationProfile ramification_profile(const RibbonGraph& g);

// 2 - 2g == 2 deg - sum (ram - 1), checked in integer arithmetic.
bool riemann_hurwitz_exact(const RibbonGraph& g);

struct Dessin {
    RefinedGraph refined;
    std::string dot; // bipartite drawing, black originals / white midpoints
};

Dessin dessin(const RibbonGraph& g);

// Exact checks of the trivalent composition map
// phi(x) = 4 (x^2-x+1)^3 / (27 x^2 (1-x)^2).
struct TrivalentComposeReport {
    bool critical_values_one = false;  // phi(-1) = phi(1/2) = phi(2) = 1
    bool zero_at_vertex_points = false; // phi((1 +- i sqrt 3)/2) = 0, exact
                                        // in Q[x]/(x^2 - x + 1)
    bool derivative_identity = false;  // phi' numerator factors as
                                       // -4 (x-2)(x+1)(2x-1)(x^2-x+1)^2
    bool derivative_vanishes = false;  // phi' = 0 at -1, 1/2, 2
    double max_float_residual = 0.0;
    bool ok = false;
};

TrivalentComposeReport trivalent_compose_check();

} // namespace ribbon
