#include "ribbon/errors.hpp"
#include "ribbon/map.hpp"
#include "ribbon/symmetry.hpp"

#include <doctest.h>

#include <vector>

using namespace ribbon;

namespace {

RibbonGraph theta() {
    return build(6, {1, 2, 0, 4, 5, 3}, {3, 5, 4, 0, 2, 1});
}

RibbonGraph figure_eight() {
    return build(4, {1, 2, 3, 0}, {1, 0, 3, 2});
}

RibbonGraph dumbbell() {
    return build(6, {1, 2, 0, 4, 5, 3}, {1, 0, 5, 4, 3, 2});
}

RibbonGraph torus_square() {
    return build(4, {1, 2, 3, 0}, {2, 3, 0, 1});
}

RibbonGraph star(int d) {
    std::vector<int> sigma(2 * d), alpha(2 * d);
    for (int i = 0; i < d; ++i) {
        sigma[i] = (i + 1) % d;
        sigma[d + i] = d + i;
        alpha[i] = d + i;
        alpha[d + i] = i;
    }
    return build(2 * d, sigma, alpha, 1);
}

} // namespace

TEST_CASE("theta graph structure") {
    RibbonGraph g = theta();
    CHECK(g.v() == 2);
    CHECK(g.e() == 3);
    CHECK(g.vertices[0] == std::vector<int>{0, 1, 2});
    CHECK(g.vertices[1] == std::vector<int>{3, 4, 5});
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 3}, {1, 5}, {2, 4}});
    CHECK_FALSE(g.is_loop(0));

    BoundaryDecomposition bd = boundary_components(g);
    CHECK(bd.b == 3);
    CHECK(bd.cycles == std::vector<std::vector<int>>{{0, 4}, {1, 3}, {2, 5}});
    CHECK(genus(g) == 0);
}

TEST_CASE("figure eight structure") {
    RibbonGraph g = figure_eight();
    CHECK(g.v() == 1);
    CHECK(g.e() == 2);
    CHECK(g.is_loop(0));
    CHECK(g.is_loop(1));

    BoundaryDecomposition bd = boundary_components(g);
    CHECK(bd.cycles == std::vector<std::vector<int>>{{0, 2}, {1}, {3}});
    CHECK(genus(g) == 0);
}

TEST_CASE("dumbbell structure") {
    RibbonGraph g = dumbbell();
    CHECK(g.v() == 2);
    CHECK(g.e() == 3);
    CHECK(g.is_loop(0));
    CHECK_FALSE(g.is_loop(1));
    CHECK(g.is_loop(2));

    BoundaryDecomposition bd = boundary_components(g);
    CHECK(bd.cycles == std::vector<std::vector<int>>{{0, 2, 3, 5}, {1}, {4}});
    CHECK(genus(g) == 0);
}

TEST_CASE("genus one square") {
    RibbonGraph g = torus_square();
    CHECK(g.v() == 1);
    CHECK(g.e() == 2);
    BoundaryDecomposition bd = boundary_components(g);
    CHECK(bd.b == 1);
    CHECK(bd.cycles == std::vector<std::vector<int>>{{0, 3, 2, 1}});
    CHECK(genus(g) == 1);
}

TEST_CASE("build validation") {
    CHECK_THROWS_AS(build(0, {}, {}), EmptyGraph);
    // alpha fixes a dart
    CHECK_THROWS_AS(build(2, {1, 0}, {0, 1}, 1), AlphaHasFixedPoint);
    // alpha is not an involution
    CHECK_THROWS_AS(build(4, {1, 2, 3, 0}, {1, 2, 3, 0}), AlphaNotInvolution);
    // sigma is not a permutation
    CHECK_THROWS_AS(build(2, {0, 0}, {1, 0}), std::invalid_argument);
    // two disjoint loops
    CHECK_THROWS_AS(build(4, {1, 0, 3, 2}, {1, 0, 3, 2}, 1), Disconnected);
    // single loop on a degree-2 vertex
    CHECK_THROWS_AS(build(2, {1, 0}, {1, 0}), DegreeTooSmall);
    CHECK(build(2, {1, 0}, {1, 0}, 2).v() == 1);
}

TEST_CASE("contracting a theta edge gives the figure eight") {
    RibbonGraph g = contract_edge(theta(), 0);
    CHECK(g.n_darts == 4);
    CHECK(g.sigma == std::vector<int>{1, 2, 3, 0});
    CHECK(g.alpha == std::vector<int>{3, 2, 1, 0});
    CHECK(boundary_components(g).b == 3);
    CHECK(genus(g) == 0);
    CHECK(is_isomorphic(g, figure_eight()));
}

TEST_CASE("contracting the genus one theta gives the square") {
    RibbonGraph g =
        build(6, {1, 2, 0, 4, 5, 3}, {3, 4, 5, 0, 1, 2}); // alpha (03)(14)(25)
    CHECK(genus(g) == 1);
    CHECK(boundary_components(g).b == 1);
    RibbonGraph c = contract_edge(g, 0);
    CHECK(c.sigma == std::vector<int>{1, 2, 3, 0});
    CHECK(c.alpha == std::vector<int>{2, 3, 0, 1});
    CHECK(is_isomorphic(c, torus_square()));
}

TEST_CASE("loop contraction is rejected") {
    CHECK_THROWS_AS(contract_edge(figure_eight(), 0), LoopContraction);
    CHECK_THROWS_AS(contract_edge(dumbbell(), 0), LoopContraction);
    CHECK_NOTHROW(contract_edge(dumbbell(), 1));
}

TEST_CASE("contraction preserves boundary and genus") {
    for (const RibbonGraph& g : {theta(), dumbbell()}) {
        BoundaryDecomposition before = boundary_components(g);
        for (int ei = 0; ei < g.e(); ++ei) {
            if (g.is_loop(ei)) continue;
            RibbonGraph c = contract_edge(g, ei);
            CHECK(c.v() == g.v() - 1);
            CHECK(c.e() == g.e() - 1);
            CHECK(boundary_components(c).b == before.b);
            CHECK(genus(c) == genus(g));
        }
    }
}

TEST_CASE("edge refinement subdivides every edge") {
    RefinedGraph r = edge_refinement(theta());
    CHECK(r.graph.n_darts == 12);
    CHECK(r.graph.v() == 5);
    CHECK(r.graph.e() == 6);
    int whites = 0;
    for (std::uint8_t w : r.white) whites += w;
    CHECK(whites == 3);
    // original vertices keep their darts, midpoints follow
    CHECK(r.white[0] == 0);
    CHECK(r.white[1] == 0);
    CHECK(r.white[2] == 1);
    CHECK(boundary_components(r.graph).b == 3);
    CHECK(genus(r.graph) == 0);
    // every refined edge joins a black vertex to a white one
    for (const auto& [p, q] : r.graph.edges)
        CHECK(r.white[r.graph.vertex_of[p]] !=
              r.white[r.graph.vertex_of[q]]);
}

TEST_CASE("edge refinement keeps original dart labels") {
    RibbonGraph g = torus_square();
    RefinedGraph r = edge_refinement(g);
    CHECK(r.graph.n_darts == 8);
    for (int d = 0; d < g.n_darts; ++d)
        CHECK(r.graph.sigma[d] == g.sigma[d]);
    CHECK(boundary_components(r.graph).b == 1);
    CHECK(genus(r.graph) == 1);
}

TEST_CASE("expansions at a vertex") {
    CHECK(expansions_at_vertex(theta(), 0).empty());

    auto quad = expansions_at_vertex(figure_eight(), 0);
    CHECK(quad.size() == 2); // 4 * 1 / 2
    for (const RibbonGraph& g : quad) {
        CHECK(g.v() == 2);
        CHECK(g.e() == 3);
        CHECK(g.degree(0) == 3);
        CHECK(g.degree(1) == 3);
        CHECK(boundary_components(g).b == 3);
        CHECK(genus(g) == 0);
    }

    CHECK(expansions_at_vertex(star(5), 0).size() == 5);
    CHECK(expansions_at_vertex(star(6), 0).size() == 9);
}

TEST_CASE("expansion then contraction returns the original") {
    RibbonGraph g = figure_eight();
    for (const RibbonGraph& exp : expansions_at_vertex(g, 0)) {
        // the added edge pairs the two fresh darts
        int added = exp.edge_of[g.n_darts];
        CHECK_FALSE(exp.is_loop(added));
        CHECK(is_isomorphic(contract_edge(exp, added), g));
    }
}

TEST_CASE("trivalent expansion counts") {
    CHECK(maximal_expansion_count(3) == 1);
    CHECK(maximal_expansion_count(4) == 2);
    CHECK(maximal_expansion_count(5) == 5);
    CHECK(maximal_expansion_count(6) == 14);
    CHECK(maximal_expansion_count(7) == 42);
    CHECK(maximal_expansion_count(10) == 1430);
    for (int d = 3; d <= 7; ++d)
        CHECK(maximal_expansion_count_generated(d) ==
              maximal_expansion_count(d));
}

TEST_CASE("fixed relabel key ignores fresh dart names") {
    RibbonGraph g = star(4);
    auto exps = expansions_at_vertex(g, 0);
    REQUIRE(exps.size() == 2);
    // swapping the two fresh darts by hand leaves the key unchanged
    std::vector<int> perm(exps[0].n_darts);
    for (int d = 0; d < exps[0].n_darts; ++d) perm[d] = d;
    std::swap(perm[g.n_darts], perm[g.n_darts + 1]);
    RibbonGraph swapped = relabel(exps[0], perm);
    CHECK(fixed_relabel_key(swapped, g.n_darts) ==
          fixed_relabel_key(exps[0], g.n_darts));
    CHECK(fixed_relabel_key(exps[0], g.n_darts) !=
          fixed_relabel_key(exps[1], g.n_darts));
}

TEST_CASE("relabel conjugates both permutations") {
    RibbonGraph g = theta();
    std::vector<int> perm = {5, 4, 3, 2, 1, 0};
    RibbonGraph r = relabel(g, perm);
    for (int d = 0; d < 6; ++d) {
        CHECK(r.sigma[perm[d]] == perm[g.sigma[d]]);
        CHECK(r.alpha[perm[d]] == perm[g.alpha[d]]);
    }
    CHECK(is_isomorphic(g, r));
}
