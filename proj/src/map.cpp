#include "ribbon/map.hpp"

#include "ribbon/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace ribbon {

namespace {

// Cycle decomposition; scanning from the smallest unvisited element makes
// every cycle start at its smallest member and sorts cycles by that member.
std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int d = 0; d < n; ++d) {
        if (seen[d]) continue;
        std::vector<int> cyc;
        int x = d;
        while (!seen[x]) {
            seen[x] = 1;
            cyc.push_back(x);
            x = perm[x];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

void check_permutation(const std::vector<int>& p, int n, const char* name) {
    if (static_cast<int>(p.size()) != n)
        throw std::invalid_argument(std::string(name) + " has wrong length");
    std::vector<char> hit(n, 0);
    for (int x : p) {
        if (x < 0 || x >= n || hit[x])
            throw std::invalid_argument(std::string(name) +
                                        " is not a permutation");
        hit[x] = 1;
    }
}

} // namespace

RibbonGraph build(int n_darts, const std::vector<int>& sigma,
                  const std::vector<int>& alpha, int min_degree) {
    if (n_darts <= 0) throw EmptyGraph("graph must have at least one dart");
    check_permutation(sigma, n_darts, "sigma");
    check_permutation(alpha, n_darts, "alpha");
    for (int d = 0; d < n_darts; ++d) {
        if (alpha[alpha[d]] != d)
            throw AlphaNotInvolution("alpha[alpha[" + std::to_string(d) +
                                     "]] != " + std::to_string(d));
        if (alpha[d] == d)
            throw AlphaHasFixedPoint("alpha fixes dart " + std::to_string(d));
    }

    // Connectivity over the action of sigma and alpha together.
    {
        std::vector<char> seen(n_darts, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int d = stack.back();
            stack.pop_back();
            for (int nb : {sigma[d], alpha[d]}) {
                if (!seen[nb]) {
                    seen[nb] = 1;
                    ++reached;
                    stack.push_back(nb);
                }
            }
        }
        if (reached != n_darts)
            throw Disconnected("only " + std::to_string(reached) + " of " +
                               std::to_string(n_darts) + " darts reachable");
    }

    RibbonGraph g;
    g.n_darts = n_darts;
    g.sigma = sigma;
    g.alpha = alpha;
    g.min_degree = min_degree;
    g.vertices = cycles_of(sigma);
    g.vertex_of.assign(n_darts, -1);
    for (int vi = 0; vi < static_cast<int>(g.vertices.size()); ++vi)
        for (int d : g.vertices[vi]) g.vertex_of[d] = vi;
    for (const auto& cyc : g.vertices)
        if (static_cast<int>(cyc.size()) < min_degree)
            throw DegreeTooSmall("vertex at dart " + std::to_string(cyc[0]) +
                                 " has degree " + std::to_string(cyc.size()));
    g.edge_of.assign(n_darts, -1);
    for (int d = 0; d < n_darts; ++d)
        if (d < alpha[d]) g.edges.emplace_back(d, alpha[d]);
    for (int ei = 0; ei < static_cast<int>(g.edges.size()); ++ei) {
        g.edge_of[g.edges[ei].first] = ei;
        g.edge_of[g.edges[ei].second] = ei;
    }
    return g;
}

BoundaryDecomposition boundary_components(const RibbonGraph& g) {
    std::vector<int> phi(g.n_darts);
    for (int d = 0; d < g.n_darts; ++d) phi[d] = g.sigma[g.alpha[d]];
    BoundaryDecomposition bd;
    bd.cycles = cycles_of(phi);
    bd.b = static_cast<int>(bd.cycles.size());
    for (const auto& c : bd.cycles)
        bd.edge_counts.push_back(static_cast<int>(c.size()));
    return bd;
}

int genus(const RibbonGraph& g) {
    int b = boundary_components(g).b;
    int twice = 2 - g.v() + g.e() - b;
    if (twice % 2 != 0)
        throw NonIntegralGenus("2 - v + e - b = " + std::to_string(twice));
    return twice / 2;
}

RefinedGraph edge_refinement(const RibbonGraph& g) {
    const int n = g.n_darts;
    const int e = g.e();
    std::vector<int> sigma(n + 2 * e), alpha(n + 2 * e);
    for (int d = 0; d < n; ++d) sigma[d] = g.sigma[d];
    for (int i = 0; i < e; ++i) {
        auto [p, q] = g.edges[i];
        int x = n + 2 * i, y = n + 2 * i + 1;
        sigma[x] = y;
        sigma[y] = x;
        alpha[p] = x;
        alpha[x] = p;
        alpha[q] = y;
        alpha[y] = q;
    }
    RefinedGraph out;
    out.graph = build(n + 2 * e, sigma, alpha, std::min(g.min_degree, 2));
    for (const auto& cyc : out.graph.vertices)
        out.white.push_back(cyc[0] >= n ? 1 : 0);
    return out;
}

RibbonGraph contract_edge(const RibbonGraph& g, int edge) {
    if (edge < 0 || edge >= g.e())
        throw std::invalid_argument("edge index out of range");
    auto [p, q] = g.edges[edge];
    if (g.vertex_of[p] == g.vertex_of[q])
        throw LoopContraction("edge " + std::to_string(edge) + " is a loop");
    if (g.n_darts == 2)
        throw EmptyGraph("contracting the only edge leaves nothing");

    std::vector<int> succ = g.sigma;
    std::vector<int> pred(g.n_darts);
    for (int d = 0; d < g.n_darts; ++d) pred[g.sigma[d]] = d;

    // Splice the rotations at the two endpoints into one, dropping p and q.
    // A degree-1 endpoint contributes nothing to the merged cycle.
    if (g.sigma[p] == p) {
        succ[pred[q]] = g.sigma[q];
    } else if (g.sigma[q] == q) {
        succ[pred[p]] = g.sigma[p];
    } else {
        succ[pred[p]] = g.sigma[q];
        succ[pred[q]] = g.sigma[p];
    }

    std::vector<int> newid(g.n_darts, -1);
    int next = 0;
    for (int d = 0; d < g.n_darts; ++d)
        if (d != p && d != q) newid[d] = next++;
    std::vector<int> sigma(next), alpha(next);
    for (int d = 0; d < g.n_darts; ++d) {
        if (d == p || d == q) continue;
        sigma[newid[d]] = newid[succ[d]];
        alpha[newid[d]] = newid[g.alpha[d]];
    }
    return build(next, sigma, alpha, g.min_degree);
}

std::vector<RibbonGraph> expansions_at_vertex(const RibbonGraph& g,
                                              int vertex) {
    if (vertex < 0 || vertex >= g.v())
        throw std::invalid_argument("vertex index out of range");
    const std::vector<int>& c = g.vertices[vertex];
    const int m = static_cast<int>(c.size());
    std::vector<RibbonGraph> out;
    if (m < 4) return out;
    const int n = g.n_darts;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (j - i < 2 || m - (j - i) < 2) continue;
            std::vector<int> sigma = g.sigma;
            std::vector<int> alpha = g.alpha;
            sigma.resize(n + 2);
            alpha.resize(n + 2);
            const int x = n, y = n + 1;
            // New vertex cycles (x, c[i..j-1]) and (y, c[j..], c[..i-1]).
            sigma[x] = c[i];
            sigma[c[j - 1]] = x;
            sigma[y] = c[j];
            sigma[c[(i + m - 1) % m]] = y;
            alpha[x] = y;
            alpha[y] = x;
            out.push_back(build(n + 2, sigma, alpha, g.min_degree));
        }
    }
    return out;
}

Integer maximal_expansion_count(int d) {
    if (d < 3) throw std::invalid_argument("star degree must be >= 3");
    return binomial(2 * d - 4, d - 2) / (d - 1);
}

Integer maximal_expansion_count_generated(int d) {
    if (d < 3) throw std::invalid_argument("star degree must be >= 3");
    const int n0 = 2 * d;
    std::vector<int> sigma(n0), alpha(n0);
    for (int i = 0; i < d; ++i) {
        sigma[i] = (i + 1) % d;
        sigma[d + i] = d + i;
        alpha[i] = d + i;
        alpha[d + i] = i;
    }
    std::map<std::vector<int>, RibbonGraph> frontier;
    RibbonGraph star = build(n0, sigma, alpha, 1);
    frontier.emplace(fixed_relabel_key(star, n0), std::move(star));
    for (int level = 0; level < d - 3; ++level) {
        std::map<std::vector<int>, RibbonGraph> next;
        for (const auto& [key, graph] : frontier) {
            // Splittings at distinct vertices commute, so every trivalent
            // expansion is reachable by always splitting the first vertex
            // of degree above three.
            int vi = 0;
            while (vi < graph.v() && graph.degree(vi) <= 3) ++vi;
            if (vi == graph.v()) continue;
            for (RibbonGraph& exp : expansions_at_vertex(graph, vi)) {
                std::vector<int> k = fixed_relabel_key(exp, n0);
                next.emplace(std::move(k), std::move(exp));
            }
        }
        frontier = std::move(next);
    }
    return Integer(frontier.size());
}

std::vector<int> fixed_relabel_key(const RibbonGraph& g, int n_fixed) {
    if (n_fixed < 1 || n_fixed > g.n_darts)
        throw std::invalid_argument("n_fixed out of range");
    const int n = g.n_darts;
    std::vector<int> newid(n, -1), order;
    order.reserve(n);
    for (int d = 0; d < n_fixed; ++d) {
        newid[d] = d;
        order.push_back(d);
    }
    int next = n_fixed;
    for (int i = 0; i < n; ++i) {
        int od = order[i];
        for (int nb : {g.sigma[od], g.alpha[od]}) {
            if (newid[nb] < 0) {
                newid[nb] = next++;
                order.push_back(nb);
            }
        }
    }
    std::vector<int> key;
    key.reserve(2 * n + 1);
    key.push_back(n);
    for (int l = 0; l < n; ++l) {
        key.push_back(newid[g.sigma[order[l]]]);
        key.push_back(newid[g.alpha[order[l]]]);
    }
    return key;
}

RibbonGraph relabel(const RibbonGraph& g, const std::vector<int>& perm) {
    std::vector<int> sigma(g.n_darts), alpha(g.n_darts);
    for (int d = 0; d < g.n_darts; ++d) {
        sigma[perm[d]] = perm[g.sigma[d]];
        alpha[perm[d]] = perm[g.alpha[d]];
    }
    return build(g.n_darts, sigma, alpha, g.min_degree);
}

} // namespace ribbon
