#include "ribbon/symmetry.hpp"

#include <algorithm>
#include <set>

namespace ribbon {

namespace {

// Attempts to extend dart0 -> target to a full automorphism by propagating
// psi(sigma(d)) = sigma(psi(d)) and psi(alpha(d)) = alpha(psi(d)).
bool extend(const RibbonGraph& g, int target, std::vector<int>& psi) {
    psi.assign(g.n_darts, -1);
    psi[0] = target;
    std::vector<int> stack = {0};
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        const int pairs[2][2] = {{g.sigma[d], g.sigma[psi[d]]},
                                 {g.alpha[d], g.alpha[psi[d]]}};
        for (const auto& pr : pairs) {
            int src = pr[0], img = pr[1];
            if (psi[src] < 0) {
                psi[src] = img;
                stack.push_back(src);
            } else if (psi[src] != img) {
                return false;
            }
        }
    }
    std::vector<char> hit(g.n_darts, 0);
    for (int x : psi) {
        if (x < 0 || hit[x]) return false;
        hit[x] = 1;
    }
    return true;
}

int kernel_count(const RibbonGraph& g,
                 const std::vector<std::vector<int>>& elements) {
    int k = 0;
    for (const auto& psi : elements) {
        bool in_kernel = true;
        for (int d = 0; d < g.n_darts && in_kernel; ++d)
            in_kernel = psi[d] == d || psi[d] == g.alpha[d];
        if (in_kernel) ++k;
    }
    return k;
}

std::vector<int> encode_from(const RibbonGraph& g, int base) {
    const int n = g.n_darts;
    std::vector<int> newid(n, -1), order;
    order.reserve(n);
    newid[base] = 0;
    order.push_back(base);
    for (int i = 0; i < n; ++i) {
        int od = order[i];
        for (int nb : {g.sigma[od], g.alpha[od]}) {
            if (newid[nb] < 0) {
                newid[nb] = static_cast<int>(order.size());
                order.push_back(nb);
            }
        }
    }
    std::vector<int> enc;
    enc.reserve(2 * n);
    for (int l = 0; l < n; ++l) {
        enc.push_back(newid[g.sigma[order[l]]]);
        enc.push_back(newid[g.alpha[order[l]]]);
    }
    return enc;
}

} // namespace

AutGroup automorphisms(const RibbonGraph& g) {
    AutGroup aut;
    std::vector<int> psi;
    for (int t = 0; t < g.n_darts; ++t)
        if (extend(g, t, psi)) aut.elements.push_back(psi);
    aut.order = static_cast<int>(aut.elements.size());
    aut.edge_kernel_order = kernel_count(g, aut.elements);
    return aut;
}

std::vector<int> boundary_permutation(const RibbonGraph& g,
                                      const std::vector<int>& psi) {
    BoundaryDecomposition bd = boundary_components(g);
    std::vector<int> cycle_of(g.n_darts);
    for (int c = 0; c < bd.b; ++c)
        for (int d : bd.cycles[c]) cycle_of[d] = c;
    std::vector<int> perm(bd.b);
    for (int c = 0; c < bd.b; ++c) perm[c] = cycle_of[psi[bd.cycles[c][0]]];
    return perm;
}

AutGroup boundary_preserving_automorphisms(const RibbonGraph& g) {
    AutGroup all = automorphisms(g);
    AutGroup sub;
    for (auto& psi : all.elements) {
        std::vector<int> perm = boundary_permutation(g, psi);
        bool trivial = true;
        for (int c = 0; c < static_cast<int>(perm.size()) && trivial; ++c)
            trivial = perm[c] == c;
        if (trivial) sub.elements.push_back(std::move(psi));
    }
    sub.order = static_cast<int>(sub.elements.size());
    sub.edge_kernel_order = kernel_count(g, sub.elements);
    return sub;
}

bool is_exceptional(const RibbonGraph& g) {
    return automorphisms(g).edge_kernel_order > 1;
}

CanonicalForm canonical_form(const RibbonGraph& g) {
    std::vector<int> best;
    for (int base = 0; base < g.n_darts; ++base) {
        std::vector<int> enc = encode_from(g, base);
        if (best.empty() || enc < best) best = std::move(enc);
    }
    CanonicalForm cf;
    cf.n_darts = g.n_darts;
    cf.sigma.resize(g.n_darts);
    cf.alpha.resize(g.n_darts);
    for (int l = 0; l < g.n_darts; ++l) {
        cf.sigma[l] = best[2 * l];
        cf.alpha[l] = best[2 * l + 1];
    }
    return cf;
}

bool is_isomorphic(const RibbonGraph& a, const RibbonGraph& b) {
    if (a.n_darts != b.n_darts) return false;
    return canonical_form(a) == canonical_form(b);
}

RibbonGraph from_canonical(const CanonicalForm& cf, int min_degree) {
    return build(cf.n_darts, cf.sigma, cf.alpha, min_degree);
}

std::vector<std::vector<int>> generating_set(const AutGroup& aut) {
    const int n = aut.elements.empty()
                      ? 0
                      : static_cast<int>(aut.elements[0].size());
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    std::set<std::vector<int>> closure = {id};
    std::vector<std::vector<int>> gens;
    auto close = [&] {
        std::vector<std::vector<int>> frontier(closure.begin(), closure.end());
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& a : frontier) {
                for (const auto& gen : gens) {
                    std::vector<int> prod(n);
                    for (int i = 0; i < n; ++i) prod[i] = gen[a[i]];
                    if (closure.insert(prod).second)
                        next.push_back(std::move(prod));
                }
            }
            frontier = std::move(next);
        }
    };
    for (const auto& el : aut.elements) {
        if (!closure.count(el)) {
            gens.push_back(el);
            close();
        }
    }
    return gens;
}

} // namespace ribbon
