#include "ribbon/census.hpp"

#include "ribbon/errors.hpp"
#include "ribbon/rational.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <string>
#include <thread>

namespace ribbon {

namespace {

void partitions_rec(int total, int parts, int maxpart, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int p = std::min(maxpart, total - 3 * (parts - 1)); p >= 3; --p) {
        cur.push_back(p);
        partitions_rec(total - p, parts - 1, p, cur, out);
        cur.pop_back();
    }
}

// Descending partitions of total into exactly `parts` parts, each >= 3.
std::vector<std::vector<int>> partitions(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (parts > 0 && total >= 3 * parts)
        partitions_rec(total, parts, total, cur, out);
    return out;
}

struct Generator {
    std::vector<int> h, hinv;
};

// Centralizer elements of the block rotation: one rotation per cycle plus a
// swap for each adjacent pair of equal-length cycles. Conjugating alpha by
// these preserves sigma, so any candidate that a generator strictly lowers
// is a duplicate of something enumerated elsewhere in its orbit.
std::vector<Generator> centralizer_generators(const std::vector<int>& part) {
    std::vector<Generator> gens;
    int n = 0;
    for (int p : part) n += p;
    std::vector<int> starts;
    int s = 0;
    for (int p : part) {
        starts.push_back(s);
        s += p;
    }
    for (std::size_t k = 0; k < part.size(); ++k) {
        Generator gen;
        gen.h.resize(n);
        gen.hinv.resize(n);
        for (int d = 0; d < n; ++d) gen.h[d] = gen.hinv[d] = d;
        for (int t = 0; t < part[k]; ++t) {
            int from = starts[k] + t;
            int to = starts[k] + (t + 1) % part[k];
            gen.h[from] = to;
            gen.hinv[to] = from;
        }
        gens.push_back(std::move(gen));
    }
    for (std::size_t k = 0; k + 1 < part.size(); ++k) {
        if (part[k] != part[k + 1]) continue;
        Generator gen;
        gen.h.resize(n);
        gen.hinv.resize(n);
        for (int d = 0; d < n; ++d) gen.h[d] = gen.hinv[d] = d;
        for (int t = 0; t < part[k]; ++t) {
            int a = starts[k] + t, b = starts[k + 1] + t;
            gen.h[a] = b;
            gen.h[b] = a;
            gen.hinv[a] = b;
            gen.hinv[b] = a;
        }
        gens.push_back(std::move(gen));
    }
    return gens;
}

struct Searcher {
    int n = 0;
    int want_b = 0;
    std::vector<int> sigma;
    std::vector<int> alpha;
    std::vector<Generator> gens;
    std::vector<CanonicalForm> found;

    // scratch
    std::vector<int> mark;
    std::vector<int> stack;

    bool boundary_count_matches() {
        mark.assign(n, 0);
        int cycles = 0;
        for (int d = 0; d < n; ++d) {
            if (mark[d]) continue;
            ++cycles;
            if (cycles > want_b) return false;
            int x = d;
            while (!mark[x]) {
                mark[x] = 1;
                x = sigma[alpha[x]];
            }
        }
        return cycles == want_b;
    }

    bool connected() {
        mark.assign(n, 0);
        stack.clear();
        stack.push_back(0);
        mark[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int d = stack.back();
            stack.pop_back();
            for (int nb : {sigma[d], alpha[d]}) {
                if (!mark[nb]) {
                    mark[nb] = 1;
                    ++reached;
                    stack.push_back(nb);
                }
            }
        }
        return reached == n;
    }

    bool generator_minimal() {
        for (const Generator& gen : gens) {
            for (int x = 0; x < n; ++x) {
                int ax = gen.h[alpha[gen.hinv[x]]];
                if (ax < alpha[x]) return false;
                if (ax > alpha[x]) break;
            }
        }
        return true;
    }

    void leaf() {
        if (!boundary_count_matches()) return;
        if (!connected()) return;
        if (!generator_minimal()) return;
        found.push_back(
            canonical_form(build(n, sigma, alpha, 3)));
    }

    void rec(int from) {
        int d = from;
        while (d < n && alpha[d] >= 0) ++d;
        if (d == n) {
            leaf();
            return;
        }
        for (int t = d + 1; t < n; ++t) {
            if (alpha[t] >= 0) continue;
            alpha[d] = t;
            alpha[t] = d;
            rec(d + 1);
            alpha[d] = -1;
            alpha[t] = -1;
        }
    }
};

struct Task {
    int n = 0;
    int want_b = 0;
    std::vector<int> sigma;
    std::vector<int> partition;
    int first_target = 0; // forced alpha(0)
};

std::vector<int> sigma_from_partition(const std::vector<int>& part) {
    int n = 0;
    for (int p : part) n += p;
    std::vector<int> sigma(n);
    int s = 0;
    for (int p : part) {
        for (int t = 0; t < p; ++t) sigma[s + t] = s + (t + 1) % p;
        s += p;
    }
    return sigma;
}

void run_task(const Task& task, std::vector<CanonicalForm>& out) {
    Searcher s;
    s.n = task.n;
    s.want_b = task.want_b;
    s.sigma = task.sigma;
    s.alpha.assign(task.n, -1);
    s.gens = centralizer_generators(task.partition);
    s.alpha[0] = task.first_target;
    s.alpha[task.first_target] = 0;
    s.rec(1);
    out = std::move(s.found);
}

} // namespace

std::vector<CensusEntry> enumerate(int g, int n, const CensusOptions& options) {
    if (g < 0 || n < 1)
        throw UnsatisfiableParameters("need g >= 0 and n >= 1, got g = " +
                                      std::to_string(g) +
                                      ", n = " + std::to_string(n));
    if (2 - 2 * g - n >= 0)
        throw UnsatisfiableParameters(
            "no graphs for (g, n) = (" + std::to_string(g) + ", " +
            std::to_string(n) + "): 2 - 2g - n must be negative");
    const int e_min = 2 * g + n - 1;
    const int e_max = 6 * g - 6 + 3 * n;
    if (e_max > options.max_edges)
        throw TooLarge("census needs up to " + std::to_string(e_max) +
                       " edges, cap is " + std::to_string(options.max_edges));

    std::vector<Task> tasks;
    for (int e = e_min; e <= e_max; ++e) {
        const int v = e + 2 - 2 * g - n;
        if (v < 1) continue;
        for (const auto& part : partitions(2 * e, v)) {
            Task base;
            base.n = 2 * e;
            base.want_b = n;
            base.sigma = sigma_from_partition(part);
            base.partition = part;
            for (int t = 1; t < 2 * e; ++t) {
                base.first_target = t;
                tasks.push_back(base);
            }
        }
    }

    std::vector<std::vector<CanonicalForm>> results(tasks.size());
    const int jobs =
        std::max(1, std::min<int>(options.jobs,
                                  static_cast<int>(tasks.size()) > 0
                                      ? static_cast<int>(tasks.size())
                                      : 1));
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            run_task(tasks[i], results[i]);
    } else {
        std::atomic<std::size_t> cursor{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= tasks.size()) break;
                run_task(tasks[i], results[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::set<CanonicalForm> classes;
    for (auto& chunk : results)
        for (auto& cf : chunk) classes.insert(std::move(cf));

    std::vector<CensusEntry> out;
    for (const CanonicalForm& cf : classes) {
        RibbonGraph graph = from_canonical(cf);
        CensusEntry entry;
        entry.canonical = cf;
        entry.v = graph.v();
        entry.e = graph.e();
        entry.b = boundary_components(graph).b;
        entry.g = genus(graph);
        AutGroup aut = automorphisms(graph);
        AutGroup bnd = boundary_preserving_automorphisms(graph);
        entry.aut_order = aut.order;
        entry.aut_boundary_order = bnd.order;
        entry.exceptional = aut.edge_kernel_order > 1;
        Integer labeled = factorial(static_cast<unsigned>(n)) * bnd.order;
        labeled /= aut.order; // the induced action on labelings is free
        entry.labeled_orbit_count = to_long_long(labeled);
        out.push_back(std::move(entry));
    }
    std::sort(out.begin(), out.end(),
              [](const CensusEntry& a, const CensusEntry& b) {
                  return a.canonical < b.canonical;
              });
    return out;
}

std::vector<LabeledCensusEntry> enumerate_labeled(int g, int n,
                                                  const CensusOptions& options) {
    std::vector<CensusEntry> unlabeled = enumerate(g, n, options);
    std::vector<LabeledCensusEntry> out;
    for (const CensusEntry& entry : unlabeled) {
        RibbonGraph graph = from_canonical(entry.canonical);
        AutGroup aut = automorphisms(graph);
        std::set<std::vector<int>> induced;
        for (const auto& psi : aut.elements)
            induced.insert(boundary_permutation(graph, psi));

        std::vector<int> labels(n);
        for (int i = 0; i < n; ++i) labels[i] = i;
        long long emitted = 0;
        do {
            bool minimal = true;
            for (const auto& p : induced) {
                // psi sends cycle c to p[c]; the relabeled graph carries
                // labels[c] on cycle p[c].
                std::vector<int> moved(n);
                for (int c = 0; c < n; ++c) moved[p[c]] = labels[c];
                if (moved < labels) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) {
                LabeledCensusEntry le;
                le.entry = entry;
                le.labels = labels;
                le.aut_order = entry.aut_boundary_order;
                out.push_back(std::move(le));
                ++emitted;
            }
        } while (std::next_permutation(labels.begin(), labels.end()));
        if (emitted != entry.labeled_orbit_count)
            throw IncompleteCensus("labeled orbit count mismatch: expected " +
                                   std::to_string(entry.labeled_orbit_count) +
                                   ", found " + std::to_string(emitted));
    }
    return out;
}

ExpansionPoset expansion_poset(const RibbonGraph& g, int max_codim) {
    int potential = 0;
    for (int vi = 0; vi < g.v(); ++vi)
        potential += std::max(g.degree(vi) - 3, 0);
    if (potential > max_codim)
        throw TooLarge("expansion poset has codimension " +
                       std::to_string(potential) + ", cap is " +
                       std::to_string(max_codim));

    ExpansionPoset poset;
    poset.base_darts = g.n_darts;

    ExpansionPoset::Node base;
    base.graph = g;
    base.key = fixed_relabel_key(g, g.n_darts);
    base.codim = 0;
    poset.nodes.push_back(std::move(base));
    poset.cells_by_codim.push_back(1);

    std::map<std::vector<int>, int> prev_index;
    prev_index.emplace(poset.nodes[0].key, 0);
    std::size_t level_begin = 0, level_end = 1;

    for (int codim = 1; codim <= potential; ++codim) {
        std::map<std::vector<int>, RibbonGraph> level;
        for (std::size_t i = level_begin; i < level_end; ++i) {
            const RibbonGraph& cur = poset.nodes[i].graph;
            for (int vi = 0; vi < cur.v(); ++vi) {
                for (RibbonGraph& exp : expansions_at_vertex(cur, vi)) {
                    std::vector<int> key =
                        fixed_relabel_key(exp, poset.base_darts);
                    level.emplace(std::move(key), std::move(exp));
                }
            }
        }
        std::map<std::vector<int>, int> index;
        for (auto& [key, graph] : level) {
            ExpansionPoset::Node node;
            node.codim = codim;
            for (int ei = 0; ei < graph.e(); ++ei) {
                auto [p, q] = graph.edges[ei];
                if (p < poset.base_darts || q < poset.base_darts) continue;
                RibbonGraph down = contract_edge(graph, ei);
                node.covers.push_back(
                    prev_index.at(fixed_relabel_key(down, poset.base_darts)));
            }
            std::sort(node.covers.begin(), node.covers.end());
            node.covers.erase(
                std::unique(node.covers.begin(), node.covers.end()),
                node.covers.end());
            node.key = key;
            node.graph = std::move(graph);
            index.emplace(node.key, static_cast<int>(poset.nodes.size()));
            poset.nodes.push_back(std::move(node));
        }
        poset.cells_by_codim.push_back(static_cast<long long>(level.size()));
        level_begin = level_end;
        level_end = poset.nodes.size();
        prev_index = std::move(index);
    }
    return poset;
}

} // namespace ribbon
