#include "ribbon/acceptance.hpp"

#include "ribbon/atlas.hpp"
#include "ribbon/census.hpp"
#include "ribbon/characteristic.hpp"
#include "ribbon/elliptic.hpp"
#include "ribbon/json_io.hpp"
#include "ribbon/strebel.hpp"
#include "ribbon/symmetry.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

namespace ribbon {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::string detail;

    void append(const std::string& text) {
        if (!detail.empty()) detail += "; ";
        detail += text;
    }
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            append(what);
        }
    }
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

struct CensusCache {
    int jobs = 1;
    std::map<std::pair<int, int>, std::vector<CensusEntry>> table;

    const std::vector<CensusEntry>& get(int g, int n) {
        auto key = std::make_pair(g, n);
        auto it = table.find(key);
        if (it == table.end()) {
            CensusOptions opt;
            opt.jobs = jobs;
            it = table.emplace(key, enumerate(g, n, opt)).first;
        }
        return it->second;
    }
};

constexpr std::pair<int, int> kSurfaces[] = {{0, 3}, {0, 4}, {1, 1}, {1, 2}};

RibbonGraph theta_graph() {
    return build(6, {1, 2, 0, 4, 5, 3}, {3, 5, 4, 0, 2, 1});
}

RibbonGraph figure_eight_graph() {
    return build(4, {1, 2, 3, 0}, {1, 0, 3, 2});
}

std::vector<Rational> unit_lengths(const RibbonGraph& g) {
    return std::vector<Rational>(static_cast<std::size_t>(g.e()), Rational(1));
}

} // namespace

std::vector<CriterionResult> run_acceptance(int jobs, bool stretch) {
    std::vector<CriterionResult> results;
    CensusCache cache{jobs < 1 ? 1 : jobs};

    auto run = [&](int index, const char* name, double budget,
                   const std::function<void(Check&)>& body) {
        CriterionResult r;
        r.index = index;
        r.name = name;
        r.budget_seconds = budget;
        Check c;
        auto t0 = Clock::now();
        try {
            body(c);
        } catch (const std::exception& ex) {
            c.ok = false;
            c.append(std::string("threw: ") + ex.what());
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (c.ok && r.seconds > budget)
            c.append("over budget (" + fmt(r.seconds) + "s > " + fmt(budget) +
                      "s)");
        r.pass = c.ok && r.seconds <= budget;
        r.detail = c.detail;
        results.push_back(std::move(r));
    };

    run(1, "census-cardinalities", 1.0, [&](Check& c) {
        const auto& c11 = cache.get(1, 1);
        const auto& c03 = cache.get(0, 3);
        auto l03 = enumerate_labeled(0, 3);
        c.expect(c11.size() == 2, "census(1,1) has " +
                                      std::to_string(c11.size()) +
                                      " classes, want 2");
        c.expect(c03.size() == 3, "census(0,3) has " +
                                      std::to_string(c03.size()) +
                                      " classes, want 3");
        c.expect(l03.size() == 7, "labeled census(0,3) has " +
                                      std::to_string(l03.size()) +
                                      " classes, want 7");
        c.append("2 + 3 unlabeled classes, 7 labeled");
    });

    run(2, "euler-characteristic-values", 30.0, [&](Check& c) {
        c.expect(zeta_one_minus_2g(1) == Rational(-1, 12),
                 "zeta(-1) != -1/12");
        c.expect(zeta_one_minus_2g(2) == Rational(1, 120),
                 "zeta(-3) != 1/120");
        c.expect(zeta_one_minus_2g(3) == Rational(-1, 252),
                 "zeta(-5) != -1/252");
        c.expect(chi_sum(cache.get(1, 1), ChiMode::Plain) == Rational(1, 12),
                 "plain chi(1,1) != 1/12");
        c.expect(chi_sum(cache.get(1, 1), ChiMode::Orbifold) == Rational(1, 6),
                 "orbifold chi(1,1) != 1/6");
        c.expect(chi_sum(cache.get(0, 3), ChiMode::Plain) == Rational(-1, 6),
                 "plain chi(0,3) != -1/6");
        c.expect(chi_closed_form(1, 1) == Rational(1, 12),
                 "closed form chi(1,1) != 1/12");
        Rational chi12 = chi_sum(cache.get(1, 2), ChiMode::Plain);
        c.expect(chi12 == Rational(1, 24), "plain chi(1,2) != 1/24");
        c.expect(chi12 == chi_closed_form(1, 2),
                 "census chi(1,2) disagrees with the closed form");
        c.append("chi(1,1)=1/12, chi(0,3)=-1/6, chi(1,2)=1/24");
    });

    run(3, "labeled-orbifold-ratio", 30.0, [&](Check& c) {
        for (auto [g, n] : kSurfaces) {
            const auto& cen = cache.get(g, n);
            Rational lab = chi_sum(cen, ChiMode::Labeled);
            Rational orb = chi_sum(cen, ChiMode::Orbifold);
            c.expect(lab == Rational(factorial(n)) * orb,
                     "labeled chi != n! * orbifold chi at (" +
                         std::to_string(g) + "," + std::to_string(n) + ")");
        }
        c.append("labeled = n! * orbifold on (0,3) (0,4) (1,1) (1,2)");
    });

    run(4, "composition-coefficients", 1.0, [&](Check& c) {
        for (int n = 1; n <= 12; ++n) {
            Rational expected =
                Rational(n % 2 ? -1 : 1) / Rational(factorial(n));
            c.expect(composition_identity(n) == expected,
                     "composition coefficient wrong at n=" +
                         std::to_string(n));
        }
        c.append("(-1)^n/n! for n=1..12");
    });

    run(5, "expansion-poset-cells", 1.0, [&](Check& c) {
        std::vector<int> sigma(12), alpha(12);
        for (int i = 0; i < 6; ++i) {
            sigma[i] = (i + 1) % 6;
            sigma[6 + i] = 6 + i;
            alpha[i] = 6 + i;
            alpha[6 + i] = i;
        }
        RibbonGraph star = build(12, sigma, alpha, 1);
        ExpansionPoset poset = expansion_poset(star, 6);
        std::vector<long long> want = {1, 9, 21, 14};
        c.expect(poset.cells_by_codim == want,
                 "degree-6 star cell counts are not 1/9/21/14");
        for (std::size_t i = 1; i < poset.nodes.size(); ++i) {
            const auto& node = poset.nodes[i];
            bool covers_ok = !node.covers.empty();
            for (int j : node.covers)
                covers_ok = covers_ok &&
                            j >= 0 && j < static_cast<int>(i) &&
                            poset.nodes[j].codim == node.codim - 1;
            c.expect(covers_ok,
                     "bad cover list at node " + std::to_string(i));
            if (!covers_ok) break;
        }
        for (int d = 3; d <= 10; ++d)
            c.expect(maximal_expansion_count(d) ==
                         maximal_expansion_count_generated(d),
                     "trivalent expansion count mismatch at degree " +
                         std::to_string(d));
        c.append("cells 1/9/21/14, Catalan counts for degrees 3..10");
    });

    run(6, "strebel-three-perimeters", 1.0, [&](Check& c) {
        auto sol = solve_m03(Rational(2), Rational(2), Rational(2));
        c.expect(sol.disc_case == DiscCase::Positive,
                 "(2,2,2) is not in the positive case");
        c.expect(sol.L1 == 1 && sol.L2 == 1 && sol.L3 == 1,
                 "(2,2,2) lengths are not (1,1,1)");
        const double s3 = std::sqrt(3.0) / 2.0;
        c.expect(std::abs(sol.zeros[0] - std::complex<double>(0.5, s3)) <=
                         1e-12 &&
                     std::abs(sol.zeros[1] - std::complex<double>(0.5, -s3)) <=
                         1e-12,
                 "(2,2,2) zeros are not (1 +- i sqrt 3)/2");
        c.expect(zeros_are_exact(sol), "(2,2,2) zeros fail the exact check");
        c.expect(sol.graph.graph.v() == 2 && sol.graph.graph.e() == 3,
                 "(2,2,2) graph is not the theta graph");

        auto wall = solve_m03(Rational(1), Rational(1), Rational(2));
        c.expect(wall.disc_case == DiscCase::Zero &&
                     wall.degenerate_factor == 2,
                 "(1,1,2) is not on the a0+a1-ainf wall");
        c.expect(wall.L1 == 1 && wall.L2 == 1 && wall.L3 == 0,
                 "(1,1,2) lengths are not (1,1,0)");
        c.expect(wall.graph.graph.v() == 1 && wall.graph.graph.e() == 2,
                 "(1,1,2) graph is not the figure eight");

        auto neg = solve_m03(Rational(1), Rational(1), Rational(3));
        c.expect(neg.disc_case == DiscCase::Negative &&
                     neg.degenerate_factor == 2,
                 "(1,1,3) is not past the a0+a1-ainf wall");
        c.expect(neg.L1 == 1 && neg.L2 == 1 && neg.L3 == Rational(1, 2),
                 "(1,1,3) lengths are not (1,1,1/2)");
        c.expect(neg.graph.graph.v() == 2 && neg.graph.graph.e() == 3,
                 "(1,1,3) graph is not the dumbbell");

        std::mt19937_64 rng(20260817);
        std::uniform_int_distribution<int> num(1, 24), den(1, 8);
        int good = 0;
        for (int i = 0; i < 100; ++i) {
            Rational L1(num(rng), den(rng)), L2(num(rng), den(rng)),
                L3(num(rng), den(rng));
            auto per = perimeters_from_lengths(L1, L2, L3);
            auto s = solve_m03(per[0], per[1], per[2]);
            if (s.disc_case == DiscCase::Positive && s.L1 == L1 &&
                s.L2 == L2 && s.L3 == L3 && zeros_are_exact(s))
                ++good;
        }
        c.expect(good == 100, "length -> perimeter -> length round trip "
                              "failed on " +
                                  std::to_string(100 - good) + "/100 triples");

        auto swapped = s3_action_check({1, 0, 2},
                                       {Rational(2), Rational(3), Rational(4)});
        c.expect(swapped.ok, "pole relabeling does not permute the lengths");
        c.append("walls at (1,1,2) and (1,1,3), 100 exact round trips");
    });

    run(7, "belyi-charts", 10.0, [&](Check& c) {
        int checked = 0;
        bool rh = true;
        for (auto [g, n] : kSurfaces) {
            for (const auto& entry : cache.get(g, n)) {
                rh = rh && riemann_hurwitz_exact(from_canonical(entry.canonical));
                ++checked;
            }
        }
        c.expect(rh, "a census class fails the degree/ramification count");

        RibbonGraph theta = theta_graph();
        auto prof = ramification_profile(theta);
        c.expect(prof.over_zero == std::vector<int>({3, 3}) &&
                     prof.over_one == std::vector<int>({2, 2, 2}) &&
                     prof.over_infinity == std::vector<int>({2, 2, 2}),
                 "theta ramification profile is wrong");

        MetricRibbonGraph mt{theta, unit_lengths(theta)};
        ChartAtlas atlas_t = build_atlas(mt);
        double tt = transition_check(atlas_t, 1000, 11);
        double bt = belyi_chart_consistency(atlas_t, 1000, 12);
        c.expect(tt < 1e-8, "theta chart transitions drift: " + fmt(tt));
        c.expect(bt < 1e-8, "theta Belyi values drift: " + fmt(bt));

        RibbonGraph f8 = figure_eight_graph();
        MetricRibbonGraph mf{f8, unit_lengths(f8)};
        ChartAtlas atlas_f = build_atlas(mf);
        double tf = transition_check(atlas_f, 1000, 13);
        double bf = belyi_chart_consistency(atlas_f, 1000, 14);
        c.expect(tf < 1e-8, "figure-eight chart transitions drift: " + fmt(tf));
        c.expect(bf < 1e-8, "figure-eight Belyi values drift: " + fmt(bf));

        double tg = 0.0, bg = 0.0;
        for (const auto& entry : cache.get(1, 1)) {
            RibbonGraph g1 = from_canonical(entry.canonical);
            MetricRibbonGraph mg{g1, unit_lengths(g1)};
            ChartAtlas atlas_g = build_atlas(mg);
            tg = std::max(tg, transition_check(atlas_g, 500, 15));
            bg = std::max(bg, belyi_chart_consistency(atlas_g, 500, 16));
        }
        c.expect(tg < 1e-8, "genus-1 chart transitions drift: " + fmt(tg));
        c.expect(bg < 1e-8, "genus-1 Belyi values drift: " + fmt(bg));

        auto rep = trivalent_compose_check();
        c.expect(rep.critical_values_one, "phi does not send -1, 1/2, 2 to 1");
        c.expect(rep.zero_at_vertex_points,
                 "phi does not vanish at the sixth roots");
        c.expect(rep.derivative_identity,
                 "phi' does not factor as expected");
        c.expect(rep.derivative_vanishes, "phi' does not vanish at -1, 1/2, 2");
        c.expect(rep.ok && rep.max_float_residual < 1e-12,
                 "trivalent composition residual too large: " +
                     fmt(rep.max_float_residual));
        c.append(std::to_string(checked) +
                 " census classes, chart residuals < 1e-8");
    });

    run(8, "elliptic-invariants", 30.0, [&](Check& c) {
        for (EllipticCase kind :
             {EllipticCase::Square, EllipticCase::Hexagonal}) {
            const char* tag =
                kind == EllipticCase::Square ? "square" : "hexagonal";
            EllipticReport rep = elliptic_report(kind);
            c.expect(rep.e_deviation < 1e-6,
                     std::string(tag) + " half-period values deviate by " +
                         fmt(rep.e_deviation));
            c.expect(rep.pullback_max < 1e-6,
                     std::string(tag) + " pullback residual " +
                         fmt(rep.pullback_max));
            c.expect(rep.e_sum < 1e-8,
                     std::string(tag) + " e1+e2+e3 = " + fmt(rep.e_sum));
            c.expect(rep.ok, std::string(tag) + " report not ok");
        }
        c.append("half periods and pullback identities on both lattices");
    });

    run(9, "census-invariants", 60.0, [&](Check& c) {
        for (auto [g, n] : kSurfaces) {
            const auto& cen = cache.get(g, n);
            std::set<CanonicalForm> canon;
            for (const auto& entry : cen) canon.insert(entry.canonical);
            long long labeled_total = 0;
            bool div = true, euler = true, closed = true;
            for (const auto& entry : cen) {
                RibbonGraph gr = from_canonical(entry.canonical);
                div = div && entry.aut_order > 0 &&
                      (2 * gr.e()) % entry.aut_order == 0;
                auto bd = boundary_components(gr);
                euler = euler && gr.v() - gr.e() + bd.b == 2 - 2 * entry.g;
                for (int ei = 0; ei < gr.e(); ++ei) {
                    if (gr.is_loop(ei)) continue;
                    closed = closed &&
                             canon.count(canonical_form(
                                 contract_edge(gr, ei))) == 1;
                }
                labeled_total += entry.labeled_orbit_count;
            }
            std::string at =
                " at (" + std::to_string(g) + "," + std::to_string(n) + ")";
            c.expect(div, "|Aut| does not divide the dart count" + at);
            c.expect(euler, "v - e + b != 2 - 2g" + at);
            c.expect(closed, "an edge contraction leaves the census" + at);
            c.expect(static_cast<long long>(enumerate_labeled(g, n).size()) ==
                         labeled_total,
                     "labeled census size mismatch" + at);
        }
        CensusOptions serial, threaded;
        serial.jobs = 1;
        threaded.jobs = 4;
        for (auto [g, n] : {std::pair<int, int>{0, 4}, {1, 2}}) {
            std::string a = census_to_json(enumerate(g, n, serial)).dump();
            std::string b = census_to_json(enumerate(g, n, threaded)).dump();
            c.expect(a == b, "threaded census output differs at (" +
                                 std::to_string(g) + "," + std::to_string(n) +
                                 ")");
        }
        c.append("divisibility, Euler counts, contraction closure, "
                 "thread-count determinism");
    });

    if (stretch) {
        run(10, "genus-two-stretch", 600.0, [&](Check& c) {
            const auto& c21 = cache.get(2, 1);
            Rational chi = chi_sum(c21, ChiMode::Plain);
            c.expect(chi == Rational(-1, 120), "plain chi(2,1) != -1/120");
            c.expect(chi == chi_closed_form(2, 1),
                     "census chi(2,1) disagrees with the closed form");
            c.append(std::to_string(c21.size()) + " classes, chi = " +
                     to_string(chi));
        });
    }

    return results;
}

void print_acceptance(const std::vector<CriterionResult>& results) {
    for (const auto& r : results) {
        std::printf("%s %d %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL",
                    r.index, r.name.c_str(), r.seconds,
                    r.detail.empty() ? "" : " ", r.detail.c_str());
    }
    std::fflush(stdout);
}

bool all_passed(const std::vector<CriterionResult>& results) {
    if (results.empty()) return false;
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.pass; });
}

} // namespace ribbon
