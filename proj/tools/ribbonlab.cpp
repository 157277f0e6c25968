#include "ribbon/acceptance.hpp"
#include "ribbon/characteristic.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/json_io.hpp"

#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using ribbon::Json;
using ribbon::Rational;

// --json with an optional file argument: bare --json prints a compact
// document to stdout, --json FILE writes it to FILE.
struct JsonSink {
    CLI::Option* opt = nullptr;
    std::string path;

    void attach(CLI::App* cmd) {
        opt = cmd->add_option("--json", path,
                              "emit JSON, to a file when one is named")
                  ->expected(0, 1);
    }
    bool wanted() const { return opt != nullptr && opt->count() > 0; }
    void emit(const Json& payload) const {
        std::string text = payload.dump();
        if (!path.empty()) {
            std::ofstream out(path);
            if (!out)
                throw std::runtime_error("cannot write '" + path + "'");
            out << text << '\n';
        } else {
            std::cout << text << '\n';
        }
    }
};

void print_complex(const char* tag, std::complex<double> z) {
    std::printf("%s %s %s\n", tag, ribbon::format_double(z.real()).c_str(),
                ribbon::format_double(z.imag()).c_str());
}

void print_census_line(std::size_t i, const ribbon::CensusEntry& entry) {
    std::printf("[%zu] darts=%d v=%d e=%d b=%d g=%d aut=%d aut_boundary=%d "
                "exceptional=%s labeled_orbits=%lld\n",
                i, entry.canonical.n_darts, entry.v, entry.e, entry.b,
                entry.g, entry.aut_order, entry.aut_boundary_order,
                entry.exceptional ? "yes" : "no", entry.labeled_orbit_count);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

ribbon::MetricRibbonGraph load_metric(const std::string& path, bool relaxed) {
    return ribbon::load_graph_file(path, relaxed ? 1 : 3);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ribbon graph censuses, moduli cell complexes, Strebel "
                 "differentials, and Belyi atlases"};
    app.require_subcommand(1);
    int exit_code = 0;

    // census g n
    auto* census = app.add_subcommand(
        "census", "enumerate ribbon graph isomorphism classes");
    int census_g = 0, census_n = 0, census_jobs = 1, census_max_edges = 9;
    bool census_labeled = false;
    census->add_option("g", census_g, "genus")->required();
    census->add_option("n", census_n, "boundary components")->required();
    census->add_flag("--labeled", census_labeled,
                     "boundary-labeled classes instead of plain ones");
    census->add_option("--jobs", census_jobs, "worker threads");
    census->add_option("--max-edges", census_max_edges,
                       "refuse censuses needing more edges than this")
        ->envname("RIBBONLAB_MAX_EDGES");
    JsonSink census_json;
    census_json.attach(census);
    census->callback([&] {
        ribbon::CensusOptions opt;
        opt.jobs = census_jobs;
        opt.max_edges = census_max_edges;
        if (census_labeled) {
            auto entries = ribbon::enumerate_labeled(census_g, census_n, opt);
            if (census_json.wanted()) {
                census_json.emit(ribbon::labeled_census_to_json(entries));
                return;
            }
            for (std::size_t i = 0; i < entries.size(); ++i) {
                print_census_line(i, entries[i].entry);
                std::printf("    labels");
                for (int x : entries[i].labels) std::printf(" %d", x);
                std::printf("\n");
            }
            std::printf("%zu labeled classes\n", entries.size());
        } else {
            auto entries = ribbon::enumerate(census_g, census_n, opt);
            if (census_json.wanted()) {
                census_json.emit(ribbon::census_to_json(entries));
                return;
            }
            for (std::size_t i = 0; i < entries.size(); ++i)
                print_census_line(i, entries[i]);
            std::printf("%zu classes\n", entries.size());
        }
    });

    // chi g n
    auto* chi = app.add_subcommand(
        "chi", "Euler characteristic sums over one census");
    int chi_g = 0, chi_n = 0, chi_jobs = 1, chi_max_edges = 9;
    bool chi_closed = false, chi_labeled = false;
    chi->add_option("g", chi_g, "genus")->required();
    chi->add_option("n", chi_n, "boundary components")->required();
    chi->add_flag("--closed-form", chi_closed,
                  "also evaluate the zeta closed form");
    chi->add_flag("--labeled", chi_labeled,
                  "also sum over boundary-labeled classes");
    chi->add_option("--jobs", chi_jobs, "worker threads");
    chi->add_option("--max-edges", chi_max_edges,
                    "refuse censuses needing more edges than this")
        ->envname("RIBBONLAB_MAX_EDGES");
    JsonSink chi_json;
    chi_json.attach(chi);
    chi->callback([&] {
        ribbon::CensusOptions opt;
        opt.jobs = chi_jobs;
        opt.max_edges = chi_max_edges;
        auto entries = ribbon::enumerate(chi_g, chi_n, opt);
        Rational plain = ribbon::chi_sum(entries, ribbon::ChiMode::Plain);
        Rational orb = ribbon::chi_sum(entries, ribbon::ChiMode::Orbifold);
        Json j{{"g", chi_g},
               {"n", chi_n},
               {"classes", entries.size()},
               {"plain", ribbon::to_string(plain)},
               {"orbifold", ribbon::to_string(orb)}};
        if (chi_labeled)
            j["labeled"] = ribbon::to_string(
                ribbon::chi_sum(entries, ribbon::ChiMode::Labeled));
        if (chi_closed)
            j["closed_form"] = ribbon::to_string(
                ribbon::chi_closed_form(chi_g, chi_n));
        if (chi_json.wanted()) {
            chi_json.emit(j);
            return;
        }
        std::printf("plain %s\n", ribbon::to_string(plain).c_str());
        std::printf("orbifold %s\n", ribbon::to_string(orb).c_str());
        if (chi_labeled)
            std::printf("labeled %s\n",
                        j["labeled"].get<std::string>().c_str());
        if (chi_closed)
            std::printf("closed-form %s\n",
                        j["closed_form"].get<std::string>().c_str());
    });

    // aut FILE
    auto* aut = app.add_subcommand(
        "aut", "automorphism group of a ribbon graph");
    std::string aut_file;
    bool aut_relaxed = false;
    aut->add_option("file", aut_file, "graph JSON file")->required();
    aut->add_flag("--relaxed-degrees", aut_relaxed,
                  "allow vertices of degree 1 and 2");
    JsonSink aut_json;
    aut_json.attach(aut);
    aut->callback([&] {
        auto m = load_metric(aut_file, aut_relaxed);
        if (aut_json.wanted()) {
            aut_json.emit(ribbon::aut_to_json(m.graph));
            return;
        }
        ribbon::AutGroup group = ribbon::automorphisms(m.graph);
        ribbon::AutGroup bnd =
            ribbon::boundary_preserving_automorphisms(m.graph);
        std::printf("order %d\n", group.order);
        std::printf("boundary_preserving_order %d\n", bnd.order);
        std::printf("edge_kernel_order %d\n", group.edge_kernel_order);
        std::printf("exceptional %s\n",
                    group.edge_kernel_order > 1 ? "yes" : "no");
        for (const auto& gen : ribbon::generating_set(group)) {
            std::printf("generator");
            for (int x : gen) std::printf(" %d", x);
            std::printf("\n");
        }
    });

    // contract FILE --edge K
    auto* contract = app.add_subcommand(
        "contract", "contract a non-loop edge");
    std::string contract_file;
    int contract_edge_index = 0;
    bool contract_relaxed = false;
    contract->add_option("file", contract_file, "graph JSON file")->required();
    contract->add_option("--edge", contract_edge_index,
                         "edge index, in order of smaller dart")
        ->required();
    contract->add_flag("--relaxed-degrees", contract_relaxed,
                       "allow vertices of degree 1 and 2");
    JsonSink contract_json;
    contract_json.attach(contract);
    contract->callback([&] {
        auto m = load_metric(contract_file, contract_relaxed);
        if (contract_edge_index < 0 || contract_edge_index >= m.graph.e())
            throw std::out_of_range(
                "edge index out of range, graph has " +
                std::to_string(m.graph.e()) + " edges");
        ribbon::RibbonGraph out =
            ribbon::contract_edge(m.graph, contract_edge_index);
        Json j = ribbon::graph_to_json(out);
        if (contract_json.wanted())
            contract_json.emit(j);
        else
            std::cout << j.dump(2) << '\n';
    });

    // expand FILE --vertex K
    auto* expand = app.add_subcommand(
        "expand", "all one-edge splittings of a vertex");
    std::string expand_file;
    int expand_vertex = 0;
    bool expand_relaxed = false;
    expand->add_option("file", expand_file, "graph JSON file")->required();
    expand->add_option("--vertex", expand_vertex, "vertex index")->required();
    expand->add_flag("--relaxed-degrees", expand_relaxed,
                     "allow vertices of degree 1 and 2");
    JsonSink expand_json;
    expand_json.attach(expand);
    expand->callback([&] {
        auto m = load_metric(expand_file, expand_relaxed);
        if (expand_vertex < 0 || expand_vertex >= m.graph.v())
            throw std::out_of_range(
                "vertex index out of range, graph has " +
                std::to_string(m.graph.v()) + " vertices");
        Json arr = Json::array();
        for (const ribbon::RibbonGraph& g :
             ribbon::expansions_at_vertex(m.graph, expand_vertex))
            arr.push_back(ribbon::graph_to_json(g));
        if (expand_json.wanted())
            expand_json.emit(arr);
        else
            std::cout << arr.dump(2) << '\n';
    });

    // strebel03 a0 a1 ainf
    auto* strebel = app.add_subcommand(
        "strebel03", "Strebel differential on the three-punctured sphere");
    std::string s_a0, s_a1, s_ainf;
    strebel->add_option("a0", s_a0, "perimeter at 0 (integer or p/q)")
        ->required();
    strebel->add_option("a1", s_a1, "perimeter at 1")->required();
    strebel->add_option("ainf", s_ainf, "perimeter at infinity")->required();
    JsonSink strebel_json;
    strebel_json.attach(strebel);
    strebel->callback([&] {
        auto sol = ribbon::solve_m03(ribbon::rational_from_string(s_a0),
                                     ribbon::rational_from_string(s_a1),
                                     ribbon::rational_from_string(s_ainf));
        if (strebel_json.wanted()) {
            strebel_json.emit(ribbon::strebel_to_json(sol));
            return;
        }
        const char* names[] = {"Positive", "Zero", "Negative"};
        std::printf("case %s\n", names[static_cast<int>(sol.disc_case)]);
        std::printf("coefficients a=%s b=%s c=%s discriminant=%s\n",
                    ribbon::to_string(sol.a).c_str(),
                    ribbon::to_string(sol.b).c_str(),
                    ribbon::to_string(sol.c).c_str(),
                    ribbon::to_string(sol.discriminant).c_str());
        std::printf("lengths %s %s %s\n", ribbon::to_string(sol.L1).c_str(),
                    ribbon::to_string(sol.L2).c_str(),
                    ribbon::to_string(sol.L3).c_str());
        print_complex("zero+", sol.zeros[0]);
        print_complex("zero-", sol.zeros[1]);
        std::printf("boundary_labels");
        for (int x : sol.boundary_labels) std::printf(" %d", x);
        std::printf("\n");
        std::cout << "graph " << ribbon::graph_to_json(sol.graph).dump()
                  << '\n';
    });

    // belyi FILE --at chart point
    auto* belyi = app.add_subcommand(
        "belyi", "evaluate the Belyi map of an integer-length graph");
    std::string belyi_file, belyi_at;
    bool belyi_relaxed = false;
    belyi->add_option("file", belyi_file, "graph JSON file")->required();
    belyi->add_option("--at", belyi_at,
                      "point EDGE:RE:IM in an edge strip, or "
                      "vertex:K:RE:IM / disk:K:RE:IM")
        ->required();
    belyi->add_flag("--relaxed-degrees", belyi_relaxed,
                    "allow vertices of degree 1 and 2");
    JsonSink belyi_json;
    belyi_json.attach(belyi);
    belyi->callback([&] {
        auto m = load_metric(belyi_file, belyi_relaxed);
        if (m.lengths.empty())
            m.lengths.assign(static_cast<std::size_t>(m.graph.e()),
                             Rational(1));
        auto parts = split(belyi_at, ':');
        ribbon::SurfacePoint p;
        std::size_t base = 0;
        if (parts.size() == 4) {
            if (parts[0] == "edge" || parts[0] == "strip")
                p.kind = ribbon::ChartKind::Strip;
            else if (parts[0] == "vertex")
                p.kind = ribbon::ChartKind::Vertex;
            else if (parts[0] == "disk")
                p.kind = ribbon::ChartKind::Disk;
            else
                throw CLI::ValidationError(
                    "--at", "chart must be edge, vertex, or disk");
            base = 1;
        } else if (parts.size() != 3) {
            throw CLI::ValidationError("--at", "expected EDGE:RE:IM");
        }
        int id;
        double re, im;
        try {
            id = std::stoi(parts[base]);
            re = std::stod(parts[base + 1]);
            im = std::stod(parts[base + 2]);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--at", "expected EDGE:RE:IM");
        }
        if (parts.size() == 3 || parts[0] == "edge") {
            if (id < 0 || id >= m.graph.e())
                throw std::out_of_range("edge index out of range");
            p.kind = ribbon::ChartKind::Strip;
            p.id = m.graph.edges[static_cast<std::size_t>(id)].first;
        } else {
            p.id = id;
        }
        p.coord = {re, im};
        ribbon::ChartAtlas atlas = ribbon::build_atlas(m);
        std::complex<double> value = ribbon::belyi_evaluate(atlas, p);
        if (belyi_json.wanted())
            belyi_json.emit(Json{{"value", ribbon::complex_to_json(value)}});
        else
            print_complex("value", value);
    });

    // dessin FILE
    auto* dessin_cmd = app.add_subcommand(
        "dessin", "bipartite refinement and its DOT drawing");
    std::string dessin_file, dessin_dot;
    bool dessin_relaxed = false;
    dessin_cmd->add_option("file", dessin_file, "graph JSON file")->required();
    dessin_cmd->add_option("--dot", dessin_dot, "write DOT to this file");
    dessin_cmd->add_flag("--relaxed-degrees", dessin_relaxed,
                         "allow vertices of degree 1 and 2");
    JsonSink dessin_json;
    dessin_json.attach(dessin_cmd);
    dessin_cmd->callback([&] {
        auto m = load_metric(dessin_file, dessin_relaxed);
        ribbon::Dessin d = ribbon::dessin(m.graph);
        if (!dessin_dot.empty()) {
            std::ofstream out(dessin_dot);
            if (!out)
                throw std::runtime_error("cannot write '" + dessin_dot + "'");
            out << d.dot;
        }
        if (dessin_json.wanted())
            dessin_json.emit(ribbon::dessin_to_json(d));
        else if (dessin_dot.empty())
            std::cout << d.dot;
    });

    // profile FILE
    auto* profile = app.add_subcommand(
        "profile", "ramification passport of the unit-length Belyi map");
    std::string profile_file;
    bool profile_relaxed = false;
    profile->add_option("file", profile_file, "graph JSON file")->required();
    profile->add_flag("--relaxed-degrees", profile_relaxed,
                      "allow vertices of degree 1 and 2");
    JsonSink profile_json;
    profile_json.attach(profile);
    profile->callback([&] {
        auto m = load_metric(profile_file, profile_relaxed);
        if (profile_json.wanted()) {
            profile_json.emit(ribbon::profile_to_json(m.graph));
            return;
        }
        ribbon::RamificationProfile prof =
            ribbon::ramification_profile(m.graph);
        std::printf("degree %d\n", 2 * m.graph.e());
        auto line = [](const char* tag, const std::vector<int>& part) {
            std::printf("%s", tag);
            for (int x : part) std::printf(" %d", x);
            std::printf("\n");
        };
        line("over_zero", prof.over_zero);
        line("over_one", prof.over_one);
        line("over_infinity", prof.over_infinity);
        std::printf("riemann_hurwitz %s\n",
                    ribbon::riemann_hurwitz_exact(m.graph) ? "exact"
                                                           : "violated");
    });

    // elliptic --case square|hexagonal
    auto* elliptic = app.add_subcommand(
        "elliptic", "Weierstrass data for the square and hexagonal tori");
    std::string elliptic_case;
    bool elliptic_report_flag = false;
    elliptic->add_option("--case", elliptic_case, "square or hexagonal")
        ->required()
        ->check(CLI::IsMember({"square", "hexagonal"}));
    elliptic->add_flag("--report", elliptic_report_flag,
                       "full residual report (always printed)");
    JsonSink elliptic_json;
    elliptic_json.attach(elliptic);
    elliptic->callback([&] {
        ribbon::EllipticCase kind = elliptic_case == "square"
                                        ? ribbon::EllipticCase::Square
                                        : ribbon::EllipticCase::Hexagonal;
        ribbon::EllipticReport rep = ribbon::elliptic_report(kind);
        if (elliptic_json.wanted()) {
            elliptic_json.emit(ribbon::elliptic_to_json(rep));
            return;
        }
        std::printf("case %s\n", elliptic_case.c_str());
        print_complex("tau", rep.normalized.tau);
        print_complex("scale", rep.normalized.scale);
        print_complex("g2", rep.g2);
        print_complex("g3", rep.g3);
        print_complex("e1", rep.e[0]);
        print_complex("e2", rep.e[1]);
        print_complex("e3", rep.e[2]);
        std::printf("e_deviation %s\n",
                    ribbon::format_double(rep.e_deviation).c_str());
        std::printf("e_sum %s\n", ribbon::format_double(rep.e_sum).c_str());
        std::printf("pullback_residual %s\n",
                    ribbon::format_double(rep.pullback_max).c_str());
        std::printf("doubling_delta %s\n",
                    ribbon::format_double(rep.doubling_delta).c_str());
        std::printf("ok %s\n", rep.ok ? "yes" : "no");
    });

    // verify
    auto* verify = app.add_subcommand(
        "verify", "run the acceptance suite");
    int verify_jobs = 1;
    bool verify_stretch = false;
    verify->add_option("--jobs", verify_jobs, "worker threads");
    verify->add_flag("--stretch", verify_stretch,
                     "include the genus-2 stretch census");
    verify->callback([&] {
        auto results = ribbon::run_acceptance(verify_jobs, verify_stretch);
        ribbon::print_acceptance(results);
        exit_code = ribbon::all_passed(results) ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ribbon::DomainError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return exit_code;
}
