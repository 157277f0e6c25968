#include "ribbon/json_io.hpp"

#include "ribbon/errors.hpp"

#include <cstdio>
#include <fstream>

namespace ribbon {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

Json complex_to_json(const std::complex<double>& z) {
    return Json{{"re", format_double(z.real())},
                {"im", format_double(z.imag())}};
}

Json graph_to_json(const RibbonGraph& g) {
    return Json{{"darts", g.n_darts}, {"sigma", g.sigma}, {"alpha", g.alpha}};
}

Json graph_to_json(const MetricRibbonGraph& m) {
    Json j = graph_to_json(m.graph);
    Json lengths = Json::array();
    for (const Rational& len : m.lengths) lengths.push_back(to_string(len));
    j["lengths"] = lengths;
    return j;
}

MetricRibbonGraph graph_from_json(const Json& j, int min_degree) {
    if (!j.is_object()) throw InvalidGraphJson("expected a JSON object");
    for (const char* key : {"darts", "sigma", "alpha"})
        if (!j.contains(key))
            throw InvalidGraphJson(std::string("missing field '") + key + "'");
    if (!j["darts"].is_number_integer())
        throw InvalidGraphJson("'darts' must be an integer");
    const int n = j["darts"].get<int>();
    auto ints = [&](const char* key) {
        const Json& arr = j[key];
        if (!arr.is_array())
            throw InvalidGraphJson(std::string("'") + key +
                                   "' must be an array");
        std::vector<int> out;
        for (const Json& x : arr) {
            if (!x.is_number_integer())
                throw InvalidGraphJson(std::string("'") + key +
                                       "' must hold integers");
            out.push_back(x.get<int>());
        }
        if (static_cast<int>(out.size()) != n)
            throw InvalidGraphJson(std::string("'") + key + "' must have " +
                                   std::to_string(n) + " entries");
        return out;
    };
    std::vector<int> sigma = ints("sigma");
    std::vector<int> alpha = ints("alpha");

    MetricRibbonGraph m;
    try {
        m.graph = build(n, sigma, alpha, min_degree);
    } catch (const std::invalid_argument& err) {
        throw InvalidGraphJson(err.what());
    }
    if (j.contains("lengths")) {
        const Json& arr = j["lengths"];
        if (!arr.is_array())
            throw InvalidGraphJson("'lengths' must be an array");
        for (const Json& x : arr) {
            if (x.is_number_integer())
                m.lengths.emplace_back(x.get<long long>());
            else if (x.is_string())
                m.lengths.push_back(rational_from_string(x.get<std::string>()));
            else
                throw InvalidGraphJson(
                    "'lengths' must hold integers or \"p/q\" strings");
        }
        if (static_cast<int>(m.lengths.size()) != m.graph.e())
            throw InvalidGraphJson("expected " + std::to_string(m.graph.e()) +
                                   " lengths");
    }
    return m;
}

MetricRibbonGraph load_graph_file(const std::string& path, int min_degree) {
    std::ifstream in(path);
    if (!in) throw InvalidGraphJson("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& err) {
        throw InvalidGraphJson(err.what());
    }
    return graph_from_json(j, min_degree);
}

namespace {

Json entry_to_json(const CensusEntry& entry) {
    return Json{{"darts", entry.canonical.n_darts},
                {"sigma", entry.canonical.sigma},
                {"alpha", entry.canonical.alpha},
                {"v", entry.v},
                {"e", entry.e},
                {"b", entry.b},
                {"g", entry.g},
                {"aut_order", entry.aut_order},
                {"aut_boundary_order", entry.aut_boundary_order},
                {"exceptional", entry.exceptional},
                {"labeled_orbit_count", entry.labeled_orbit_count}};
}

} // namespace

Json census_to_json(const std::vector<CensusEntry>& entries) {
    Json arr = Json::array();
    for (const CensusEntry& entry : entries) arr.push_back(entry_to_json(entry));
    return arr;
}

Json labeled_census_to_json(const std::vector<LabeledCensusEntry>& entries) {
    Json arr = Json::array();
    for (const LabeledCensusEntry& le : entries) {
        Json j = entry_to_json(le.entry);
        j["labels"] = le.labels;
        j["aut_order"] = le.aut_order;
        arr.push_back(std::move(j));
    }
    return arr;
}

Json aut_to_json(const RibbonGraph& g) {
    AutGroup aut = automorphisms(g);
    AutGroup bnd = boundary_preserving_automorphisms(g);
    return Json{{"order", aut.order},
                {"boundary_preserving_order", bnd.order},
                {"edge_kernel_order", aut.edge_kernel_order},
                {"exceptional", aut.edge_kernel_order > 1},
                {"generators", generating_set(aut)}};
}

Json strebel_to_json(const Strebel03Solution& sol) {
    static const char* case_names[3] = {"Positive", "Zero", "Negative"};
    static const char* factor_names[3] = {"a1+ainf-a0", "a0+ainf-a1",
                                          "a0+a1-ainf"};
    Json j{{"perimeters",
            {to_string(sol.a0), to_string(sol.a1), to_string(sol.ainf)}},
           {"coefficients",
            {to_string(sol.a), to_string(sol.b), to_string(sol.c)}},
           {"discriminant", to_string(sol.discriminant)},
           {"case", case_names[static_cast<int>(sol.disc_case)]},
           {"zeros", {complex_to_json(sol.zeros[0]),
                      complex_to_json(sol.zeros[1])}},
           {"lengths",
            {to_string(sol.L1), to_string(sol.L2), to_string(sol.L3)}},
           {"graph", graph_to_json(sol.graph)},
           {"boundary_labels", sol.boundary_labels}};
    if (sol.degenerate_factor >= 0)
        j["degenerate_factor"] = factor_names[sol.degenerate_factor];
    return j;
}

Json profile_to_json(const RibbonGraph& g) {
    RamificationProfile prof = ramification_profile(g);
    return Json{{"degree", 2 * g.e()},
                {"over_0", prof.over_zero},
                {"over_1", prof.over_one},
                {"over_infinity", prof.over_infinity},
                {"riemann_hurwitz", riemann_hurwitz_exact(g)}};
}

Json dessin_to_json(const Dessin& d) {
    Json colors = Json::array();
    for (std::uint8_t w : d.refined.white)
        colors.push_back(w ? "white" : "black");
    return Json{{"map", graph_to_json(d.refined.graph)},
                {"vertex_colors", colors},
                {"dot", d.dot}};
}

Json poset_to_json(const ExpansionPoset& poset) {
    Json nodes = Json::array();
    for (const auto& node : poset.nodes)
        nodes.push_back(Json{{"graph", graph_to_json(node.graph)},
                             {"codim", node.codim},
                             {"covers", node.covers}});
    return Json{{"base_darts", poset.base_darts},
                {"cells_by_codim", poset.cells_by_codim},
                {"nodes", nodes}};
}

Json elliptic_to_json(const EllipticReport& rep) {
    return Json{
        {"case", rep.kind == EllipticCase::Square ? "square" : "hexagonal"},
        {"tau", complex_to_json(rep.normalized.tau)},
        {"scale", complex_to_json(rep.normalized.scale)},
        {"truncation", rep.normalized.truncation},
        {"g2", complex_to_json(rep.g2)},
        {"g3", complex_to_json(rep.g3)},
        {"e", {complex_to_json(rep.e[0]), complex_to_json(rep.e[1]),
               complex_to_json(rep.e[2])}},
        {"e_deviation", format_double(rep.e_deviation)},
        {"e_sum", format_double(rep.e_sum)},
        {"pullback_residual", format_double(rep.pullback_max)},
        {"quadratic_zero_at_omega2", format_double(rep.quadratic_zero)},
        {"doubling_delta", format_double(rep.doubling_delta)},
        {"ok", rep.ok}};
}

} // namespace ribbon
