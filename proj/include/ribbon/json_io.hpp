#pragma once

#include "ribbon/atlas.hpp"
#include "ribbon/census.hpp"
#include "ribbon/elliptic.hpp"
#include "ribbon/map.hpp"
#include "ribbon/strebel.hpp"
#include "ribbon/symmetry.hpp"

#include <json.hpp>

#include <string>

namespace ribbon {

using Json = nlohmann::json;

// Floats are serialized as strings with 17 significant digits so that the
// JSON round-trips the exact IEEE double and stays byte-stable.
std::string format_double(double x);
Json complex_to_json(const std::complex<double>& z);

// Interchange schema: {"darts": N, "sigma": [...], "alpha": [...]} with
// 0-indexed image arrays, plus optional "lengths" of exact rationals.
Json graph_to_json(const RibbonGraph& g);
Json graph_to_json(const MetricRibbonGraph& m);

// Lengths are optional in the input; when absent the result has an empty
// lengths vector. Throws InvalidGraphJson on schema violations, and the
// usual build() errors on invalid permutation data.
MetricRibbonGraph graph_from_json(const Json& j, int min_degree = 3);
MetricRibbonGraph load_graph_file(const std::string& path,
                                  int min_degree = 3);

Json census_to_json(const std::vector<CensusEntry>& entries);
Json labeled_census_to_json(const std::vector<LabeledCensusEntry>& entries);
Json aut_to_json(const RibbonGraph& g);
Json strebel_to_json(const Strebel03Solution& sol);
Json profile_to_json(const RibbonGraph& g);
Json dessin_to_json(const Dessin& d);
Json poset_to_json(const ExpansionPoset& poset);
Json elliptic_to_json(const EllipticReport& rep);

} // namespace ribbon
