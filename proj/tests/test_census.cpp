#include "ribbon/census.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/json_io.hpp"

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

using namespace ribbon;

namespace {

std::vector<int> star_sigma(int d) {
    std::vector<int> sigma(2 * d);
    for (int i = 0; i < d; ++i) {
        sigma[i] = (i + 1) % d;
        sigma[d + i] = d + i;
    }
    return sigma;
}

std::vector<int> star_alpha(int d) {
    std::vector<int> alpha(2 * d);
    for (int i = 0; i < d; ++i) {
        alpha[i] = d + i;
        alpha[d + i] = i;
    }
    return alpha;
}

std::string golden_path(const char* name) {
    return std::string(RIBBON_TESTDATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("genus one with one boundary component") {
    auto census = enumerate(1, 1);
    REQUIRE(census.size() == 2);
    CHECK(census[0].e == 2);
    CHECK(census[0].v == 1);
    CHECK(census[0].aut_order == 4);
    CHECK(census[1].e == 3);
    CHECK(census[1].v == 2);
    CHECK(census[1].aut_order == 6);
    for (const auto& entry : census) {
        CHECK(entry.b == 1);
        CHECK(entry.g == 1);
        CHECK(entry.exceptional);
        CHECK(entry.aut_boundary_order == entry.aut_order);
        CHECK(entry.labeled_orbit_count == 1);
    }
}

TEST_CASE("three punctured sphere census") {
    auto census = enumerate(0, 3);
    REQUIRE(census.size() == 3);
    // sorted by canonical form, so the 4-dart class leads
    CHECK(census[0].e == 2);
    CHECK(census[0].aut_order == 2);
    CHECK(census[0].labeled_orbit_count == 3);

    std::multiset<std::pair<int, long long>> signature;
    for (const auto& entry : census) {
        CHECK(entry.b == 3);
        CHECK(entry.g == 0);
        CHECK_FALSE(entry.exceptional);
        CHECK(entry.aut_boundary_order == 1);
        signature.insert({entry.aut_order, entry.labeled_orbit_count});
    }
    CHECK(signature ==
          std::multiset<std::pair<int, long long>>{{2, 3}, {2, 3}, {6, 1}});
}

TEST_CASE("labeled census of the three punctured sphere") {
    auto labeled = enumerate_labeled(0, 3);
    REQUIRE(labeled.size() == 7);
    // the figure eight splits into three labelings, lex-least per orbit
    CHECK(labeled[0].labels == std::vector<int>{0, 1, 2});
    CHECK(labeled[1].labels == std::vector<int>{1, 0, 2});
    CHECK(labeled[2].labels == std::vector<int>{2, 0, 1});
    for (const auto& le : labeled) {
        CHECK(le.aut_order == le.entry.aut_boundary_order);
        CHECK(static_cast<int>(le.labels.size()) == 3);
    }
}

TEST_CASE("unsatisfiable and oversized parameters") {
    CHECK_THROWS_AS(enumerate(0, 1), UnsatisfiableParameters);
    CHECK_THROWS_AS(enumerate(0, 2), UnsatisfiableParameters);
    CHECK_THROWS_AS(enumerate(1, 0), UnsatisfiableParameters);
    CHECK_THROWS_AS(enumerate(-1, 3), UnsatisfiableParameters);
    CHECK_THROWS_AS(enumerate(2, 2), TooLarge); // needs e up to 12
    CensusOptions tight;
    tight.max_edges = 2;
    CHECK_THROWS_AS(enumerate(0, 3, tight), TooLarge);
}

TEST_CASE("census entries satisfy the surface constraints") {
    for (auto [g, n] : {std::pair<int, int>{0, 3}, {0, 4}, {1, 1}, {1, 2}}) {
        auto census = enumerate(g, n);
        CHECK(!census.empty());
        CHECK(std::is_sorted(census.begin(), census.end(),
                             [](const CensusEntry& x, const CensusEntry& y) {
                                 return x.canonical < y.canonical;
                             }));
        long long labeled_total = 0;
        for (const auto& entry : census) {
            CHECK(entry.g == g);
            CHECK(entry.b == n);
            CHECK(entry.v - entry.e + entry.b == 2 - 2 * g);
            CHECK(2 * entry.e >= entry.aut_order);
            CHECK((2 * entry.e) % entry.aut_order == 0);
            CHECK(entry.aut_order % entry.aut_boundary_order == 0);
            labeled_total += entry.labeled_orbit_count;
        }
        CHECK(static_cast<long long>(enumerate_labeled(g, n).size()) ==
              labeled_total);
    }
}

TEST_CASE("census is deterministic across thread counts") {
    CensusOptions serial, threaded;
    serial.jobs = 1;
    threaded.jobs = 3;
    auto a = enumerate(0, 3, serial);
    auto b = enumerate(0, 3, threaded);
    CHECK(census_to_json(a).dump() == census_to_json(b).dump());
}

TEST_CASE("census catalogs match the golden files") {
    for (const char* name :
         {"census_0_3.json", "census_0_4.json", "census_1_1.json",
          "census_1_2.json"}) {
        std::ifstream in(golden_path(name));
        REQUIRE_MESSAGE(in.good(), std::string(name));
        std::ostringstream want;
        want << in.rdbuf();
        int g = name[7] - '0';
        int n = name[9] - '0';
        std::string got = census_to_json(enumerate(g, n)).dump() + "\n";
        CHECK_MESSAGE(got == want.str(), name);
    }
}

TEST_CASE("expansion poset of small stars") {
    RibbonGraph star4 = build(8, star_sigma(4), star_alpha(4), 1);
    ExpansionPoset p4 = expansion_poset(star4);
    CHECK(p4.cells_by_codim == std::vector<long long>{1, 2});
    CHECK(p4.nodes.size() == 3);

    RibbonGraph star5 = build(10, star_sigma(5), star_alpha(5), 1);
    ExpansionPoset p5 = expansion_poset(star5);
    CHECK(p5.cells_by_codim == std::vector<long long>{1, 5, 5});

    RibbonGraph star6 = build(12, star_sigma(6), star_alpha(6), 1);
    ExpansionPoset p6 = expansion_poset(star6);
    CHECK(p6.cells_by_codim == std::vector<long long>{1, 9, 21, 14});
    CHECK_THROWS_AS(expansion_poset(star6, 2), TooLarge);
}

TEST_CASE("expansion poset covers step down one level") {
    RibbonGraph star5 = build(10, star_sigma(5), star_alpha(5), 1);
    ExpansionPoset poset = expansion_poset(star5);
    CHECK(poset.nodes[0].covers.empty());
    for (std::size_t i = 1; i < poset.nodes.size(); ++i) {
        const auto& node = poset.nodes[i];
        CHECK(!node.covers.empty());
        CHECK(std::is_sorted(node.covers.begin(), node.covers.end()));
        for (int j : node.covers) {
            REQUIRE(j >= 0);
            REQUIRE(j < static_cast<int>(i));
            CHECK(poset.nodes[j].codim == node.codim - 1);
        }
    }
    // each of the five triangulations covers exactly its two diagonals
    for (const auto& node : poset.nodes)
        if (node.codim == 2) CHECK(node.covers.size() == 2);
}

TEST_CASE("expansion poset of a trivalent graph is a point") {
    RibbonGraph theta = build(6, {1, 2, 0, 4, 5, 3}, {3, 5, 4, 0, 2, 1});
    ExpansionPoset poset = expansion_poset(theta);
    CHECK(poset.cells_by_codim == std::vector<long long>{1});
    CHECK(poset.nodes.size() == 1);
}
