#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vclique/instances.hpp"
#include "vclique/oracle.hpp"

using namespace vclique;

TEST_CASE("every named instance rebuilds with its published vertex and edge counts") {
    for (const auto& inst : instances::named_instances()) {
        CAPTURE(inst.name);
        const Graph g = inst.build();
        CHECK(g.vertex_count() == inst.expected_n);
        CHECK(g.edge_count() == static_cast<std::uint64_t>(inst.expected_m));
    }
}

TEST_CASE("johnson family") {
    const Graph g = instances::johnson(8, 2, 4);
    CHECK(g.vertex_count() == 28);
    CHECK(g.edge_count() == 210);
    // weight-2 words: distance >= 4 means disjoint pairs, so degree C(6,2)
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 15);
}

TEST_CASE("hamming family") {
    const Graph g = instances::hamming(6, 4);
    CHECK(g.vertex_count() == 64);
    // per word: C(6,4)+C(6,5)+C(6,6) = 22 words at distance >= 4
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 22);
}

TEST_CASE("c-fat ring family, including a cross-check member") {
    CHECK(instances::c_fat(200, 1).edge_count() == 1534);
    CHECK(instances::c_fat(500, 1).edge_count() == 4459);
    // not part of the shipped set; validates the family rule itself
    CHECK(instances::c_fat(200, 2).edge_count() == 3235);
    CHECK(instances::c_fat(200, 5).edge_count() == 8473);
    CHECK_THROWS_AS(instances::c_fat(1, 1), std::invalid_argument);
}

TEST_CASE("MANN_a9 shape") {
    const Graph g = instances::mann_a9();
    CHECK(g.vertex_count() == 45);
    CHECK(g.edge_count() == 918);
    CHECK(g.max_degree() == 41);  // incidence vertices miss 2 row-mates + 1 point
    int degree40 = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 40) ++degree40;  // point vertices miss their 4 triples
    }
    CHECK(degree40 == 9);
}

TEST_CASE("keller reduction") {
    const Graph g = instances::keller(4);
    CHECK(g.vertex_count() == 171);
    CHECK(g.edge_count() == 9435);
    CHECK_THROWS_AS(instances::keller(0), std::invalid_argument);
}

TEST_CASE("published clique sizes reproduce on the small members") {
    CHECK(branch_and_bound_max_clique(instances::johnson(8, 2, 4)).clique.size() == 4);
    CHECK(branch_and_bound_max_clique(instances::hamming(6, 4)).clique.size() == 4);
    CHECK(branch_and_bound_max_clique(instances::c_fat(200, 1)).clique.size() == 12);
}
