#include <doctest.h>

#include <origraph/chromatic.hpp>
#include <origraph/hom_search.hpp>

#include <random>

#include "support/oracles.hpp"

using namespace origraph;

TEST_CASE("chromatic numbers of pinned cycles") {
    CHECK(oriented_chromatic_number(directed_cycle(5)) == 5);
    CHECK(oriented_chromatic_number(directed_cycle(3)) == 3);
    CHECK(oriented_chromatic_number(directed_cycle(6)) == 3);
    CHECK(oriented_chromatic_number(directed_cycle(4)) == 4);
}

TEST_CASE("the 6-cycle fails every tournament on at most 2 vertices") {
    const auto c6 = directed_cycle(6);
    for (int k = 1; k <= 2; ++k)
        for (const auto& t : oracles::all_labeled_tournaments(k))
            CHECK_FALSE(oracles::hom_exists_by_exhaustion(c6, t));
    // and the residue colouring lands it in the cyclic triangle
    CHECK(is_homomorphism(VertexMap{6, 3, {0, 1, 2, 0, 1, 2}}, c6, directed_cycle(3)));
}

TEST_CASE("tournaments need exactly their order") {
    for (int k = 1; k <= 5; ++k)
        for (const auto& t : shared_catalog(k).members())
            CHECK(oriented_chromatic_number(t) == k);
}

TEST_CASE("catalog search agrees with the labeled-tournament oracle on all order-4 graphs") {
    for (const auto& g : oracles::all_oriented_graphs(4))
        CHECK(oriented_chromatic_number(g, 4) == oracles::chi_by_labeled_exhaustion(g, 4));
}

TEST_CASE("edge cases") {
    CHECK(oriented_chromatic_number(OrientedGraph(0, {})) == 0);
    CHECK(oriented_chromatic_number(OrientedGraph(3, {})) == 1);
    // a 6-vertex tournament exceeds a cap of 5
    const auto t6 = shared_catalog(6).members().front();
    CHECK_FALSE(oriented_chromatic_number(t6, 5).has_value());
    CHECK_THROWS_AS(oriented_chromatic_number(directed_cycle(3), 0), DomainError);
    CHECK_THROWS_AS(oriented_chromatic_number(directed_cycle(3), 9), DomainError);
}

TEST_CASE("witness form returns a valid colouring") {
    const auto w = chromatic_witness(directed_cycle(7));
    REQUIRE(w.has_value());
    CHECK(w->chi == 4);
    CHECK(is_homomorphism(w->colouring, directed_cycle(7), w->target.graph()));
}

TEST_CASE("deleting an arc never raises the chromatic number") {
    std::mt19937_64 gen(606);
    for (int trial = 0; trial < 25; ++trial) {
        const int order = 3 + static_cast<int>(gen() % 3);
        const auto g = oracles::random_oriented_graph(order, 0.6, gen);
        const auto chi = oriented_chromatic_number(g);
        REQUIRE(chi.has_value());
        for (const Arc& a : g.arcs()) {
            const auto reduced = oriented_chromatic_number(g.without_arcs({a}));
            REQUIRE(reduced.has_value());
            CHECK(*reduced <= *chi);
        }
    }
}
