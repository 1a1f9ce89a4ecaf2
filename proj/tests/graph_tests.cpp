#include <doctest.h>

#include <origraph/graph.hpp>

#include <random>
#include <set>

#include "support/oracles.hpp"

using namespace origraph;

TEST_CASE("construction accepts the directed triangle") {
    OrientedGraph g(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(g.order() == 3);
    CHECK(g.arc_count() == 3);
    CHECK(g.has_arc(0, 1));
    CHECK_FALSE(g.has_arc(1, 0));
}

TEST_CASE("construction rejects opposite arcs") {
    CHECK_THROWS_WITH_AS(OrientedGraph(2, {{0, 1}, {1, 0}}),
                         doctest::Contains("both"), GraphError);
    try {
        OrientedGraph(2, {{0, 1}, {1, 0}});
    } catch (const GraphError& e) {
        CHECK(e.kind() == GraphError::Kind::OppositeArcs);
    }
}

TEST_CASE("construction rejects loops") {
    try {
        OrientedGraph(1, {{0, 0}});
        FAIL("expected GraphError");
    } catch (const GraphError& e) {
        CHECK(e.kind() == GraphError::Kind::LoopArc);
    }
}

TEST_CASE("construction rejects out-of-range endpoints") {
    try {
        OrientedGraph(2, {{0, 2}});
        FAIL("expected GraphError");
    } catch (const GraphError& e) {
        CHECK(e.kind() == GraphError::Kind::VertexOutOfRange);
    }
}

TEST_CASE("duplicate arcs are collapsed") {
    OrientedGraph g(2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(g.arc_count() == 1);
}

TEST_CASE("girth basics") {
    CHECK(girth(directed_cycle(3)) == 3);
    CHECK(girth(directed_cycle(7)) == 7);
    CHECK_FALSE(girth(OrientedGraph(2, {{0, 1}})).has_value());
    CHECK_FALSE(girth(OrientedGraph(0, {})).has_value());
}

TEST_CASE("girth agrees with exhaustive cycle enumeration on small graphs") {
    std::mt19937_64 gen(7031);
    for (int order = 2; order <= 8; ++order) {
        for (int trial = 0; trial < 40; ++trial) {
            const double density = trial % 4 * 0.25 + 0.2;
            const auto g = oracles::random_oriented_graph(order, density, gen);
            CAPTURE(order);
            CAPTURE(trial);
            CHECK(girth(g) == oracles::girth_by_enumeration(g));
        }
    }
}

TEST_CASE("short_cycles on the triangle") {
    const auto t = directed_cycle(3);
    const auto under4 = short_cycles(t, 4);
    REQUIRE(under4.size() == 1);
    CHECK(under4[0].vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(short_cycles(t, 3).empty()); // strict inequality
}

TEST_CASE("short_cycles finds both disjoint triangles") {
    OrientedGraph g(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    const auto cycles = short_cycles(g, 5);
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0].vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(cycles[1].vertices == std::vector<Vertex>{3, 4, 5});
}

TEST_CASE("short_cycles rejects bounds below 3") {
    CHECK_THROWS_AS(short_cycles(directed_cycle(3), 2), DomainError);
}

TEST_CASE("short_cycles properties on random graphs") {
    std::mt19937_64 gen(20507);
    for (int trial = 0; trial < 60; ++trial) {
        const int order = 3 + static_cast<int>(gen() % 6);
        const auto g = oracles::random_oriented_graph(order, 0.5, gen);
        for (int bound = 3; bound <= 7; ++bound) {
            const auto cycles = short_cycles(g, bound);
            // every reported sequence is a genuine short directed cycle in
            // canonical rotation
            std::set<std::vector<Vertex>> seen;
            for (const Cycle& c : cycles) {
                CHECK(c.length() >= 3);
                CHECK(c.length() < bound);
                CHECK(*std::min_element(c.vertices.begin(), c.vertices.end()) == c.vertices[0]);
                std::set<Vertex> distinct(c.vertices.begin(), c.vertices.end());
                CHECK(distinct.size() == c.vertices.size());
                for (std::size_t i = 0; i < c.vertices.size(); ++i)
                    CHECK(g.has_arc(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]));
                CHECK(seen.insert(c.vertices).second); // no duplicates
            }
            CHECK(cycles.size() == oracles::short_cycle_count_by_enumeration(g, bound));
            // girth below the bound iff some short cycle exists
            const auto gg = girth(g);
            CHECK((gg && *gg < bound) == !cycles.empty());
        }
    }
}

TEST_CASE("is_tournament") {
    CHECK(is_tournament(directed_cycle(3)));
    CHECK_FALSE(is_tournament(OrientedGraph(3, {{0, 1}})));
    CHECK(is_tournament(OrientedGraph(1, {})));
}

TEST_CASE("tournament wrapper validates") {
    CHECK_THROWS_AS(Tournament(OrientedGraph(3, {{0, 1}})), DomainError);
    CHECK(Tournament(directed_cycle(3)).order() == 3);
}

TEST_CASE("without_arcs removes exactly the listed arcs") {
    const auto g = directed_cycle(5);
    const auto h = g.without_arcs({{0, 1}, {2, 3}});
    CHECK(h.arc_count() == 3);
    CHECK_FALSE(h.has_arc(0, 1));
    CHECK(h.is_subgraph_of(g));
    CHECK_FALSE(g.is_subgraph_of(h));
}
