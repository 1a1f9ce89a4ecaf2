#include <doctest.h>

#include <origraph/hom_search.hpp>
#include <origraph/random_model.hpp>
#include <origraph/witness.hpp>

#include <cmath>

using namespace origraph;

namespace {

const OrientedGraph single_arc(2, {{0, 1}});

SampleParams make_params(OrientedGraph base, int n, int l, std::uint64_t seed, int k = 1) {
    SampleParams p;
    p.base = std::move(base);
    p.part_size = n;
    p.girth_target = l;
    p.epsilon = SampleParams::default_epsilon(l);
    p.colour_bound = k;
    p.seed = seed;
    return p;
}

} // namespace

TEST_CASE("blow up of a single arc") {
    const auto b = blow_up(single_arc, 3);
    CHECK(b.graph.order() == 6);
    CHECK(b.graph.arc_count() == 9);
    for (Vertex x = 0; x < 3; ++x)
        for (Vertex y = 3; y < 6; ++y)
            CHECK(b.graph.has_arc(x, y));
}

TEST_CASE("blow up of the triangle") {
    const auto b = blow_up(directed_cycle(3), 2);
    CHECK(b.graph.order() == 6);
    CHECK(b.graph.arc_count() == 12);
    CHECK(b.part_of(0) == 0);
    CHECK(b.part_of(5) == 2);
}

TEST_CASE("blow up with part size one is the base") {
    const auto base = directed_cycle(4);
    CHECK(blow_up(base, 1).graph == base);
    CHECK_THROWS_AS(blow_up(base, 0), DomainError);
}

TEST_CASE("blow-up arcs are exactly the cross pairs of base arcs") {
    const auto base = cycle_target(4).graph();
    const auto b = blow_up(base, 3);
    for (const Arc& a : b.graph.arcs())
        CHECK(base.has_arc(b.part_of(a.from), b.part_of(a.to)));
    CHECK(b.graph.arc_count() == base.arc_count() * 9);
    const auto psi = b.projection();
    CHECK(is_homomorphism(psi, b.graph, base));
    CHECK(is_surjective(psi));
}

TEST_CASE("parameter validation") {
    auto p = make_params(directed_cycle(3), 10, 4, 1, 3);
    CHECK_NOTHROW(p.validate());
    p.epsilon = 0.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p.epsilon = 1.0 / 16.0; // not strictly below 1/(4*4)
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = make_params(directed_cycle(3), 2, 4, 1, 3); // n < k
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = make_params(directed_cycle(3), 10, 2, 1);
    CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("probability one keeps the whole blow-up") {
    // n = 1 forces p = 1^(eps-1) = 1
    const auto p = make_params(directed_cycle(3), 1, 3, 77);
    CHECK(sample(p) == blow_up(directed_cycle(3), 1).graph);
}

TEST_CASE("sampling is deterministic in the seed") {
    const auto p = make_params(directed_cycle(3), 20, 4, 12345, 3);
    CHECK(sample(p) == sample(p));
    auto q = p;
    q.seed = 54321;
    CHECK_FALSE(sample(q) == sample(p));
}

TEST_CASE("empirical mean arc count matches the binomial expectation") {
    const auto params = make_params(single_arc, 30, 3, 271828);
    const auto blowup = blow_up(params.base, params.part_size);
    const double p = params.arc_probability();
    const double arcs = static_cast<double>(blowup.graph.arc_count());

    const int trials = 1000;
    double total = 0.0;
    for (int t = 0; t < trials; ++t)
        total += static_cast<double>(
            sample(blowup, p, params.seed + static_cast<std::uint64_t>(t)).arc_count());
    const double mean = total / trials;
    const double expected = arcs * p;
    const double stderr_of_mean = std::sqrt(arcs * p * (1.0 - p) / trials);
    CHECK(std::abs(mean - expected) <= 5.0 * stderr_of_mean);
}

TEST_CASE("destroy_short_cycles leaves high-girth graphs alone") {
    const auto c5 = directed_cycle(5);
    const auto r = destroy_short_cycles(c5, 5);
    CHECK(r.graph == c5);
    CHECK(r.removed.empty());
    CHECK(r.rounds == 0);
    CHECK(r.short_cycles_before == 0);
    CHECK(r.matching);
}

TEST_CASE("destroy_short_cycles kills the triangle with one arc") {
    const auto r = destroy_short_cycles(directed_cycle(3), 4);
    CHECK(r.removed.size() == 1);
    CHECK_FALSE(girth(r.graph).has_value());
    CHECK(r.short_cycles_before == 1);
    CHECK(r.rounds == 1);
    CHECK(r.matching);
}

TEST_CASE("disjoint triangles give a 2-arc matching") {
    OrientedGraph g(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    const auto r = destroy_short_cycles(g, 4);
    CHECK(r.removed.size() == 2);
    CHECK(r.matching);
    CHECK_FALSE(girth(r.graph).has_value());
}

TEST_CASE("overlapping cycles still end above the girth target") {
    // two triangles sharing the arc (0,1)
    OrientedGraph g(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 0}});
    const auto r = destroy_short_cycles(g, 4);
    const auto after = girth(r.graph);
    CHECK((!after || *after >= 4));
    CHECK(r.removed.size() <= r.short_cycles_before);
}

TEST_CASE("pipeline on a single-vertex base") {
    const auto outcome = run_pipeline(make_params(OrientedGraph(1, {}), 5, 3, 9));
    CHECK(outcome.d_star.arc_count() == 0);
    CHECK(is_surjective(outcome.psi));
    for (Vertex v : outcome.psi.image)
        CHECK(v == 0);
}

TEST_CASE("pipeline invariants over a seed sweep") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const auto params = make_params(directed_cycle(3), 25, 4, seed * 101 + 7, 3);
        const auto outcome = run_pipeline(params);
        const auto blowup = blow_up(params.base, params.part_size);

        const auto g = girth(outcome.d_star);
        CHECK((!g || *g >= params.girth_target));
        CHECK(is_homomorphism(outcome.psi, outcome.d_star, params.base));
        CHECK(is_surjective(outcome.psi));
        CHECK(outcome.d_star.is_subgraph_of(blowup.graph));
        CHECK(outcome.removed.size() <= outcome.short_cycle_count);
        // removed arcs really left the graph and came from the sample
        for (const Arc& a : outcome.removed) {
            CHECK_FALSE(outcome.d_star.has_arc(a.from, a.to));
            CHECK(blowup.graph.has_arc(a.from, a.to));
        }
    }
}

TEST_CASE("outcomes serialize identically for identical parameters") {
    const auto params = make_params(directed_cycle(3), 30, 4, 31415, 3);
    const auto a = serialize_outcome(run_pipeline(params));
    const auto b = serialize_outcome(run_pipeline(params));
    CHECK(a == b);
    auto other = params;
    other.seed += 1;
    CHECK(serialize_outcome(run_pipeline(other)) != a);
}

TEST_CASE("base colourings compose with psi into output colourings") {
    const auto params = make_params(directed_cycle(3), 20, 4, 5150, 3);
    const auto outcome = run_pipeline(params);
    for (int k = 1; k <= 3; ++k) {
        for (const auto& t : shared_catalog(k).members()) {
            if (const auto f = find_homomorphism(params.base, t))
                CHECK(is_homomorphism(compose(*f, outcome.psi), outcome.d_star, t.graph()));
        }
    }
}

TEST_CASE("removing arcs preserves homomorphisms") {
    const auto params = make_params(directed_cycle(3), 15, 4, 8080, 3);
    const auto blowup = blow_up(params.base, params.part_size);
    const auto sampled = sample(blowup, params.arc_probability(), params.seed);
    const auto destroyed = destroy_short_cycles(sampled, params.girth_target);
    const auto psi = blowup.projection();
    REQUIRE(is_homomorphism(psi, sampled, params.base));
    CHECK(is_homomorphism(psi, destroyed.graph, params.base));
}
