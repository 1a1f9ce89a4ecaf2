#pragma once

// Test-only brute-force oracles. Everything here recomputes results by
// exhaustion, independently of the library's search and canonicalization
// paths, so the two sides of each comparison share no code.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <origraph/graph.hpp>
#include <origraph/vertex_map.hpp>

namespace oracles {

using origraph::Arc;
using origraph::OrientedGraph;
using origraph::Vertex;
using origraph::VertexMap;

// Shortest directed cycle by exhaustive simple-cycle enumeration.
std::optional<int> girth_by_enumeration(const OrientedGraph& g);

// Number of directed cycles shorter than the bound, counted once per
// rotation class.
std::size_t short_cycle_count_by_enumeration(const OrientedGraph& g, int length_bound);

// Every map V(d) -> V(c) checked arc by arc; results in lexicographic
// image order.
std::vector<VertexMap> homs_by_exhaustion(const OrientedGraph& d, const OrientedGraph& c);
bool hom_exists_by_exhaustion(const OrientedGraph& d, const OrientedGraph& c);

// All 2^(k(k-1)/2) labeled tournaments on k vertices.
std::vector<OrientedGraph> all_labeled_tournaments(int k);

// Isomorphism-class count by keeping a list of representatives and
// rejecting candidates isomorphic to a kept one (all k! permutations,
// bucketed by sorted out-degree sequence).
std::size_t tournament_classes_by_rejection(int k);

// Smallest k <= cap such that some labeled k-tournament admits a
// homomorphism from g, deciding existence by exhaustion over maps.
std::optional<int> chi_by_labeled_exhaustion(const OrientedGraph& g, int cap);

// Homomorphisms from a directed cycle are closed walks, so existence for a
// cycle of the given length is trace(A^length) > 0 over the target's
// adjacency matrix. Returns the smallest tournament order <= cap that
// receives the cycle.
std::optional<int> cycle_chi_by_walk_counting(int cycle_length, int cap);

// All 3^(pairs) oriented graphs on the given order (each pair: absent,
// forward, backward).
std::vector<OrientedGraph> all_oriented_graphs(int order);

// Random oriented graph: each unordered pair independently gets no arc
// (probability 1 - arc_prob) or one uniformly directed arc.
OrientedGraph random_oriented_graph(int order, double arc_prob, std::mt19937_64& gen);

} // namespace oracles
