#pragma once

#include <optional>
#include <vector>

#include "origraph/vertex_map.hpp"

namespace origraph {

// Backtracking homomorphism search. Targets are capped at 64 vertices
// (domains are bitmasks); every operation here is deterministic.
//
// find_homomorphism solves weakly connected components of the source
// independently (components ordered by smallest vertex id; within one,
// vertices by decreasing degree, ties by id) and stitches the first
// solution of each. enumerate_homomorphisms assigns vertices in id order
// with target values ascending, so results come out sorted
// lexicographically by image vector. Both maintain arc consistency while
// searching, which prunes but cannot change which maps are produced.

std::optional<VertexMap> find_homomorphism(const OrientedGraph& source,
                                           const OrientedGraph& target);

std::vector<VertexMap> enumerate_homomorphisms(const OrientedGraph& source,
                                               const OrientedGraph& target,
                                               std::optional<std::size_t> limit = std::nullopt);

// All arc-preserving bijections g -> g, sorted lexicographically by image.
std::vector<VertexMap> automorphisms(const OrientedGraph& g);

// True iff every endomorphism of g is an automorphism. Enumerates
// endomorphisms, so only sensible at small order.
bool is_core(const OrientedGraph& g);

// True iff no two homomorphisms d -> c differ in exactly one vertex.
bool is_pointed(const OrientedGraph& c, const OrientedGraph& d);

// True iff some homomorphism d -> c is onto c and Aut(c) acts transitively
// on the set of all homomorphisms d -> c.
bool is_uniquely_colourable(const OrientedGraph& d, const OrientedGraph& c);

} // namespace origraph
