#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "origraph/graph.hpp"

namespace origraph {

// Total function between two vertex sets. Homomorphisms, colourings and the
// pipeline projection are all VertexMaps; whether one is a homomorphism is a
// property checked against a concrete (source, target) pair.
struct VertexMap {
    Vertex source_order = 0;
    Vertex target_order = 0;
    std::vector<Vertex> image; // image[v] for v in 0..source_order-1

    Vertex operator()(Vertex v) const { return image[static_cast<std::size_t>(v)]; }

    friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

// Sizes consistent and every image entry within 0..target_order-1.
bool is_well_formed(const VertexMap& f);

// Every source arc lands on a target arc. Requires f to cover source/target.
bool is_homomorphism(const VertexMap& f, const OrientedGraph& source,
                     const OrientedGraph& target);

bool is_surjective(const VertexMap& f);

// (outer . inner)(v) = outer(inner(v)); inner's target must be outer's source.
VertexMap compose(const VertexMap& outer, const VertexMap& inner);

// One-line text form "map: i0 i1 ... i_{m-1}", used by witness bundles and
// the CLI. parse_map_line accepts an optional trailing newline.
std::string format_map_line(const VertexMap& f);
std::vector<Vertex> parse_map_line(std::string_view line);

} // namespace origraph
