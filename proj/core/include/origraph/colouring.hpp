#pragma once

#include <optional>

#include "origraph/graph.hpp"
#include "origraph/vertex_map.hpp"

namespace origraph {

// Oriented colourings of a graph with colours 0..k-1:
//   (1) the endpoints of every arc get distinct colours;
//   (2) no two arcs uv, xy with colour(v) == colour(x) and colour(u) == colour(y).
//
// A valid colouring induces an oriented graph on the colours (one arc per
// realized colour pair); completing the unused pairs low -> high yields a
// tournament the colouring is a homomorphism into.

struct ColouringViolation {
    int condition = 0; // 1 or 2
    Arc first;         // offending arc
    Arc second;        // second arc for condition 2; equals first for condition 1
};

struct ColouringReport {
    std::optional<ColouringViolation> violation;
    std::optional<Tournament> completion; // set iff valid
    std::optional<VertexMap> homomorphism; // the colouring into the completion
    bool valid() const noexcept { return !violation.has_value(); }
};

// colouring.target_order is the number of colours k; the map must be total
// on the graph's vertices (DomainError otherwise).
ColouringReport validate_oriented_colouring(const OrientedGraph& g, const VertexMap& colouring);

} // namespace origraph
