#pragma once

#include <optional>

#include "origraph/tournaments.hpp"
#include "origraph/vertex_map.hpp"

namespace origraph {

struct ChromaticWitness {
    int chi = 0;
    Tournament target;
    VertexMap colouring;
};

// Smallest k <= cap such that some k-vertex tournament receives a
// homomorphism from g, searched in catalog order; nullopt when every order
// up to cap fails. The empty graph needs no colours at all. cap is limited
// to kMaxCatalogOrder.
std::optional<int> oriented_chromatic_number(const OrientedGraph& g, int cap = kMaxCatalogOrder);

// Same search, but also returns the first tournament and colouring found.
std::optional<ChromaticWitness> chromatic_witness(const OrientedGraph& g,
                                                  int cap = kMaxCatalogOrder);

} // namespace origraph
