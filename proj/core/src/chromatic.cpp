#include "origraph/chromatic.hpp"

#include "origraph/hom_search.hpp"

namespace origraph {

std::optional<ChromaticWitness> chromatic_witness(const OrientedGraph& g, int cap) {
    if (cap < 1 || cap > kMaxCatalogOrder)
        throw DomainError("chromatic cap must lie in 1.." + std::to_string(kMaxCatalogOrder));
    if (g.order() == 0)
        return ChromaticWitness{0, Tournament(OrientedGraph(0, {})), VertexMap{0, 0, {}}};
    for (int k = 1; k <= cap; ++k) {
        for (const Tournament& t : shared_catalog(k).members()) {
            if (auto hom = find_homomorphism(g, t))
                return ChromaticWitness{k, t, std::move(*hom)};
        }
    }
    return std::nullopt;
}

std::optional<int> oriented_chromatic_number(const OrientedGraph& g, int cap) {
    auto witness = chromatic_witness(g, cap);
    if (!witness)
        return std::nullopt;
    return witness->chi;
}

} // namespace origraph
