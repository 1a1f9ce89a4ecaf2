#include "origraph/colouring.hpp"

namespace origraph {

ColouringReport validate_oriented_colouring(const OrientedGraph& g, const VertexMap& colouring) {
    if (colouring.source_order != g.order() || !is_well_formed(colouring))
        throw DomainError("colouring is not a total map on the graph's vertices");
    const Vertex k = colouring.target_order;

    ColouringReport report;
    // first_arc[a*k + b] = first arc realizing the colour pair (a, b), else sentinel.
    std::vector<Arc> first_arc(static_cast<std::size_t>(k) * k, Arc{-1, -1});
    for (const Arc& arc : g.arcs()) {
        const Vertex a = colouring(arc.from);
        const Vertex b = colouring(arc.to);
        if (a == b) {
            report.violation = ColouringViolation{1, arc, arc};
            return report;
        }
        const Arc& reverse = first_arc[static_cast<std::size_t>(b) * k + a];
        if (reverse.from >= 0) {
            report.violation = ColouringViolation{2, reverse, arc};
            return report;
        }
        Arc& slot = first_arc[static_cast<std::size_t>(a) * k + b];
        if (slot.from < 0)
            slot = arc;
    }

    // Valid: realized pairs form an oriented graph on the colours; orient the
    // untouched pairs low -> high to complete it to a tournament.
    std::vector<Arc> completion_arcs;
    completion_arcs.reserve(static_cast<std::size_t>(k) * (k - 1) / 2);
    for (Vertex a = 0; a < k; ++a) {
        for (Vertex b = a + 1; b < k; ++b) {
            if (first_arc[static_cast<std::size_t>(b) * k + a].from >= 0)
                completion_arcs.push_back({b, a});
            else
                completion_arcs.push_back({a, b});
        }
    }
    report.completion = Tournament(OrientedGraph(k, std::move(completion_arcs)));
    report.homomorphism = colouring;
    return report;
}

} // namespace origraph
