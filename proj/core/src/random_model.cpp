#include "origraph/random_model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "origraph/odg.hpp"

namespace origraph {

VertexMap BlowUpGraph::projection() const {
    VertexMap psi{graph.order(), base.order(), {}};
    psi.image.reserve(static_cast<std::size_t>(graph.order()));
    for (Vertex x = 0; x < graph.order(); ++x)
        psi.image.push_back(part_of(x));
    return psi;
}

BlowUpGraph blow_up(const OrientedGraph& base, int part_size) {
    if (part_size < 1)
        throw DomainError("part size must be at least 1");
    const Vertex n = part_size;
    std::vector<Arc> arcs;
    arcs.reserve(base.arc_count() * static_cast<std::size_t>(n) * n);
    for (const Arc& a : base.arcs())
        for (Vertex x = a.from * n; x < (a.from + 1) * n; ++x)
            for (Vertex y = a.to * n; y < (a.to + 1) * n; ++y)
                arcs.push_back({x, y});
    return BlowUpGraph{base, part_size, OrientedGraph(base.order() * n, std::move(arcs))};
}

double SampleParams::arc_probability() const {
    return std::pow(static_cast<double>(part_size), epsilon - 1.0);
}

double SampleParams::default_epsilon(int girth_target) {
    return 1.0 / (8.0 * girth_target);
}

void SampleParams::validate() const {
    if (girth_target < 3)
        throw DomainError("girth target must be at least 3");
    if (!(epsilon > 0.0) || !(epsilon < 1.0 / (4.0 * girth_target)))
        throw DomainError("epsilon must lie strictly between 0 and 1/(4*girth_target)");
    if (colour_bound < 1)
        throw DomainError("colour bound must be at least 1");
    if (part_size < colour_bound)
        throw DomainError("part size must be at least the colour bound");
}

OrientedGraph sample(const BlowUpGraph& blowup, double arc_probability, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<Arc> kept;
    for (const Arc& a : blowup.graph.arcs()) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        if (u < arc_probability)
            kept.push_back(a);
    }
    return OrientedGraph(blowup.graph.order(), std::move(kept));
}

OrientedGraph sample(const SampleParams& params) {
    params.validate();
    return sample(blow_up(params.base, params.part_size), params.arc_probability(), params.seed);
}

DestroyResult destroy_short_cycles(const OrientedGraph& g, int girth_target) {
    DestroyResult result;
    result.graph = g;
    std::vector<char> endpoint_used(static_cast<std::size_t>(g.order()), 0);

    while (true) {
        const auto cycles = short_cycles(result.graph, girth_target);
        if (result.rounds == 0)
            result.short_cycles_before = cycles.size();
        if (cycles.empty())
            break;
        ++result.rounds;

        std::vector<Arc> picked;
        auto already_hit = [&](const Cycle& c) {
            for (std::size_t i = 0; i < c.vertices.size(); ++i) {
                const Arc a{c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]};
                if (std::find(picked.begin(), picked.end(), a) != picked.end())
                    return true;
            }
            return false;
        };
        for (const Cycle& c : cycles) {
            if (already_hit(c))
                continue;
            const std::size_t len = c.vertices.size();
            std::size_t chosen = 0;
            bool found_free = false;
            for (std::size_t i = 0; i < len; ++i) {
                const Vertex u = c.vertices[i];
                const Vertex v = c.vertices[(i + 1) % len];
                if (!endpoint_used[u] && !endpoint_used[v]) {
                    chosen = i;
                    found_free = true;
                    break;
                }
            }
            const Arc pick{c.vertices[chosen], c.vertices[(chosen + 1) % len]};
            if (!found_free)
                result.matching = false;
            endpoint_used[static_cast<std::size_t>(pick.from)] = 1;
            endpoint_used[static_cast<std::size_t>(pick.to)] = 1;
            picked.push_back(pick);
        }
        result.graph = result.graph.without_arcs(picked);
        result.removed.insert(result.removed.end(), picked.begin(), picked.end());
    }
    std::sort(result.removed.begin(), result.removed.end());
    return result;
}

SampleOutcome run_pipeline(const SampleParams& params) {
    params.validate();
    const BlowUpGraph blowup = blow_up(params.base, params.part_size);
    const OrientedGraph sampled = sample(blowup, params.arc_probability(), params.seed);
    DestroyResult destroyed = destroy_short_cycles(sampled, params.girth_target);

    SampleOutcome outcome{std::move(destroyed.graph), blowup.projection(),
                          std::move(destroyed.removed), destroyed.short_cycles_before,
                          destroyed.matching, destroyed.rounds};

    // Hard postconditions, never statistical.
    if (auto g = girth(outcome.d_star); g && *g < params.girth_target)
        throw std::logic_error("pipeline produced girth below the target");
    if (!is_homomorphism(outcome.psi, outcome.d_star, params.base) ||
        !is_surjective(outcome.psi))
        throw std::logic_error("pipeline projection is not a surjective homomorphism");
    return outcome;
}

std::string serialize_outcome(const SampleOutcome& outcome) {
    std::ostringstream out;
    out << serialize_odg(outcome.d_star);
    out << format_map_line(outcome.psi);
    out << "removed:";
    for (const Arc& a : outcome.removed)
        out << " (" << a.from << "," << a.to << ")";
    out << "\nshort_cycle_count: " << outcome.short_cycle_count;
    out << "\nmatching_achieved: " << (outcome.matching_achieved ? 1 : 0);
    out << "\nremoval_rounds: " << outcome.removal_rounds << "\n";
    return out.str();
}

} // namespace origraph
