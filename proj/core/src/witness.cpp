#include "origraph/witness.hpp"

#include <fstream>
#include <sstream>

#include "origraph/hom_search.hpp"
#include "origraph/odg.hpp"

namespace origraph {

Tournament cycle_target(int order) {
    if (order < 3 || order > 5)
        throw DomainError("cycle targets exist at orders 3..5");
    static const std::vector<Arc> all = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 0},
                                         {3, 0}, {4, 0}, {1, 3}, {1, 4}, {2, 4}};
    std::vector<Arc> arcs;
    for (const Arc& a : all)
        if (a.from < order && a.to < order)
            arcs.push_back(a);
    return Tournament(OrientedGraph(order, std::move(arcs)));
}

int cycle_chromatic_number(int length) {
    if (length < 3)
        throw DomainError("directed cycles have length at least 3");
    if (length % 3 == 0)
        return 3;
    if (length == 5)
        return 5;
    return 4;
}

Witness base_witness(int girth_target) {
    if (girth_target < 3)
        throw DomainError("girth target must be at least 3");
    const int len = girth_target;
    VertexMap colouring{len, 5, std::vector<Vertex>(static_cast<std::size_t>(len))};
    for (int r = 0; r < len; ++r)
        colouring.image[static_cast<std::size_t>(r)] = r % 3;
    if (len % 3 == 1)
        colouring.image[static_cast<std::size_t>(len - 1)] = 3;
    if (len % 3 == 2) {
        colouring.image[static_cast<std::size_t>(len - 2)] = 3;
        colouring.image[static_cast<std::size_t>(len - 1)] = 4;
    }
    return Witness{directed_cycle(len), cycle_target(5), std::move(colouring), len, 5};
}

Witness cycle_witness(int girth_target) {
    if (girth_target < 3)
        throw DomainError("girth target must be at least 3");
    const int len = girth_target;
    const int chi = cycle_chromatic_number(len);
    if (chi == 5)
        return base_witness(5);

    VertexMap colouring{len, chi, std::vector<Vertex>(static_cast<std::size_t>(len))};
    if (chi == 3) {
        for (int r = 0; r < len; ++r)
            colouring.image[static_cast<std::size_t>(r)] = r % 3;
    } else {
        // len = 3x + 4y with y in {1, 2}: walk the triangle t0t1t2 x times,
        // then the 4-cycle t0t1t2t3 y times.
        const int triangle_laps = (len % 3 == 1) ? (len - 4) / 3 : (len - 8) / 3;
        const int split = 3 * triangle_laps;
        for (int r = 0; r < len; ++r)
            colouring.image[static_cast<std::size_t>(r)] = r < split ? r % 3 : (r - split) % 4;
    }
    return Witness{directed_cycle(len), cycle_target(chi), std::move(colouring), len, chi};
}

Witness extend(const Witness& w) {
    const Vertex m = w.graph.order();
    const Vertex k = w.target.order();

    std::vector<Arc> graph_arcs = w.graph.arcs();
    for (Vertex i = 0; i < m; ++i)
        graph_arcs.push_back({i, m});

    std::vector<Arc> target_arcs = w.target.graph().arcs();
    for (Vertex i = 0; i < k; ++i)
        target_arcs.push_back({i, k});

    VertexMap colouring{m + 1, k + 1, w.colouring.image};
    colouring.image.push_back(k);

    return Witness{OrientedGraph(m + 1, std::move(graph_arcs)),
                   Tournament(OrientedGraph(k + 1, std::move(target_arcs))),
                   std::move(colouring), w.claimed_girth, w.claimed_chi + 1};
}

Witness construct(int chi_target, int girth_target) {
    if (chi_target < 5)
        throw DomainError("constructed witnesses need a chromatic target of at least 5");
    Witness w = cycle_witness(girth_target);
    while (w.claimed_chi < chi_target)
        w = extend(w);
    return w;
}

VerificationReport verify_witness(const Witness& w, bool check_chi) {
    VerificationReport report;

    report.colouring_is_homomorphism = is_homomorphism(w.colouring, w.graph, w.target.graph());
    if (!report.colouring_is_homomorphism) {
        std::string why = "colouring is not a homomorphism";
        if (w.colouring.source_order == w.graph.order() && is_well_formed(w.colouring) &&
            w.colouring.target_order == w.target.order()) {
            for (const Arc& a : w.graph.arcs()) {
                if (!w.target.graph().has_arc(w.colouring(a.from), w.colouring(a.to))) {
                    why += ": arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                           ") lands on missing target arc (" +
                           std::to_string(w.colouring(a.from)) + "," +
                           std::to_string(w.colouring(a.to)) + ")";
                    break;
                }
            }
        }
        report.failures.push_back(why);
    }

    report.target_order_matches = w.target.order() == w.claimed_chi;
    if (!report.target_order_matches)
        report.failures.push_back("target order " + std::to_string(w.target.order()) +
                                  " != claimed chromatic number " +
                                  std::to_string(w.claimed_chi));

    const auto g = girth(w.graph);
    report.girth_matches = g.has_value() && *g == w.claimed_girth;
    if (!report.girth_matches)
        report.failures.push_back("girth is " + (g ? std::to_string(*g) : std::string("acyclic")) +
                                  ", claimed " + std::to_string(w.claimed_girth));

    if (check_chi) {
        bool exact = true;
        if (w.claimed_chi > 1) {
            const int below = w.claimed_chi - 1;
            if (below > kMaxCatalogOrder)
                throw DomainError("chromatic check above catalog cap " +
                                  std::to_string(kMaxCatalogOrder));
            for (const Tournament& t : shared_catalog(below).members()) {
                if (auto hom = find_homomorphism(w.graph, t)) {
                    exact = false;
                    std::ostringstream why;
                    why << "graph maps into an order-" << below
                        << " tournament (canonical code " << std::hex << tournament_code(t)
                        << "), colouring" << format_map_line(*hom);
                    std::string text = why.str();
                    if (!text.empty() && text.back() == '\n')
                        text.pop_back();
                    report.failures.push_back(text);
                    break;
                }
            }
        }
        report.chi_is_exact = exact;
    }
    return report;
}

void write_witness_bundle(const std::filesystem::path& prefix, const Witness& w) {
    auto with_suffix = [&](const char* suffix) {
        std::filesystem::path p = prefix;
        p += suffix;
        return p;
    };
    write_odg_file(with_suffix(".graph.odg"), w.graph);
    write_odg_file(with_suffix(".target.odg"), w.target.graph());
    std::ofstream map_out(with_suffix(".map"));
    if (!map_out)
        throw Error("cannot write " + with_suffix(".map").string());
    map_out << format_map_line(w.colouring);
}

Witness read_witness_bundle(const std::filesystem::path& prefix) {
    auto with_suffix = [&](const char* suffix) {
        std::filesystem::path p = prefix;
        p += suffix;
        return p;
    };
    OrientedGraph graph = read_odg_file(with_suffix(".graph.odg"));
    Tournament target(read_odg_file(with_suffix(".target.odg")));

    std::ifstream map_in(with_suffix(".map"));
    if (!map_in)
        throw Error("cannot open " + with_suffix(".map").string());
    std::string line;
    std::getline(map_in, line);
    VertexMap colouring{graph.order(), target.order(), parse_map_line(line)};
    if (!is_well_formed(colouring))
        throw DomainError("bundle map does not cover the graph's vertices");

    const auto g = girth(graph);
    if (!g)
        throw DomainError("bundle graph is acyclic; witnesses carry a finite girth");
    const int chi = target.order();
    return Witness{std::move(graph), std::move(target), std::move(colouring), *g, chi};
}

} // namespace origraph
