#include "origraph/vertex_map.hpp"

#include <charconv>

namespace origraph {

bool is_well_formed(const VertexMap& f) {
    if (f.source_order < 0 || f.target_order < 0)
        return false;
    if (f.image.size() != static_cast<std::size_t>(f.source_order))
        return false;
    for (Vertex t : f.image)
        if (t < 0 || t >= f.target_order)
            return false;
    return true;
}

bool is_homomorphism(const VertexMap& f, const OrientedGraph& source,
                     const OrientedGraph& target) {
    if (f.source_order != source.order() || f.target_order != target.order())
        return false;
    if (!is_well_formed(f))
        return false;
    for (const Arc& a : source.arcs())
        if (!target.has_arc(f(a.from), f(a.to)))
            return false;
    return true;
}

bool is_surjective(const VertexMap& f) {
    std::vector<char> hit(static_cast<std::size_t>(f.target_order), 0);
    for (Vertex t : f.image)
        hit[static_cast<std::size_t>(t)] = 1;
    for (char h : hit)
        if (!h)
            return false;
    return true;
}

VertexMap compose(const VertexMap& outer, const VertexMap& inner) {
    if (inner.target_order != outer.source_order)
        throw DomainError("compose: inner target order " + std::to_string(inner.target_order) +
                          " != outer source order " + std::to_string(outer.source_order));
    VertexMap out{inner.source_order, outer.target_order, {}};
    out.image.reserve(inner.image.size());
    for (Vertex v : inner.image)
        out.image.push_back(outer(v));
    return out;
}

std::string format_map_line(const VertexMap& f) {
    std::string line = "map:";
    for (Vertex t : f.image) {
        line += ' ';
        line += std::to_string(t);
    }
    line += '\n';
    return line;
}

std::vector<Vertex> parse_map_line(std::string_view line) {
    if (!line.empty() && line.back() == '\n')
        line.remove_suffix(1);
    constexpr std::string_view kw = "map:";
    if (!line.starts_with(kw))
        throw ParseError(1, "expected 'map: i0 i1 ...'");
    line.remove_prefix(kw.size());
    std::vector<Vertex> image;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && line[pos] == ' ')
            ++pos;
        if (pos == line.size())
            break;
        std::size_t end = line.find(' ', pos);
        if (end == std::string_view::npos)
            end = line.size();
        Vertex v = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, v);
        if (ec != std::errc() || ptr != line.data() + end)
            throw ParseError(1, "bad map entry '" + std::string(line.substr(pos, end - pos)) + "'");
        image.push_back(v);
        pos = end;
    }
    return image;
}

} // namespace origraph
