#include "origraph/odg.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace origraph {

namespace {

bool parse_vertex(std::string_view token, Vertex& out) {
    if (token.empty())
        return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

} // namespace

OrientedGraph parse_odg(std::string_view text) {
    std::size_t line_no = 0;
    bool have_header = false;
    Vertex order = 0;
    std::vector<Arc> arcs;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;
        if (!have_header) {
            constexpr std::string_view kw = "digraph ";
            if (!line.starts_with(kw))
                throw ParseError(line_no, "expected header 'digraph <order>'");
            if (!parse_vertex(line.substr(kw.size()), order) || order < 0)
                throw ParseError(line_no, "bad vertex count in header");
            have_header = true;
            continue;
        }
        std::size_t space = line.find(' ');
        if (space == std::string_view::npos)
            throw ParseError(line_no, "expected '<u> <v>'");
        Vertex u = 0, v = 0;
        if (!parse_vertex(line.substr(0, space), u) || !parse_vertex(line.substr(space + 1), v))
            throw ParseError(line_no, "bad arc '" + std::string(line) + "'");
        arcs.push_back({u, v});
    }
    if (!have_header)
        throw ParseError(line_no, "missing 'digraph <order>' header");
    return OrientedGraph(order, std::move(arcs));
}

std::string serialize_odg(const OrientedGraph& g) {
    std::string out = "digraph " + std::to_string(g.order()) + "\n";
    for (const Arc& a : g.arcs()) {
        out += std::to_string(a.from);
        out += ' ';
        out += std::to_string(a.to);
        out += '\n';
    }
    return out;
}

std::string to_dot(const OrientedGraph& g) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            out << "  " << v << ";\n";
    for (const Arc& a : g.arcs())
        out << "  " << a.from << " -> " << a.to << ";\n";
    out << "}\n";
    return out.str();
}

OrientedGraph read_odg_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_odg(buf.str());
}

void write_odg_file(const std::filesystem::path& path, const OrientedGraph& g) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path.string());
    out << serialize_odg(g);
}

} // namespace origraph
