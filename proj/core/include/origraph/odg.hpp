#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "origraph/graph.hpp"

namespace origraph {

// ODG text format:
//
//   # optional comment lines, anywhere
//   digraph <order>
//   <u> <v>
//   ...
//
// One arc per line, 0-based decimal ids separated by a single space. Blank
// lines are skipped on input. serialize_odg emits arcs sorted
// lexicographically and ends with a newline; parse(serialize(g)) == g.
OrientedGraph parse_odg(std::string_view text);
std::string serialize_odg(const OrientedGraph& g);

// Graphviz export, write-only.
std::string to_dot(const OrientedGraph& g);

OrientedGraph read_odg_file(const std::filesystem::path& path);
void write_odg_file(const std::filesystem::path& path, const OrientedGraph& g);

} // namespace origraph
