#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "origraph/errors.hpp"

namespace origraph {

using Vertex = int;

struct Arc {
    Vertex from = 0;
    Vertex to = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Loopless digraph with at most one arc per vertex pair. Vertices are the
// ids 0..order-1; the arc list is kept sorted lexicographically and
// deduplicated. Immutable after construction.
class OrientedGraph {
public:
    OrientedGraph() = default;

    // Validates and normalizes the arc list. Throws GraphError on a loop,
    // an opposite arc pair, or an endpoint >= order.
    OrientedGraph(Vertex order, std::vector<Arc> arcs);

    Vertex order() const noexcept { return order_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }

    bool has_arc(Vertex from, Vertex to) const noexcept;

    // Neighbour lists are sorted ascending.
    std::span<const Vertex> out_neighbours(Vertex v) const noexcept;
    std::span<const Vertex> in_neighbours(Vertex v) const noexcept;

    int out_degree(Vertex v) const noexcept { return static_cast<int>(out_neighbours(v).size()); }
    int in_degree(Vertex v) const noexcept { return static_cast<int>(in_neighbours(v).size()); }
    int degree(Vertex v) const noexcept { return out_degree(v) + in_degree(v); }

    // Copy with the given arcs deleted (arcs absent from the graph are ignored).
    OrientedGraph without_arcs(const std::vector<Arc>& removed) const;

    // Same order and the arc set is a subset of host's.
    bool is_subgraph_of(const OrientedGraph& host) const;

    friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
        return a.order_ == b.order_ && a.arcs_ == b.arcs_;
    }

private:
    void build_adjacency();

    Vertex order_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::int32_t> out_start_;
    std::vector<Vertex> out_adj_;
    std::vector<std::int32_t> in_start_;
    std::vector<Vertex> in_adj_;
};

// Exactly one arc per unordered vertex pair.
bool is_tournament(const OrientedGraph& g);

// OrientedGraph that is a tournament; validated once at construction.
class Tournament {
public:
    explicit Tournament(OrientedGraph g);

    const OrientedGraph& graph() const noexcept { return g_; }
    operator const OrientedGraph&() const noexcept { return g_; }
    Vertex order() const noexcept { return g_.order(); }

    friend bool operator==(const Tournament& a, const Tournament& b) { return a.g_ == b.g_; }

private:
    OrientedGraph g_;
};

// Directed cycle stored in canonical rotation: the minimum vertex id first.
struct Cycle {
    std::vector<Vertex> vertices;

    int length() const noexcept { return static_cast<int>(vertices.size()); }

    friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Length of a shortest directed cycle; nullopt when the graph is acyclic.
std::optional<int> girth(const OrientedGraph& g);

// Every directed cycle of length < length_bound, one per rotation class,
// ordered by canonical start vertex and then by the DFS that found them
// (out-neighbours ascending). Requires length_bound >= 3.
std::vector<Cycle> short_cycles(const OrientedGraph& g, int length_bound);

// The directed cycle v0 -> v1 -> ... -> v_{length-1} -> v0. Requires length >= 3.
OrientedGraph directed_cycle(int length);

} // namespace origraph
