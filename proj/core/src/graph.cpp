#include "origraph/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace origraph {

namespace {

std::string arc_text(const Arc& a) {
    return "(" + std::to_string(a.from) + "," + std::to_string(a.to) + ")";
}

} // namespace

OrientedGraph::OrientedGraph(Vertex order, std::vector<Arc> arcs)
    : order_(order), arcs_(std::move(arcs)) {
    if (order_ < 0)
        throw DomainError("vertex count must be non-negative");
    for (const Arc& a : arcs_) {
        if (a.from < 0 || a.from >= order_ || a.to < 0 || a.to >= order_)
            throw GraphError(GraphError::Kind::VertexOutOfRange,
                             "arc " + arc_text(a) + " has an endpoint outside 0.." +
                                 std::to_string(order_ - 1));
        if (a.from == a.to)
            throw GraphError(GraphError::Kind::LoopArc, "loop arc " + arc_text(a));
    }
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    for (const Arc& a : arcs_) {
        if (std::binary_search(arcs_.begin(), arcs_.end(), Arc{a.to, a.from}))
            throw GraphError(GraphError::Kind::OppositeArcs,
                             "both " + arc_text(a) + " and " + arc_text({a.to, a.from}) +
                                 " are present");
    }
    build_adjacency();
}

void OrientedGraph::build_adjacency() {
    out_start_.assign(order_ + 1, 0);
    in_start_.assign(order_ + 1, 0);
    for (const Arc& a : arcs_) {
        ++out_start_[a.from + 1];
        ++in_start_[a.to + 1];
    }
    for (Vertex v = 0; v < order_; ++v) {
        out_start_[v + 1] += out_start_[v];
        in_start_[v + 1] += in_start_[v];
    }
    out_adj_.resize(arcs_.size());
    in_adj_.resize(arcs_.size());
    std::vector<std::int32_t> out_pos(out_start_.begin(), out_start_.end() - 1);
    std::vector<std::int32_t> in_pos(in_start_.begin(), in_start_.end() - 1);
    for (const Arc& a : arcs_) {
        out_adj_[out_pos[a.from]++] = a.to;
        in_adj_[in_pos[a.to]++] = a.from;
    }
    // arcs_ is sorted, so each out list is ascending; in lists need a sort.
    for (Vertex v = 0; v < order_; ++v)
        std::sort(in_adj_.begin() + in_start_[v], in_adj_.begin() + in_start_[v + 1]);
}

bool OrientedGraph::has_arc(Vertex from, Vertex to) const noexcept {
    if (from < 0 || from >= order_ || to < 0 || to >= order_)
        return false;
    auto list = out_neighbours(from);
    return std::binary_search(list.begin(), list.end(), to);
}

std::span<const Vertex> OrientedGraph::out_neighbours(Vertex v) const noexcept {
    return {out_adj_.data() + out_start_[v],
            static_cast<std::size_t>(out_start_[v + 1] - out_start_[v])};
}

std::span<const Vertex> OrientedGraph::in_neighbours(Vertex v) const noexcept {
    return {in_adj_.data() + in_start_[v],
            static_cast<std::size_t>(in_start_[v + 1] - in_start_[v])};
}

OrientedGraph OrientedGraph::without_arcs(const std::vector<Arc>& removed) const {
    std::vector<Arc> drop(removed);
    std::sort(drop.begin(), drop.end());
    std::vector<Arc> kept;
    kept.reserve(arcs_.size());
    for (const Arc& a : arcs_)
        if (!std::binary_search(drop.begin(), drop.end(), a))
            kept.push_back(a);
    return OrientedGraph(order_, std::move(kept));
}

bool OrientedGraph::is_subgraph_of(const OrientedGraph& host) const {
    if (order_ != host.order())
        return false;
    return std::all_of(arcs_.begin(), arcs_.end(),
                       [&](const Arc& a) { return host.has_arc(a.from, a.to); });
}

bool is_tournament(const OrientedGraph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    if (g.arc_count() != n * (n - 1) / 2)
        return false;
    // No pair carries two arcs (class invariant), so the count being exactly
    // one arc per pair means every pair is covered.
    return true;
}

Tournament::Tournament(OrientedGraph g) : g_(std::move(g)) {
    if (!is_tournament(g_))
        throw DomainError("graph on " + std::to_string(g_.order()) +
                          " vertices with " + std::to_string(g_.arc_count()) +
                          " arcs is not a tournament");
}

std::optional<int> girth(const OrientedGraph& g) {
    const Vertex n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n);
    std::vector<Vertex> queue(n);
    for (Vertex s = 0; s < n && best > 3; ++s) {
        // BFS from s; an arc u -> s closes a cycle of length dist[u] + 1.
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        queue[0] = s;
        std::size_t head = 0, tail = 1;
        while (head < tail) {
            Vertex u = queue[head++];
            if (dist[u] + 1 >= best)
                break;
            for (Vertex w : g.out_neighbours(u)) {
                if (w == s) {
                    best = std::min(best, dist[u] + 1);
                    break;
                }
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue[tail++] = w;
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max())
        return std::nullopt;
    return best;
}

namespace {

struct CycleDfs {
    const OrientedGraph& g;
    int max_len;
    std::vector<Vertex> path;
    std::vector<char> on_path;
    std::vector<Cycle>& found;

    void run(Vertex u) {
        const Vertex s = path.front();
        for (Vertex w : g.out_neighbours(u)) {
            if (w == s) {
                if (path.size() >= 3)
                    found.push_back(Cycle{path});
                continue;
            }
            if (w > s && !on_path[w] && static_cast<int>(path.size()) < max_len) {
                on_path[w] = 1;
                path.push_back(w);
                run(w);
                path.pop_back();
                on_path[w] = 0;
            }
        }
    }
};

} // namespace

std::vector<Cycle> short_cycles(const OrientedGraph& g, int length_bound) {
    if (length_bound < 3)
        throw DomainError("cycle length bound must be at least 3");
    std::vector<Cycle> found;
    const int max_len = length_bound - 1;
    if (max_len < 3)
        return found;
    CycleDfs dfs{g, max_len, {}, std::vector<char>(g.order(), 0), found};
    for (Vertex s = 0; s < g.order(); ++s) {
        dfs.path.assign(1, s);
        dfs.on_path[s] = 1;
        dfs.run(s);
        dfs.on_path[s] = 0;
    }
    return found;
}

OrientedGraph directed_cycle(int length) {
    if (length < 3)
        throw DomainError("a directed cycle needs at least 3 vertices");
    std::vector<Arc> arcs;
    arcs.reserve(length);
    for (Vertex v = 0; v < length; ++v)
        arcs.push_back({v, (v + 1) % length});
    return OrientedGraph(length, std::move(arcs));
}

} // namespace origraph
