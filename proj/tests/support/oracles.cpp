#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace oracles {

namespace {

// Enumerate every simple directed cycle as a canonically rotated vertex
// sequence (minimum vertex first), via path extension over vertices larger
// than the start.
void collect_cycles(const OrientedGraph& g, std::vector<std::vector<Vertex>>& out) {
    std::vector<Vertex> path;
    std::vector<char> used(g.order(), 0);
    auto grow = [&](auto&& self, Vertex u) -> void {
        for (Vertex w : g.out_neighbours(u)) {
            if (w == path.front()) {
                if (path.size() >= 3)
                    out.push_back(path);
            } else if (w > path.front() && !used[w]) {
                used[w] = 1;
                path.push_back(w);
                self(self, w);
                path.pop_back();
                used[w] = 0;
            }
        }
    };
    for (Vertex s = 0; s < g.order(); ++s) {
        path.assign(1, s);
        used[s] = 1;
        grow(grow, s);
        used[s] = 0;
    }
}

bool isomorphic_by_permutation(const OrientedGraph& a, const OrientedGraph& b) {
    const int n = a.order();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (const Arc& arc : a.arcs())
            if (!b.has_arc(perm[arc.from], perm[arc.to])) {
                match = false;
                break;
            }
        if (match)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

std::optional<int> girth_by_enumeration(const OrientedGraph& g) {
    std::vector<std::vector<Vertex>> cycles;
    collect_cycles(g, cycles);
    if (cycles.empty())
        return std::nullopt;
    std::size_t best = cycles.front().size();
    for (const auto& c : cycles)
        best = std::min(best, c.size());
    return static_cast<int>(best);
}

std::size_t short_cycle_count_by_enumeration(const OrientedGraph& g, int length_bound) {
    std::vector<std::vector<Vertex>> cycles;
    collect_cycles(g, cycles);
    return static_cast<std::size_t>(
        std::count_if(cycles.begin(), cycles.end(), [&](const std::vector<Vertex>& c) {
            return static_cast<int>(c.size()) < length_bound;
        }));
}

std::vector<VertexMap> homs_by_exhaustion(const OrientedGraph& d, const OrientedGraph& c) {
    std::vector<VertexMap> out;
    const int n = d.order();
    const int k = c.order();
    if (n == 0) {
        out.push_back(VertexMap{0, k, {}});
        return out;
    }
    if (k == 0)
        return out;
    std::vector<Vertex> image(n, 0);
    while (true) {
        bool hom = true;
        for (const Arc& a : d.arcs())
            if (!c.has_arc(image[a.from], image[a.to])) {
                hom = false;
                break;
            }
        if (hom)
            out.push_back(VertexMap{n, k, image});
        int pos = n - 1;
        while (pos >= 0 && image[pos] == k - 1)
            image[pos--] = 0;
        if (pos < 0)
            break;
        ++image[pos];
    }
    return out;
}

bool hom_exists_by_exhaustion(const OrientedGraph& d, const OrientedGraph& c) {
    return !homs_by_exhaustion(d, c).empty();
}

std::vector<OrientedGraph> all_labeled_tournaments(int k) {
    std::vector<OrientedGraph> out;
    const int pairs = k * (k - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        std::vector<Arc> arcs;
        int bit = 0;
        for (Vertex i = 0; i < k; ++i)
            for (Vertex j = i + 1; j < k; ++j, ++bit)
                arcs.push_back((mask >> bit) & 1 ? Arc{i, j} : Arc{j, i});
        out.emplace_back(k, std::move(arcs));
    }
    return out;
}

std::size_t tournament_classes_by_rejection(int k) {
    std::map<std::vector<int>, std::vector<OrientedGraph>> reps_by_degrees;
    std::size_t classes = 0;
    for (OrientedGraph& t : all_labeled_tournaments(k)) {
        std::vector<int> degrees(k);
        for (Vertex v = 0; v < k; ++v)
            degrees[v] = t.out_degree(v);
        std::sort(degrees.begin(), degrees.end());
        auto& bucket = reps_by_degrees[degrees];
        const bool known = std::any_of(bucket.begin(), bucket.end(), [&](const OrientedGraph& rep) {
            return isomorphic_by_permutation(t, rep);
        });
        if (!known) {
            bucket.push_back(std::move(t));
            ++classes;
        }
    }
    return classes;
}

std::optional<int> chi_by_labeled_exhaustion(const OrientedGraph& g, int cap) {
    if (g.order() == 0)
        return 0;
    for (int k = 1; k <= cap; ++k)
        for (const OrientedGraph& t : all_labeled_tournaments(k))
            if (hom_exists_by_exhaustion(g, t))
                return k;
    return std::nullopt;
}

std::optional<int> cycle_chi_by_walk_counting(int cycle_length, int cap) {
    for (int k = 1; k <= cap; ++k) {
        for (const OrientedGraph& t : all_labeled_tournaments(k)) {
            // trace(A^length) with 64-bit entries; at cap <= 4 and lengths
            // in the teens these stay tiny.
            std::vector<std::uint64_t> power(k * k, 0), adj(k * k, 0);
            for (const Arc& a : t.arcs())
                adj[a.from * k + a.to] = 1;
            for (int i = 0; i < k; ++i)
                power[i * k + i] = 1;
            for (int step = 0; step < cycle_length; ++step) {
                std::vector<std::uint64_t> next(k * k, 0);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        for (int m = 0; m < k; ++m)
                            next[i * k + m] += power[i * k + j] * adj[j * k + m];
                power = std::move(next);
            }
            std::uint64_t trace = 0;
            for (int i = 0; i < k; ++i)
                trace += power[i * k + i];
            if (trace > 0)
                return k;
        }
    }
    return std::nullopt;
}

std::vector<OrientedGraph> all_oriented_graphs(int order) {
    std::vector<OrientedGraph> out;
    const int pairs = order * (order - 1) / 2;
    std::vector<int> state(pairs, 0); // 0 absent, 1 forward, 2 backward
    while (true) {
        std::vector<Arc> arcs;
        int slot = 0;
        for (Vertex i = 0; i < order; ++i)
            for (Vertex j = i + 1; j < order; ++j, ++slot) {
                if (state[slot] == 1)
                    arcs.push_back({i, j});
                else if (state[slot] == 2)
                    arcs.push_back({j, i});
            }
        out.emplace_back(order, std::move(arcs));
        int pos = pairs - 1;
        while (pos >= 0 && state[pos] == 2)
            state[pos--] = 0;
        if (pos < 0)
            break;
        ++state[pos];
    }
    return out;
}

OrientedGraph random_oriented_graph(int order, double arc_prob, std::mt19937_64& gen) {
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < order; ++i) {
        for (Vertex j = i + 1; j < order; ++j) {
            const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
            if (u >= arc_prob)
                continue;
            if (gen() & 1)
                arcs.push_back({i, j});
            else
                arcs.push_back({j, i});
        }
    }
    return OrientedGraph(order, std::move(arcs));
}

} // namespace oracles
