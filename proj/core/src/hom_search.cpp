#include "origraph/hom_search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>

namespace origraph {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

struct TargetTables {
    Vertex order = 0;
    Mask full = 0;
    std::vector<Mask> out_mask; // out_mask[t] = targets reachable from t
    std::vector<Mask> in_mask;  // in_mask[t]  = targets with an arc into t

    explicit TargetTables(const OrientedGraph& target) : order(target.order()) {
        if (order > 64)
            throw DomainError("homomorphism targets are capped at 64 vertices, got " +
                              std::to_string(order));
        full = (order == 64) ? ~Mask{0} : (bit(order) - 1);
        out_mask.assign(order, 0);
        in_mask.assign(order, 0);
        for (const Arc& a : target.arcs()) {
            out_mask[a.from] |= bit(a.to);
            in_mask[a.to] |= bit(a.from);
        }
    }

    Mask union_out(Mask values) const {
        Mask u = 0;
        while (values) {
            u |= out_mask[std::countr_zero(values)];
            values &= values - 1;
        }
        return u;
    }

    Mask union_in(Mask values) const {
        Mask u = 0;
        while (values) {
            u |= in_mask[std::countr_zero(values)];
            values &= values - 1;
        }
        return u;
    }
};

// One search over a fixed variable order. Domains are revised to arc
// consistency after every assignment; a trail records overwritten domains
// so backtracking is an O(changes) rollback.
class Searcher {
public:
    Searcher(const OrientedGraph& source, const TargetTables& target, bool injective)
        : src_(source), tgt_(target), injective_(injective),
          dom_(source.order(), target.full) {}

    // Returns false when the root revision already proves unsatisfiability.
    bool make_root_consistent() {
        std::vector<Vertex> all(src_.order());
        std::iota(all.begin(), all.end(), 0);
        return propagate(all);
    }

    // on_solution receives the image vector; return false to stop the search.
    // Returns false iff a callback asked to stop.
    bool run(const std::vector<Vertex>& order,
             const std::function<bool(const std::vector<Vertex>&)>& on_solution) {
        order_ = &order;
        on_solution_ = &on_solution;
        image_.assign(src_.order(), -1);
        return descend(0);
    }

    Mask domain(Vertex v) const { return dom_[v]; }

private:
    bool descend(std::size_t level) {
        if (level == order_->size()) {
            for (Vertex v = 0; v < src_.order(); ++v)
                image_[v] = std::countr_zero(dom_[v]);
            return (*on_solution_)(image_);
        }
        const Vertex v = (*order_)[level];
        Mask candidates = dom_[v];
        while (candidates) {
            const int t = std::countr_zero(candidates);
            candidates &= candidates - 1;
            const std::size_t mark = trail_.size();
            set_domain(v, bit(t));
            bool consistent = true;
            if (injective_) {
                for (Vertex w = 0; w < src_.order() && consistent; ++w) {
                    if (w == v || !(dom_[w] & bit(t)))
                        continue;
                    set_domain(w, dom_[w] & ~bit(t));
                    consistent = dom_[w] != 0;
                }
            }
            if (consistent && propagate({v})) {
                if (!descend(level + 1))
                    return false;
            }
            rollback(mark);
        }
        return true;
    }

    bool propagate(std::vector<Vertex> queue) {
        std::vector<char> queued(src_.order(), 0);
        for (Vertex v : queue)
            queued[v] = 1;
        while (!queue.empty()) {
            const Vertex x = queue.back();
            queue.pop_back();
            queued[x] = 0;
            for (Vertex w : src_.out_neighbours(x))
                if (!revise(w, tgt_.union_out(dom_[x]), queue, queued))
                    return false;
            for (Vertex u : src_.in_neighbours(x))
                if (!revise(u, tgt_.union_in(dom_[x]), queue, queued))
                    return false;
        }
        return true;
    }

    bool revise(Vertex w, Mask allowed, std::vector<Vertex>& queue, std::vector<char>& queued) {
        const Mask next = dom_[w] & allowed;
        if (next == dom_[w])
            return true;
        set_domain(w, next);
        if (next == 0)
            return false;
        if (!queued[w]) {
            queued[w] = 1;
            queue.push_back(w);
        }
        return true;
    }

    void set_domain(Vertex v, Mask value) {
        trail_.push_back({v, dom_[v]});
        dom_[v] = value;
    }

    void rollback(std::size_t mark) {
        while (trail_.size() > mark) {
            dom_[trail_.back().first] = trail_.back().second;
            trail_.pop_back();
        }
    }

    const OrientedGraph& src_;
    const TargetTables& tgt_;
    bool injective_;
    std::vector<Mask> dom_;
    std::vector<std::pair<Vertex, Mask>> trail_;
    std::vector<Vertex> image_;
    const std::vector<Vertex>* order_ = nullptr;
    const std::function<bool(const std::vector<Vertex>&)>* on_solution_ = nullptr;
};

std::vector<std::vector<Vertex>> weak_components(const OrientedGraph& g) {
    std::vector<int> comp(g.order(), -1);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0)
            continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.assign(1, s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (Vertex w : g.out_neighbours(u))
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            for (Vertex w : g.in_neighbours(u))
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

} // namespace

std::optional<VertexMap> find_homomorphism(const OrientedGraph& source,
                                           const OrientedGraph& target) {
    TargetTables tables(target);
    if (source.order() == 0)
        return VertexMap{0, target.order(), {}};
    if (target.order() == 0)
        return std::nullopt;

    Searcher searcher(source, tables, /*injective=*/false);
    if (!searcher.make_root_consistent())
        return std::nullopt;

    VertexMap result{source.order(), target.order(),
                     std::vector<Vertex>(static_cast<std::size_t>(source.order()), -1)};
    for (const auto& component : weak_components(source)) {
        std::vector<Vertex> order(component);
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
            return source.degree(a) > source.degree(b);
        });
        bool found = false;
        searcher.run(order, [&](const std::vector<Vertex>& image) {
            for (Vertex v : component)
                result.image[static_cast<std::size_t>(v)] = image[static_cast<std::size_t>(v)];
            found = true;
            return false; // first solution of this component suffices
        });
        if (!found)
            return std::nullopt;
    }
    return result;
}

std::vector<VertexMap> enumerate_homomorphisms(const OrientedGraph& source,
                                               const OrientedGraph& target,
                                               std::optional<std::size_t> limit) {
    TargetTables tables(target);
    std::vector<VertexMap> out;
    if (limit && *limit == 0)
        return out;
    if (source.order() == 0) {
        out.push_back(VertexMap{0, target.order(), {}});
        return out;
    }
    if (target.order() == 0)
        return out;

    Searcher searcher(source, tables, /*injective=*/false);
    if (!searcher.make_root_consistent())
        return out;

    std::vector<Vertex> order(source.order());
    std::iota(order.begin(), order.end(), 0);
    searcher.run(order, [&](const std::vector<Vertex>& image) {
        out.push_back(VertexMap{source.order(), target.order(), image});
        return !limit || out.size() < *limit;
    });
    return out;
}

std::vector<VertexMap> automorphisms(const OrientedGraph& g) {
    TargetTables tables(g);
    std::vector<VertexMap> out;
    if (g.order() == 0) {
        out.push_back(VertexMap{0, 0, {}});
        return out;
    }

    Searcher searcher(g, tables, /*injective=*/true);
    if (!searcher.make_root_consistent())
        return out;

    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    searcher.run(order, [&](const std::vector<Vertex>& image) {
        // Injective endomorphism of a finite graph onto itself preserves the
        // arc count, hence reflects arcs: it is an automorphism.
        out.push_back(VertexMap{g.order(), g.order(), image});
        return true;
    });
    return out;
}

bool is_core(const OrientedGraph& g) {
    TargetTables tables(g);
    if (g.order() == 0)
        return true;

    Searcher searcher(g, tables, /*injective=*/false);
    if (!searcher.make_root_consistent())
        return true; // no endomorphism at all cannot happen (identity), defensive

    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    bool core = true;
    searcher.run(order, [&](const std::vector<Vertex>& image) {
        std::vector<char> hit(image.size(), 0);
        for (Vertex t : image) {
            if (hit[static_cast<std::size_t>(t)]) {
                core = false;
                return false;
            }
            hit[static_cast<std::size_t>(t)] = 1;
        }
        return true;
    });
    return core;
}

bool is_pointed(const OrientedGraph& c, const OrientedGraph& d) {
    const auto homs = enumerate_homomorphisms(d, c);
    // Two colourings at Hamming distance one exist iff some colouring admits
    // a valid single-vertex rewrite, which needs only the arcs at that vertex.
    for (const VertexMap& h : homs) {
        for (Vertex v = 0; v < d.order(); ++v) {
            for (Vertex t = 0; t < c.order(); ++t) {
                if (t == h(v))
                    continue;
                bool ok = true;
                for (Vertex w : d.out_neighbours(v))
                    if (!c.has_arc(t, h(w))) {
                        ok = false;
                        break;
                    }
                if (ok)
                    for (Vertex u : d.in_neighbours(v))
                        if (!c.has_arc(h(u), t)) {
                            ok = false;
                            break;
                        }
                if (ok)
                    return false;
            }
        }
    }
    return true;
}

bool is_uniquely_colourable(const OrientedGraph& d, const OrientedGraph& c) {
    const auto homs = enumerate_homomorphisms(d, c);
    if (homs.empty())
        return false;
    if (std::none_of(homs.begin(), homs.end(), [](const VertexMap& h) { return is_surjective(h); }))
        return false;
    const auto auts = automorphisms(c);
    const VertexMap& base = homs.front();
    for (const VertexMap& h : homs) {
        bool in_orbit = std::any_of(auts.begin(), auts.end(), [&](const VertexMap& a) {
            return compose(a, base) == h;
        });
        if (!in_orbit)
            return false;
    }
    return true;
}

} // namespace origraph
