#include "origraph/tournaments.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace origraph {

namespace {

int pair_count(int order) { return order * (order - 1) / 2; }

// Known isomorphism-class counts for orders 1..8; used to certify cache files.
constexpr std::array<std::size_t, kMaxCatalogOrder> kClassCounts = {1, 1, 2, 4, 12, 56, 456, 6880};

struct Canonicalizer {
    int k;
    std::array<std::array<unsigned char, 11>, 11> adj{};
    std::array<int, 11> chosen{};
    std::array<int, 11> candidates{}; // preferred try order
    std::uint64_t best = 0;
    int total_bits = 0;

    explicit Canonicalizer(const OrientedGraph& t) : k(t.order()) {
        total_bits = pair_count(k);
        for (const Arc& a : t.arcs())
            adj[a.from][a.to] = 1;
        // Low out-degree first: early positions should lose to later ones,
        // which drives prefix bits to zero.
        std::vector<int> order_by(k);
        std::iota(order_by.begin(), order_by.end(), 0);
        std::stable_sort(order_by.begin(), order_by.end(), [&](int a, int b) {
            return t.out_degree(a) < t.out_degree(b);
        });
        std::copy(order_by.begin(), order_by.end(), candidates.begin());
    }

    std::uint64_t run(std::uint64_t incumbent) {
        best = incumbent;
        descend(0, 0, 0, 0);
        return best;
    }

    void descend(int pos, std::uint64_t value, int bits, unsigned used) {
        if (pos == k) {
            best = std::min(best, value);
            return;
        }
        for (int c = 0; c < k; ++c) {
            const int v = candidates[c];
            if (used & (1u << v))
                continue;
            std::uint64_t next = value;
            for (int q = 0; q < pos; ++q)
                next = (next << 1) | adj[chosen[q]][v];
            const int next_bits = bits + pos;
            if (next > (best >> (total_bits - next_bits)))
                continue;
            chosen[pos] = v;
            descend(pos + 1, next, next_bits, used | (1u << v));
        }
    }
};

} // namespace

std::uint64_t tournament_code(const Tournament& t) {
    const OrientedGraph& g = t.graph();
    std::uint64_t code = 0;
    for (Vertex j = 1; j < g.order(); ++j)
        for (Vertex i = 0; i < j; ++i)
            code = (code << 1) | (g.has_arc(i, j) ? 1 : 0);
    return code;
}

Tournament tournament_from_code(int order, std::uint64_t code) {
    if (order < 0 || pair_count(order) > 64)
        throw DomainError("tournament order out of range for bit codes");
    std::vector<Arc> arcs;
    arcs.reserve(pair_count(order));
    int shift = pair_count(order);
    for (Vertex j = 1; j < order; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            --shift;
            if ((code >> shift) & 1)
                arcs.push_back({i, j});
            else
                arcs.push_back({j, i});
        }
    }
    return Tournament(OrientedGraph(order, std::move(arcs)));
}

std::uint64_t canonical_tournament_code(const OrientedGraph& tournament) {
    if (!is_tournament(tournament))
        throw DomainError("canonical codes are defined for tournaments only");
    if (tournament.order() <= 1)
        return 0;
    if (pair_count(tournament.order()) > 64)
        throw DomainError("tournament order out of range for bit codes");
    Canonicalizer canon(tournament);
    return canon.run(tournament_code(Tournament(tournament)));
}

TournamentCatalog::TournamentCatalog(int order, std::vector<std::uint64_t> codes)
    : order_(order), codes_(std::move(codes)) {
    members_.reserve(codes_.size());
    for (std::uint64_t code : codes_)
        members_.push_back(tournament_from_code(order_, code));
}

TournamentCatalog enumerate_tournaments(int order) {
    if (order < 1 || order > kMaxCatalogOrder)
        throw DomainError("catalog orders run 1.." + std::to_string(kMaxCatalogOrder) +
                          ", got " + std::to_string(order));
    std::vector<std::uint64_t> codes{0}; // the single 1-vertex tournament
    for (int j = 2; j <= order; ++j) {
        std::vector<std::uint64_t> grown;
        for (std::uint64_t code : codes) {
            const Tournament base = tournament_from_code(j - 1, code);
            std::vector<Arc> arcs = base.graph().arcs();
            const std::size_t fixed = arcs.size();
            arcs.resize(fixed + static_cast<std::size_t>(j - 1));
            // New vertex j-1 attached by every orientation pattern; bit i of
            // the pattern directs i -> j-1.
            for (std::uint32_t pattern = 0; pattern < (1u << (j - 1)); ++pattern) {
                for (Vertex i = 0; i < j - 1; ++i)
                    arcs[fixed + i] = (pattern >> i) & 1 ? Arc{i, j - 1} : Arc{j - 1, i};
                grown.push_back(canonical_tournament_code(OrientedGraph(j, arcs)));
            }
        }
        std::sort(grown.begin(), grown.end());
        grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
        codes = std::move(grown);
    }
    return TournamentCatalog(order, std::move(codes));
}

const TournamentCatalog& shared_catalog(int order) {
    if (order < 1 || order > kMaxCatalogOrder)
        throw DomainError("catalog orders run 1.." + std::to_string(kMaxCatalogOrder) +
                          ", got " + std::to_string(order));
    static std::array<std::unique_ptr<TournamentCatalog>, kMaxCatalogOrder + 1> memo;
    static std::mutex lock;
    std::scoped_lock guard(lock);
    if (!memo[order])
        memo[order] = std::make_unique<TournamentCatalog>(enumerate_tournaments(order));
    return *memo[order];
}

std::map<int, std::vector<std::uint64_t>> read_catalog_cache(const std::filesystem::path& path) {
    std::map<int, std::vector<std::uint64_t>> out;
    std::ifstream in(path);
    if (!in)
        return out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;
        const std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(line_no, "expected '<k>:<bitcode-hex>'");
        int k = 0;
        std::uint64_t code = 0;
        try {
            k = std::stoi(line.substr(0, colon));
            code = std::stoull(line.substr(colon + 1), nullptr, 16);
        } catch (const std::exception&) {
            throw ParseError(line_no, "bad catalog cache entry '" + line + "'");
        }
        out[k].push_back(code);
    }
    return out;
}

void write_catalog_cache(const std::filesystem::path& path,
                         const std::map<int, std::vector<std::uint64_t>>& catalogs) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path.string());
    for (const auto& [k, codes] : catalogs) {
        std::vector<std::uint64_t> sorted(codes);
        std::sort(sorted.begin(), sorted.end());
        for (std::uint64_t code : sorted) {
            std::ostringstream line;
            line << k << ':' << std::hex << code;
            out << line.str() << '\n';
        }
    }
}

TournamentCatalog cached_enumerate_tournaments(const std::filesystem::path& path, int order) {
    if (order < 1 || order > kMaxCatalogOrder)
        throw DomainError("catalog orders run 1.." + std::to_string(kMaxCatalogOrder) +
                          ", got " + std::to_string(order));
    auto cached = read_catalog_cache(path);
    if (auto it = cached.find(order); it != cached.end()) {
        std::vector<std::uint64_t>& codes = it->second;
        bool usable = codes.size() == kClassCounts[static_cast<std::size_t>(order - 1)] &&
                      std::is_sorted(codes.begin(), codes.end()) &&
                      std::adjacent_find(codes.begin(), codes.end()) == codes.end();
        if (usable) {
            for (std::uint64_t code : codes) {
                if (code >> pair_count(order) ||
                    canonical_tournament_code(tournament_from_code(order, code)) != code) {
                    usable = false;
                    break;
                }
            }
        }
        if (usable)
            return TournamentCatalog(order, std::move(codes));
    }
    TournamentCatalog fresh = enumerate_tournaments(order);
    cached[order] = fresh.codes();
    write_catalog_cache(path, cached);
    return fresh;
}

} // namespace origraph
