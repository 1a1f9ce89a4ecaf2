#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <vector>

#include "origraph/graph.hpp"

namespace origraph {

// Labeled tournaments on k vertices are packed into k(k-1)/2 bits, one per
// unordered pair {i, j} with i < j, taken in column-major order
// (0,1),(0,2),(1,2),(0,3),...; the bit is 1 when the arc runs i -> j. The
// first pair occupies the most significant of those bits, so comparing codes
// as integers compares pair sequences lexicographically.
std::uint64_t tournament_code(const Tournament& t);
Tournament tournament_from_code(int order, std::uint64_t code);

// Minimum code over all relabelings; computed by branch and bound over
// vertex placements with prefix pruning.
std::uint64_t canonical_tournament_code(const OrientedGraph& tournament);

// One representative per isomorphism class, canonical codes strictly
// ascending.
class TournamentCatalog {
public:
    TournamentCatalog(int order, std::vector<std::uint64_t> codes);

    int order() const noexcept { return order_; }
    std::size_t size() const noexcept { return codes_.size(); }
    const std::vector<std::uint64_t>& codes() const noexcept { return codes_; }
    const std::vector<Tournament>& members() const noexcept { return members_; }

private:
    int order_;
    std::vector<std::uint64_t> codes_;
    std::vector<Tournament> members_;
};

constexpr int kMaxCatalogOrder = 8;

// Throws DomainError outside 1..kMaxCatalogOrder (6880 classes at order 8 is
// the practical ceiling).
TournamentCatalog enumerate_tournaments(int order);

// Process-wide memo of enumerate_tournaments.
const TournamentCatalog& shared_catalog(int order);

// Cache file: one `<k>:<bitcode-hex>` line per tournament, sorted ascending.
// Loading verifies every code is canonical and the class count matches the
// enumeration before trusting a file; anything off falls back to
// regeneration, so the cache only ever accelerates.
std::map<int, std::vector<std::uint64_t>> read_catalog_cache(const std::filesystem::path& path);
void write_catalog_cache(const std::filesystem::path& path,
                         const std::map<int, std::vector<std::uint64_t>>& catalogs);
TournamentCatalog cached_enumerate_tournaments(const std::filesystem::path& path, int order);

} // namespace origraph
