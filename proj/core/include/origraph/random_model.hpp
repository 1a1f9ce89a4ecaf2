#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "origraph/graph.hpp"
#include "origraph/vertex_map.hpp"

namespace origraph {

// Blow-up of a base graph: every base vertex i becomes the part
// V_i = [i*n, (i+1)*n) and every base arc becomes all n^2 cross arcs in its
// direction.
struct BlowUpGraph {
    OrientedGraph base;
    int part_size = 0;
    OrientedGraph graph; // the blown-up carrier

    Vertex part_of(Vertex x) const noexcept { return x / part_size; }
    Vertex part_begin(Vertex i) const noexcept { return i * part_size; }
    Vertex part_end(Vertex i) const noexcept { return (i + 1) * part_size; }

    // The projection onto the base: x -> part_of(x). Always a surjective
    // homomorphism from any spanning subgraph of the blow-up.
    VertexMap projection() const;
};

BlowUpGraph blow_up(const OrientedGraph& base, int part_size);

// Parameters of the random spanning-subgraph model: arcs of the blow-up are
// kept independently with probability part_size^(epsilon - 1).
struct SampleParams {
    OrientedGraph base;
    int part_size = 0;      // n
    int girth_target = 3;   // l
    double epsilon = 0.0;
    int colour_bound = 1;   // k
    std::uint64_t seed = 0;

    double arc_probability() const;
    static double default_epsilon(int girth_target); // midpoint discipline 1/(8*l)

    // 0 < epsilon < 1/(4*l), n >= k >= 1, l >= 3. Throws DomainError.
    void validate() const;
};

// Spanning subgraph keeping each blow-up arc independently with the given
// probability. The generator is std::mt19937_64 seeded directly with seed;
// arcs are visited in sorted order, one 53-bit uniform draw each, kept when
// the draw is < probability. Fixtures pin this traversal order.
OrientedGraph sample(const BlowUpGraph& blowup, double arc_probability, std::uint64_t seed);
OrientedGraph sample(const SampleParams& params);

struct DestroyResult {
    OrientedGraph graph;          // girth >= the target, or acyclic
    std::vector<Arc> removed;     // transversal of the short cycles, sorted
    std::size_t short_cycles_before = 0;
    bool matching = true;         // removed arcs pairwise non-adjacent
    int rounds = 0;               // removal sweeps executed
};

// Deletes one arc from every directed cycle shorter than girth_target,
// greedily preferring arcs not adjacent to previously picked ones, and
// re-enumerates until no short cycle remains. Overlapping cycles can force
// adjacent picks; that only costs the matching flag, never the girth bound.
DestroyResult destroy_short_cycles(const OrientedGraph& g, int girth_target);

struct SampleOutcome {
    OrientedGraph d_star;
    VertexMap psi; // surjective homomorphism d_star -> base
    std::vector<Arc> removed;
    std::size_t short_cycle_count = 0;
    bool matching_achieved = true;
    int removal_rounds = 0;
};

// blow_up + sample + destroy_short_cycles, with the projection as psi.
// Postconditions (girth bound, psi a surjective homomorphism) are checked
// exactly on every run.
SampleOutcome run_pipeline(const SampleParams& params);

// Canonical text form; equal outcomes serialize identically byte for byte.
std::string serialize_outcome(const SampleOutcome& outcome);

} // namespace origraph
