#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "origraph/graph.hpp"
#include "origraph/tournaments.hpp"
#include "origraph/vertex_map.hpp"

namespace origraph {

// A graph together with a tournament colouring of it. The colouring
// certifies chi_o(graph) <= claimed_chi from above; verify_witness can add
// the exhaustive lower bound, making the claim exact.
struct Witness {
    OrientedGraph graph;
    Tournament target;
    VertexMap colouring; // graph -> target
    int claimed_girth = 0;
    int claimed_chi = 0;
};

// The fixed 5-vertex tournament t0..t4 every directed cycle maps into:
// arcs t0t1, t1t2, t2t3, t3t4, t2t0, t3t0, t4t0, plus t1t3, t1t4, t2t4 to
// complete it. Its leading 3 vertices induce the cyclic triangle and its
// leading 4 a strong tournament, so cycle colourings restrict cleanly.
Tournament cycle_target(int order = 5); // order in {3, 4, 5}

// chi_o of the directed cycle of the given length: 3 when length % 3 == 0,
// 5 when length == 5, otherwise 4.
int cycle_chromatic_number(int length);

// Directed cycle of the given length coloured into the full 5-vertex target
// by residue: t_{r mod 3} throughout when the length is divisible by 3; the
// final vertex moves to t3 when length % 3 == 1; the final two move to
// t3, t4 when length % 3 == 2. claimed_chi is 5 (an upper bound only,
// tight just for length 5).
Witness base_witness(int girth_target);

// Same cycle, coloured into a target of order exactly
// cycle_chromatic_number(girth_target): residues into the cyclic triangle
// when 3 divides the length, the full five for length 5, and otherwise a
// walk through the strong 4-vertex target (laps of t0t1t2 followed by laps
// of t0t1t2t3). The claim this witness carries is exact.
Witness cycle_witness(int girth_target);

// New dominated vertex: every existing graph vertex gets an arc to it, the
// target grows the same way, and the colouring sends the new vertex to the
// new target vertex. Girth is unchanged (the new vertex has out-degree 0);
// the chromatic claim increments, and stays exact if it was exact: a
// homomorphism of the extension into any tournament T restricts to one of
// the old graph into T minus the new vertex's image.
Witness extend(const Witness& w);

// Witness with girth exactly girth_target and chi_o exactly chi_target:
// cycle_witness(girth_target) extended until the claim reaches chi_target.
// Requires chi_target >= 5 and girth_target >= 3.
Witness construct(int chi_target, int girth_target);

struct VerificationReport {
    bool colouring_is_homomorphism = false;
    bool target_order_matches = false;
    bool girth_matches = false;
    std::optional<bool> chi_is_exact; // set only when the lower bound was checked
    std::vector<std::string> failures;

    bool ok() const noexcept {
        return colouring_is_homomorphism && target_order_matches && girth_matches &&
               chi_is_exact.value_or(true);
    }
};

// Checks the three structural invariants; with check_chi additionally
// confirms no tournament on claimed_chi - 1 vertices receives the graph
// (exhaustive catalog search, so claimed_chi - 1 <= kMaxCatalogOrder).
VerificationReport verify_witness(const Witness& w, bool check_chi);

// Bundle layout: <prefix>.graph.odg, <prefix>.target.odg and <prefix>.map
// holding one "map: i0 i1 ..." line. Reading recomputes claimed_girth from
// the graph and claimed_chi from the target order.
void write_witness_bundle(const std::filesystem::path& prefix, const Witness& w);
Witness read_witness_bundle(const std::filesystem::path& prefix);

} // namespace origraph
