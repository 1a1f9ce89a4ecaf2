#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "origraph/random_model.hpp"

namespace origraph {

// Monte Carlo harnesses over the random model. Trial t runs with seed
// params.seed + t; set draws inside a trial use a second generator seeded
// with (params.seed + t) ^ 0x9e3779b97f4a7c15. Reports convert to JSON with
// the stable field names documented in the README.

struct Lemma1Trial {
    std::size_t short_cycle_count = 0;
    std::size_t intersecting_pair_count = 0;
};

struct Lemma1Report {
    SampleParams params;
    int trials = 0;
    std::vector<Lemma1Trial> per_trial;
    double mean_short_cycles = 0.0;
    double stderr_short_cycles = 0.0;
    double mean_intersecting_pairs = 0.0;
    double stderr_intersecting_pairs = 0.0;
    double short_cycle_bound = 0.0;       // n^(eps*l - eps/2)
    double intersecting_pair_bound = 0.0; // n^(-1/2)
    bool short_cycles_within_bound = false; // mean <= bound + 3 standard errors
    bool intersecting_pairs_within_bound = false;
    double wall_seconds = 0.0;
};

// Means of the short-cycle count and the intersecting short-cycle pair
// count over sampled graphs (no cycle removal), against the model bounds.
Lemma1Report lemma1_experiment(const SampleParams& params, int trials);

struct Lemma2Report {
    std::vector<Arc> good_arcs;        // base arcs joining two heavy parts
    std::size_t min_good_arc_count = 0; // minimum sampled arc count over good arcs
    bool at_least_part_size = false;
};

// Requires the vertex set to be large: some base arc ij has at least
// n/k of the set in part i and in part j (DomainError otherwise). Reports
// the minimum, over good arcs, of the sampled arcs inside the set.
Lemma2Report lemma2_check(const OrientedGraph& sampled, const BlowUpGraph& blowup,
                          const std::vector<Vertex>& vertex_set, int colour_bound);

struct Lemma2ExperimentReport {
    SampleParams params;
    int trials = 0;
    std::vector<std::size_t> per_trial_min_counts;
    int successes = 0;
    double frequency = 0.0;
    double wall_seconds = 0.0;
};

// lemma2_check with the full vertex set, per sampled graph.
Lemma2ExperimentReport lemma2_experiment(const SampleParams& params, int trials);

struct Lemma3Report {
    std::size_t arc_count = 0; // sampled arcs from the A side to the B side
    double threshold = 0.0;    // min(|B|, n^(eps*l))
    bool exceeds = false;      // arc_count > threshold
};

// A must sit inside one part, B inside another, with a base arc from A's
// part to B's part, 1 <= |B| <= n/k and |A| = n - |B|(k-1); DomainError
// names whichever constraint fails.
Lemma3Report lemma3_check(const OrientedGraph& sampled, const BlowUpGraph& blowup,
                          const std::vector<Vertex>& a_set, const std::vector<Vertex>& b_set,
                          int colour_bound, double epsilon, int girth_target);

struct Lemma3ExperimentReport {
    SampleParams params;
    int trials = 0;
    int pairs_per_trial = 0;
    std::vector<int> per_trial_passes;
    long checks = 0;
    long passes = 0;
    double frequency = 0.0;
    double wall_seconds = 0.0;
};

// Random conforming (A, B) pairs per sampled graph: uniform base arc,
// |B| uniform in 1..n/k, then uniform subsets of the two parts.
Lemma3ExperimentReport lemma3_experiment(const SampleParams& params, int trials,
                                         int pairs_per_trial);

struct Theorem1Trial {
    bool girth_ok = false;
    bool composition_ok = false;
    int hard_targets = 0;
    int hard_violations = 0;
    int factor_checks = 0;
    int factor_successes = 0;
};

struct Theorem1Report {
    SampleParams params;
    int trials = 0;
    std::size_t enumeration_limit = 0;
    std::vector<Theorem1Trial> per_trial;
    long girth_failures = 0;       // must stay 0
    long composition_failures = 0; // must stay 0
    long hard_targets_checked = 0;
    long hard_violations = 0;
    int hard_clean_trials = 0;
    double hard_trial_success_rate = 0.0;
    int pointed_targets = 0;
    long factor_checks = 0;
    long factor_successes = 0;
    double factor_check_success_rate = 0.0;
    int factor_clean_trials = 0;
    double factor_trial_success_rate = 0.0;
    double wall_seconds = 0.0;
};

// Per pipeline run, against every catalog tournament of order up to the
// colour bound:
//  - the girth bound holds (exact);
//  - base colourings compose with psi into colourings of the output (exact);
//  - targets with no base colouring should not receive the output either;
//    violations are counted, not asserted;
//  - for pointed targets, each enumerated colouring of the output (up to
//    the limit) is compared against f . psi, where f colours each base
//    vertex by the dominant colour of its part.
Theorem1Report theorem1_demo(const SampleParams& params, int trials,
                             std::size_t enumeration_limit = 32);

std::string to_json_string(const Lemma1Report& report);
std::string to_json_string(const Lemma2ExperimentReport& report);
std::string to_json_string(const Lemma3ExperimentReport& report);
std::string to_json_string(const Theorem1Report& report);

} // namespace origraph
