#include "origraph/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include <json.hpp>

#include "origraph/hom_search.hpp"
#include "origraph/tournaments.hpp"

namespace origraph {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kSetStreamSalt = 0x9e3779b97f4a7c15ULL;

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

SampleParams with_seed(const SampleParams& params, std::uint64_t seed) {
    SampleParams p = params;
    p.seed = seed;
    return p;
}

struct MeanStderr {
    double mean = 0.0;
    double stderr_of_mean = 0.0;
};

MeanStderr mean_stderr(const std::vector<double>& xs) {
    MeanStderr out;
    if (xs.empty())
        return out;
    out.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs)
            ss += (x - out.mean) * (x - out.mean);
        const double variance = ss / static_cast<double>(xs.size() - 1);
        out.stderr_of_mean = std::sqrt(variance / static_cast<double>(xs.size()));
    }
    return out;
}

std::size_t count_intersecting_pairs(const std::vector<Cycle>& cycles) {
    std::vector<std::vector<Vertex>> sorted(cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        sorted[i] = cycles[i].vertices;
        std::sort(sorted[i].begin(), sorted[i].end());
    }
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            const auto& a = sorted[i];
            const auto& b = sorted[j];
            std::size_t x = 0, y = 0;
            while (x < a.size() && y < b.size()) {
                if (a[x] == b[y]) {
                    ++pairs;
                    break;
                }
                if (a[x] < b[y])
                    ++x;
                else
                    ++y;
            }
        }
    }
    return pairs;
}

json params_json(const SampleParams& params) {
    return json{{"base_order", params.base.order()},
                {"base_arc_count", params.base.arc_count()},
                {"part_size", params.part_size},
                {"girth_target", params.girth_target},
                {"epsilon", params.epsilon},
                {"colour_bound", params.colour_bound},
                {"seed", params.seed},
                {"arc_probability", params.arc_probability()}};
}

// Uniform subset of size want from [begin, end) by partial Fisher-Yates.
std::vector<Vertex> random_subset(Vertex begin, Vertex end, int want, std::mt19937_64& gen) {
    std::vector<Vertex> pool(static_cast<std::size_t>(end - begin));
    std::iota(pool.begin(), pool.end(), begin);
    for (int i = 0; i < want; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(gen() % (pool.size() - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(want));
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace

Lemma1Report lemma1_experiment(const SampleParams& params, int trials) {
    if (trials < 1)
        throw DomainError("need at least one trial");
    params.validate();
    Stopwatch clock;

    Lemma1Report report;
    report.params = params;
    report.trials = trials;

    const BlowUpGraph blowup = blow_up(params.base, params.part_size);
    const double p = params.arc_probability();
    std::vector<double> cycle_counts, pair_counts;
    for (int t = 0; t < trials; ++t) {
        const OrientedGraph sampled = sample(blowup, p, params.seed + static_cast<std::uint64_t>(t));
        const auto cycles = short_cycles(sampled, params.girth_target);
        const std::size_t pairs = count_intersecting_pairs(cycles);
        report.per_trial.push_back({cycles.size(), pairs});
        cycle_counts.push_back(static_cast<double>(cycles.size()));
        pair_counts.push_back(static_cast<double>(pairs));
    }

    const auto cycle_stats = mean_stderr(cycle_counts);
    const auto pair_stats = mean_stderr(pair_counts);
    report.mean_short_cycles = cycle_stats.mean;
    report.stderr_short_cycles = cycle_stats.stderr_of_mean;
    report.mean_intersecting_pairs = pair_stats.mean;
    report.stderr_intersecting_pairs = pair_stats.stderr_of_mean;

    const double n = static_cast<double>(params.part_size);
    report.short_cycle_bound =
        std::pow(n, params.epsilon * params.girth_target - params.epsilon / 2.0);
    report.intersecting_pair_bound = std::pow(n, -0.5);
    report.short_cycles_within_bound =
        report.mean_short_cycles <= report.short_cycle_bound + 3.0 * report.stderr_short_cycles;
    report.intersecting_pairs_within_bound =
        report.mean_intersecting_pairs <=
        report.intersecting_pair_bound + 3.0 * report.stderr_intersecting_pairs;
    report.wall_seconds = clock.seconds();
    return report;
}

Lemma2Report lemma2_check(const OrientedGraph& sampled, const BlowUpGraph& blowup,
                          const std::vector<Vertex>& vertex_set, int colour_bound) {
    if (colour_bound < 1)
        throw DomainError("colour bound must be at least 1");
    const int n = blowup.part_size;
    std::vector<char> in_set(static_cast<std::size_t>(blowup.graph.order()), 0);
    std::vector<long> part_count(static_cast<std::size_t>(blowup.base.order()), 0);
    for (Vertex x : vertex_set) {
        if (x < 0 || x >= blowup.graph.order())
            throw DomainError("vertex set reaches outside the blow-up");
        if (!in_set[static_cast<std::size_t>(x)]) {
            in_set[static_cast<std::size_t>(x)] = 1;
            ++part_count[static_cast<std::size_t>(blowup.part_of(x))];
        }
    }

    Lemma2Report report;
    auto heavy = [&](Vertex i) {
        return part_count[static_cast<std::size_t>(i)] * colour_bound >= n;
    };
    for (const Arc& a : blowup.base.arcs())
        if (heavy(a.from) && heavy(a.to))
            report.good_arcs.push_back(a);
    if (report.good_arcs.empty())
        throw DomainError("vertex set is not large: no base arc joins two parts each holding "
                          "at least n/k of it");

    // One pass over the sampled arcs, binned per base arc.
    std::vector<std::size_t> per_base_arc(blowup.base.arc_count(), 0);
    const auto& base_arcs = blowup.base.arcs();
    for (const Arc& a : sampled.arcs()) {
        if (!in_set[static_cast<std::size_t>(a.from)] || !in_set[static_cast<std::size_t>(a.to)])
            continue;
        const Arc projected{blowup.part_of(a.from), blowup.part_of(a.to)};
        const auto it = std::lower_bound(base_arcs.begin(), base_arcs.end(), projected);
        if (it == base_arcs.end() || *it != projected)
            throw DomainError("sampled graph is not a spanning subgraph of the blow-up");
        ++per_base_arc[static_cast<std::size_t>(it - base_arcs.begin())];
    }
    report.min_good_arc_count = std::numeric_limits<std::size_t>::max();
    for (const Arc& a : report.good_arcs) {
        const auto it = std::lower_bound(base_arcs.begin(), base_arcs.end(), a);
        report.min_good_arc_count = std::min(
            report.min_good_arc_count, per_base_arc[static_cast<std::size_t>(it - base_arcs.begin())]);
    }
    report.at_least_part_size = report.min_good_arc_count >= static_cast<std::size_t>(n);
    return report;
}

Lemma2ExperimentReport lemma2_experiment(const SampleParams& params, int trials) {
    if (trials < 1)
        throw DomainError("need at least one trial");
    params.validate();
    Stopwatch clock;

    Lemma2ExperimentReport report;
    report.params = params;
    report.trials = trials;

    const BlowUpGraph blowup = blow_up(params.base, params.part_size);
    std::vector<Vertex> everything(static_cast<std::size_t>(blowup.graph.order()));
    std::iota(everything.begin(), everything.end(), 0);

    const double p = params.arc_probability();
    for (int t = 0; t < trials; ++t) {
        const OrientedGraph sampled = sample(blowup, p, params.seed + static_cast<std::uint64_t>(t));
        const Lemma2Report check = lemma2_check(sampled, blowup, everything, params.colour_bound);
        report.per_trial_min_counts.push_back(check.min_good_arc_count);
        if (check.at_least_part_size)
            ++report.successes;
    }
    report.frequency = static_cast<double>(report.successes) / static_cast<double>(trials);
    report.wall_seconds = clock.seconds();
    return report;
}

Lemma3Report lemma3_check(const OrientedGraph& sampled, const BlowUpGraph& blowup,
                          const std::vector<Vertex>& a_set, const std::vector<Vertex>& b_set,
                          int colour_bound, double epsilon, int girth_target) {
    const int n = blowup.part_size;
    const int k = colour_bound;
    if (k < 1)
        throw DomainError("colour bound must be at least 1");
    if (b_set.empty() || static_cast<long>(b_set.size()) * k > n)
        throw DomainError("B must satisfy 1 <= |B| <= n/k, got |B| = " +
                          std::to_string(b_set.size()));
    if (a_set.size() != static_cast<std::size_t>(n) - b_set.size() * static_cast<std::size_t>(k - 1))
        throw DomainError("A must satisfy |A| = n - |B|(k-1), got |A| = " +
                          std::to_string(a_set.size()));
    auto single_part = [&](const std::vector<Vertex>& set, const char* name) {
        for (Vertex x : set)
            if (x < 0 || x >= blowup.graph.order())
                throw DomainError(std::string(name) + " reaches outside the blow-up");
        const Vertex part = blowup.part_of(set.front());
        for (Vertex x : set)
            if (blowup.part_of(x) != part)
                throw DomainError(std::string(name) + " spans more than one part");
        return part;
    };
    const Vertex a_part = single_part(a_set, "A");
    const Vertex b_part = single_part(b_set, "B");
    if (!blowup.base.has_arc(a_part, b_part))
        throw DomainError("no base arc from A's part to B's part");

    std::vector<char> in_b(static_cast<std::size_t>(blowup.graph.order()), 0);
    for (Vertex y : b_set)
        in_b[static_cast<std::size_t>(y)] = 1;
    std::size_t count = 0;
    for (Vertex x : a_set)
        for (Vertex y : sampled.out_neighbours(x))
            if (in_b[static_cast<std::size_t>(y)])
                ++count;

    Lemma3Report report;
    report.arc_count = count;
    report.threshold = std::min(static_cast<double>(b_set.size()),
                                std::pow(static_cast<double>(n), epsilon * girth_target));
    report.exceeds = static_cast<double>(count) > report.threshold;
    return report;
}

Lemma3ExperimentReport lemma3_experiment(const SampleParams& params, int trials,
                                         int pairs_per_trial) {
    if (trials < 1 || pairs_per_trial < 1)
        throw DomainError("need at least one trial and one pair per trial");
    params.validate();
    if (params.base.arc_count() == 0)
        throw DomainError("base graph has no arcs to frame A and B");
    Stopwatch clock;

    Lemma3ExperimentReport report;
    report.params = params;
    report.trials = trials;
    report.pairs_per_trial = pairs_per_trial;

    const BlowUpGraph blowup = blow_up(params.base, params.part_size);
    const double p = params.arc_probability();
    const int n = params.part_size;
    const int k = params.colour_bound;
    const int max_b = n / k;

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = params.seed + static_cast<std::uint64_t>(t);
        const OrientedGraph sampled = sample(blowup, p, trial_seed);
        std::mt19937_64 set_gen(trial_seed ^ kSetStreamSalt);
        int passes = 0;
        for (int i = 0; i < pairs_per_trial; ++i) {
            const Arc base_arc =
                params.base.arcs()[static_cast<std::size_t>(set_gen() % params.base.arc_count())];
            const int b_size = 1 + static_cast<int>(set_gen() % static_cast<std::uint64_t>(max_b));
            const int a_size = n - b_size * (k - 1);
            const auto b_set = random_subset(blowup.part_begin(base_arc.to),
                                             blowup.part_end(base_arc.to), b_size, set_gen);
            const auto a_set = random_subset(blowup.part_begin(base_arc.from),
                                             blowup.part_end(base_arc.from), a_size, set_gen);
            const Lemma3Report check = lemma3_check(sampled, blowup, a_set, b_set, k,
                                                    params.epsilon, params.girth_target);
            if (check.exceeds)
                ++passes;
        }
        report.per_trial_passes.push_back(passes);
        report.checks += pairs_per_trial;
        report.passes += passes;
    }
    report.frequency = static_cast<double>(report.passes) / static_cast<double>(report.checks);
    report.wall_seconds = clock.seconds();
    return report;
}

namespace {

// Colour each base vertex by the most frequent colour of its part, lowest
// colour id on ties.
VertexMap dominant_colour_map(const VertexMap& phi, const BlowUpGraph& blowup,
                              Vertex target_order) {
    VertexMap f{blowup.base.order(), target_order, {}};
    f.image.reserve(static_cast<std::size_t>(blowup.base.order()));
    std::vector<long> count(static_cast<std::size_t>(target_order), 0);
    for (Vertex i = 0; i < blowup.base.order(); ++i) {
        std::fill(count.begin(), count.end(), 0);
        for (Vertex x = blowup.part_begin(i); x < blowup.part_end(i); ++x)
            ++count[static_cast<std::size_t>(phi(x))];
        const auto best = std::max_element(count.begin(), count.end());
        f.image.push_back(static_cast<Vertex>(best - count.begin()));
    }
    return f;
}

} // namespace

Theorem1Report theorem1_demo(const SampleParams& params, int trials,
                             std::size_t enumeration_limit) {
    if (trials < 1)
        throw DomainError("need at least one trial");
    params.validate();
    if (params.colour_bound > kMaxCatalogOrder)
        throw DomainError("colour bound above catalog cap");
    Stopwatch clock;

    Theorem1Report report;
    report.params = params;
    report.trials = trials;
    report.enumeration_limit = enumeration_limit;

    struct TargetInfo {
        const Tournament* tournament;
        std::optional<VertexMap> base_colouring;
        bool pointed;
    };
    std::vector<TargetInfo> targets;
    for (int k = 1; k <= params.colour_bound; ++k) {
        for (const Tournament& t : shared_catalog(k).members()) {
            TargetInfo info{&t, find_homomorphism(params.base, t),
                            is_pointed(t, params.base)};
            if (info.pointed)
                ++report.pointed_targets;
            targets.push_back(std::move(info));
        }
    }

    const BlowUpGraph blowup = blow_up(params.base, params.part_size);
    for (int trial = 0; trial < trials; ++trial) {
        const SampleOutcome outcome =
            run_pipeline(with_seed(params, params.seed + static_cast<std::uint64_t>(trial)));

        Theorem1Trial record;
        const auto g = girth(outcome.d_star);
        record.girth_ok = !g || *g >= params.girth_target;
        if (!record.girth_ok)
            ++report.girth_failures;

        record.composition_ok = true;
        for (const TargetInfo& info : targets) {
            bool output_colourable = false;
            if (info.base_colouring) {
                const VertexMap composed = compose(*info.base_colouring, outcome.psi);
                if (!is_homomorphism(composed, outcome.d_star, info.tournament->graph())) {
                    record.composition_ok = false;
                    ++report.composition_failures;
                }
                output_colourable = true;
            } else {
                ++record.hard_targets;
                output_colourable =
                    find_homomorphism(outcome.d_star, info.tournament->graph()).has_value();
                if (output_colourable)
                    ++record.hard_violations;
            }
            if (info.pointed && output_colourable) {
                const auto colourings = enumerate_homomorphisms(
                    outcome.d_star, info.tournament->graph(), enumeration_limit);
                for (const VertexMap& phi : colourings) {
                    ++record.factor_checks;
                    const VertexMap f =
                        dominant_colour_map(phi, blowup, info.tournament->order());
                    if (phi == compose(f, outcome.psi))
                        ++record.factor_successes;
                }
            }
        }

        report.hard_targets_checked += record.hard_targets;
        report.hard_violations += record.hard_violations;
        if (record.hard_violations == 0)
            ++report.hard_clean_trials;
        report.factor_checks += record.factor_checks;
        report.factor_successes += record.factor_successes;
        if (record.factor_checks == record.factor_successes)
            ++report.factor_clean_trials;
        report.per_trial.push_back(record);
    }

    report.hard_trial_success_rate =
        static_cast<double>(report.hard_clean_trials) / static_cast<double>(trials);
    report.factor_trial_success_rate =
        static_cast<double>(report.factor_clean_trials) / static_cast<double>(trials);
    report.factor_check_success_rate =
        report.factor_checks == 0
            ? 1.0
            : static_cast<double>(report.factor_successes) / static_cast<double>(report.factor_checks);
    report.wall_seconds = clock.seconds();
    return report;
}

std::string to_json_string(const Lemma1Report& report) {
    json per_trial = json::array();
    for (const Lemma1Trial& t : report.per_trial)
        per_trial.push_back(json{{"short_cycles", t.short_cycle_count},
                                 {"intersecting_pairs", t.intersecting_pair_count}});
    const json j{{"experiment", "lemma1"},
                 {"params", params_json(report.params)},
                 {"trials", report.trials},
                 {"per_trial", per_trial},
                 {"aggregate",
                  json{{"mean_short_cycles", report.mean_short_cycles},
                       {"stderr_short_cycles", report.stderr_short_cycles},
                       {"mean_intersecting_pairs", report.mean_intersecting_pairs},
                       {"stderr_intersecting_pairs", report.stderr_intersecting_pairs}}},
                 {"bounds",
                  json{{"short_cycle_mean_bound", report.short_cycle_bound},
                       {"intersecting_pair_mean_bound", report.intersecting_pair_bound}}},
                 {"pass",
                  json{{"short_cycles_within_bound", report.short_cycles_within_bound},
                       {"intersecting_pairs_within_bound", report.intersecting_pairs_within_bound}}},
                 {"wall_clock_seconds", report.wall_seconds}};
    return j.dump(2) + "\n";
}

std::string to_json_string(const Lemma2ExperimentReport& report) {
    const json j{{"experiment", "lemma2"},
                 {"params", params_json(report.params)},
                 {"trials", report.trials},
                 {"per_trial", report.per_trial_min_counts},
                 {"aggregate",
                  json{{"successes", report.successes}, {"frequency", report.frequency}}},
                 {"wall_clock_seconds", report.wall_seconds}};
    return j.dump(2) + "\n";
}

std::string to_json_string(const Lemma3ExperimentReport& report) {
    json params = params_json(report.params);
    params["pairs_per_trial"] = report.pairs_per_trial;
    const json j{{"experiment", "lemma3"},
                 {"params", params},
                 {"trials", report.trials},
                 {"per_trial", report.per_trial_passes},
                 {"aggregate",
                  json{{"checks", report.checks},
                       {"passes", report.passes},
                       {"frequency", report.frequency}}},
                 {"wall_clock_seconds", report.wall_seconds}};
    return j.dump(2) + "\n";
}

std::string to_json_string(const Theorem1Report& report) {
    json params = params_json(report.params);
    params["enumeration_limit"] = report.enumeration_limit;
    json per_trial = json::array();
    for (const Theorem1Trial& t : report.per_trial)
        per_trial.push_back(json{{"girth_ok", t.girth_ok},
                                 {"composition_ok", t.composition_ok},
                                 {"hard_targets", t.hard_targets},
                                 {"hard_violations", t.hard_violations},
                                 {"factor_checks", t.factor_checks},
                                 {"factor_successes", t.factor_successes}});
    const json j{{"experiment", "theorem1"},
                 {"params", params},
                 {"trials", report.trials},
                 {"per_trial", per_trial},
                 {"aggregate",
                  json{{"girth_failures", report.girth_failures},
                       {"composition_failures", report.composition_failures},
                       {"hard_targets_checked", report.hard_targets_checked},
                       {"hard_violations", report.hard_violations},
                       {"hard_trial_success_rate", report.hard_trial_success_rate},
                       {"pointed_targets", report.pointed_targets},
                       {"factor_checks", report.factor_checks},
                       {"factor_successes", report.factor_successes},
                       {"factor_check_success_rate", report.factor_check_success_rate},
                       {"factor_trial_success_rate", report.factor_trial_success_rate}}},
                 {"wall_clock_seconds", report.wall_seconds}};
    return j.dump(2) + "\n";
}

} // namespace origraph
