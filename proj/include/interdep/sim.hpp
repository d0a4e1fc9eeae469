#ifndef INTERDEP_SIM_HPP
#define INTERDEP_SIM_HPP

#include "interdep/model.hpp"

#include <optional>
#include <string>

namespace interdep::sim {

struct Topology {
    enum class Kind { Star, Clique, RandomTree, ErdosRenyi, FromFile } kind = Kind::Star;
    int n = 0;
    double p = 0.0;   // Erdos-Renyi edge probability
    std::string path; // FromFile

    static Topology star(int n) { return {Kind::Star, n, 0.0, {}}; }
    static Topology clique(int n) { return {Kind::Clique, n, 0.0, {}}; }
    static Topology random_tree(int n) { return {Kind::RandomTree, n, 0.0, {}}; }
    static Topology erdos_renyi(int n, double p) { return {Kind::ErdosRenyi, n, p, {}}; }
    static Topology from_file(std::string path) { return {Kind::FromFile, 0, 0.0, std::move(path)}; }

    std::string describe() const;
};

struct CostScheme {
    enum class Kind { UniformDegree, DistanceDecay } kind = Kind::UniformDegree;
    // distance decay parameters
    double L0 = 409.6;
    double c0 = 2.0;
    std::vector<int> consumer_set = {0};
    bool matched_mean_benchmark = false; // draw L uniformly around the decay mean instead

    static CostScheme uniform_degree() { return {}; }
    static CostScheme distance_decay(double L0, double c0, std::vector<int> consumers) {
        CostScheme s;
        s.kind = Kind::DistanceDecay;
        s.L0 = L0;
        s.c0 = c0;
        s.consumer_set = std::move(consumers);
        return s;
    }
};

struct ExperimentConfig {
    Topology topology;
    bool bidirectional = true; // emit both arc directions for each link
    CostScheme scheme;
    int runs = 1;
    std::uint64_t seed = 0;
    int delta_max = 2;
    bool timings = false; // wall-clock ms in the CSV; off keeps output byte-stable
    int jobs = 1;

    void validate() const;
};

struct RunRecord {
    int run = 0;
    std::uint64_t seed = 0;
    std::string topology;
    int n = 0;
    int m = 0;
    bool agreeable_exists = false;
    bool shapley_cf_applicable = false;
    int delta_star = 0; // smallest delta <= delta_max with a delta-agreeable allocation; 0 = none
    double grand_cost = 0.0;
    double ms_mincut = 0.0;
    double ms_agreeable = 0.0;
};

struct ExperimentResult {
    std::vector<RunRecord> records;
    double agreeable_rate = 0.0;
    double shapley_cf_rate = 0.0;
    double total_ms = 0.0;

    std::string csv() const;          // fixed, versioned column set
    std::string summary_json() const; // rates + timing aggregate
};

// Bare topology graph (arcs only, unit costs); deterministic for a fixed seed.
SecurityNetwork build_topology(const Topology& t, bool bidirectional, std::uint64_t seed);

// Draw theta, xi, L onto the topology per the scheme; deterministic per seed.
SecurityNetwork sample_costs(const Topology& t, bool bidirectional, const CostScheme& scheme,
                             std::uint64_t seed);

ExperimentResult run_experiment(const ExperimentConfig& config);

// Percentile bootstrap confidence interval for a Bernoulli rate.
struct Interval {
    double lo = 0.0, hi = 0.0;
};
Interval bootstrap_rate_interval(const std::vector<std::uint8_t>& successes, double confidence,
                                 int resamples, std::uint64_t seed);

} // namespace interdep::sim

#endif
