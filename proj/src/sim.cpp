#include "interdep/sim.hpp"

#include "interdep/agreeable.hpp"
#include "interdep/coopgame.hpp"
#include "interdep/rng.hpp"
#include "interdep/strategies.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <queue>
#include <sstream>

namespace interdep::sim {

std::string Topology::describe() const {
    switch (kind) {
    case Kind::Star: return "star(" + std::to_string(n) + ")";
    case Kind::Clique: return "clique(" + std::to_string(n) + ")";
    case Kind::RandomTree: return "random_tree(" + std::to_string(n) + ")";
    case Kind::ErdosRenyi: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4g", p);
        return "erdos_renyi(" + std::to_string(n) + "," + buf + ")";
    }
    case Kind::FromFile: return "from_file(" + path + ")";
    }
    return "?";
}

void ExperimentConfig::validate() const {
    if (runs < 1) throw ValidationError("runs must be >= 1");
    if (topology.kind == Topology::Kind::ErdosRenyi && (topology.p < 0.0 || topology.p > 1.0))
        throw ValidationError("edge probability must lie in [0,1]");
    if (scheme.kind == CostScheme::Kind::DistanceDecay) {
        if (scheme.consumer_set.empty())
            throw ValidationError("distance decay requires a non-empty consumer set");
        if (scheme.L0 <= 0.0 || scheme.c0 <= 1.0)
            throw ValidationError("distance decay requires L0 > 0 and c0 > 1");
    }
    if (delta_max < 0 || delta_max > 6) throw ValidationError("delta_max must lie in [0,6]");
    if (jobs < 1) throw ValidationError("jobs must be >= 1");
}

namespace {

std::vector<std::pair<int, int>> undirected_links(const Topology& t, Rng& rng) {
    std::vector<std::pair<int, int>> links;
    switch (t.kind) {
    case Topology::Kind::Star:
        for (int i = 1; i < t.n; ++i) links.push_back({i, 0});
        break;
    case Topology::Kind::Clique:
        for (int i = 0; i < t.n; ++i)
            for (int j = i + 1; j < t.n; ++j) links.push_back({i, j});
        break;
    case Topology::Kind::RandomTree:
        for (int i = 1; i < t.n; ++i) links.push_back({i, int(rng.bounded(i))});
        break;
    case Topology::Kind::ErdosRenyi:
        for (int i = 0; i < t.n; ++i)
            for (int j = i + 1; j < t.n; ++j)
                if (rng.bernoulli(t.p)) links.push_back({i, j});
        break;
    case Topology::Kind::FromFile:
        throw ValidationError("from_file topologies carry their own arcs");
    }
    return links;
}

} // namespace

SecurityNetwork build_topology(const Topology& t, bool bidirectional, std::uint64_t seed) {
    if (t.kind == Topology::Kind::FromFile) return load_network_file(t.path);
    if (t.n < 1) throw ValidationError("topology size must be >= 1");
    Rng rng(Rng::derive(seed, 0x10));
    std::vector<Arc> arcs;
    for (auto [a, b] : undirected_links(t, rng)) {
        if (bidirectional) {
            arcs.push_back({a, b, 1.0});
            arcs.push_back({b, a, 1.0});
        } else {
            // orient each link at random so unidirectional draws stay unbiased
            if (rng.bernoulli(0.5)) std::swap(a, b);
            arcs.push_back({a, b, 1.0});
        }
    }
    std::vector<double> theta(t.n, 1.0), penalty(t.n, 1.0);
    std::vector<std::string> labels;
    int width = int(std::to_string(t.n - 1).size());
    for (int i = 0; i < t.n; ++i) {
        std::string s = std::to_string(i);
        labels.push_back(std::string(width - int(s.size()), '0') + s);
    }
    return make_network(std::move(theta), std::move(penalty), std::move(arcs), std::move(labels));
}

namespace {

std::vector<int> directed_distances_to(const SecurityNetwork& net, const std::vector<int>& targets) {
    // shortest directed distance from each node TO its nearest target, i.e. a
    // reverse BFS over the arc set
    std::vector<int> dist(net.n(), -1);
    std::queue<int> q;
    for (int t : targets)
        if (t >= 0 && t < net.n() && dist[t] < 0) {
            dist[t] = 0;
            q.push(t);
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int a : net.in_arcs[v]) {
            int u = net.arcs[a].from;
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
        }
    }
    return dist;
}

} // namespace

SecurityNetwork sample_costs(const Topology& t, bool bidirectional, const CostScheme& scheme,
                             std::uint64_t seed) {
    SecurityNetwork net = build_topology(t, bidirectional, seed);
    Rng rng(Rng::derive(seed, 0x20));

    for (int i = 0; i < net.n(); ++i) net.theta[i] = rng.uniform(15.0, 25.0);
    for (Arc& a : net.arcs) a.xi = rng.uniform(3.0, 5.0);

    if (scheme.kind == CostScheme::Kind::UniformDegree) {
        for (int i = 0; i < net.n(); ++i) {
            double deg = double(net.in_arcs[i].size());
            net.penalty[i] = rng.uniform(17.0 + deg, 23.0 + deg);
        }
        return net;
    }

    if (scheme.consumer_set.empty()) throw ValidationError("empty consumer set");
    std::vector<int> dist = directed_distances_to(net, scheme.consumer_set);
    int diameter = 0;
    for (int d : dist) diameter = std::max(diameter, d);
    std::vector<double> decay(net.n());
    for (int i = 0; i < net.n(); ++i) {
        int d = dist[i] >= 0 ? dist[i] : diameter + 1; // unreachable: flagged past the diameter
        decay[i] = scheme.L0 / std::pow(scheme.c0, double(d));
    }
    if (scheme.matched_mean_benchmark) {
        double mean = 0.0;
        for (double v : decay) mean += v;
        mean /= double(net.n());
        for (int i = 0; i < net.n(); ++i) net.penalty[i] = rng.uniform(mean - 3.0, mean + 3.0);
    } else {
        for (int i = 0; i < net.n(); ++i) net.penalty[i] = decay[i];
    }
    return net;
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

RunRecord one_run(const ExperimentConfig& cfg, int run_index) {
    RunRecord rec;
    rec.run = run_index;
    rec.seed = cfg.seed + std::uint64_t(run_index);
    rec.topology = cfg.topology.describe();

    SecurityNetwork net = sample_costs(cfg.topology, cfg.bidirectional, cfg.scheme, rec.seed);
    rec.n = net.n();
    rec.m = net.m();
    rec.shapley_cf_applicable = shapley_closed_form_applicable(net);

    auto t0 = std::chrono::steady_clock::now();
    ReductionResult red = reduce_network(net);
    rec.grand_cost = network_optimal(net).cost;
    double ms_cut = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    AgreeableFamily fam = agreeable_family(red.network);
    rec.agreeable_exists = fam.exists;
    rec.delta_star = 0;
    for (int d = 1; d <= cfg.delta_max && rec.delta_star == 0; ++d)
        if (delta_agreeable_exists(red.network, d)) rec.delta_star = d;
    double ms_agree = ms_since(t0);

    if (cfg.timings) {
        rec.ms_mincut = ms_cut;
        rec.ms_agreeable = ms_agree;
    }
    return rec;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace

std::string ExperimentResult::csv() const {
    std::ostringstream out;
    out << "run,seed,topology,n,m,agreeable_exists,shapley_cf_applicable,delta_star,grand_cost,"
           "ms_mincut,ms_agreeable\n";
    for (const RunRecord& r : records) {
        out << r.run << ',' << r.seed << ',' << r.topology << ',' << r.n << ',' << r.m << ','
            << (r.agreeable_exists ? 1 : 0) << ',' << (r.shapley_cf_applicable ? 1 : 0) << ','
            << r.delta_star << ',' << format_double(r.grand_cost) << ','
            << format_double(r.ms_mincut) << ',' << format_double(r.ms_agreeable) << '\n';
    }
    return out.str();
}

std::string ExperimentResult::summary_json() const {
    nlohmann::ordered_json j;
    j["runs"] = records.size();
    j["agreeable_rate"] = agreeable_rate;
    j["shapley_cf_rate"] = shapley_cf_rate;
    j["total_ms"] = total_ms;
    return j.dump(2);
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    auto t0 = std::chrono::steady_clock::now();

    ExperimentResult result;
    result.records.resize(config.runs);
    if (config.jobs <= 1) {
        for (int r = 0; r < config.runs; ++r) result.records[r] = one_run(config, r);
    } else {
        std::vector<std::future<void>> pool;
        std::atomic<int> next{0};
        for (int w = 0; w < config.jobs; ++w)
            pool.push_back(std::async(std::launch::async, [&] {
                for (;;) {
                    int r = next.fetch_add(1);
                    if (r >= config.runs) return;
                    result.records[r] = one_run(config, r);
                }
            }));
        for (auto& f : pool) f.get();
    }

    int agree = 0, cf = 0;
    for (const RunRecord& r : result.records) {
        agree += r.agreeable_exists ? 1 : 0;
        cf += r.shapley_cf_applicable ? 1 : 0;
    }
    result.agreeable_rate = double(agree) / double(config.runs);
    result.shapley_cf_rate = double(cf) / double(config.runs);
    result.total_ms = ms_since(t0);
    return result;
}

Interval bootstrap_rate_interval(const std::vector<std::uint8_t>& successes, double confidence,
                                 int resamples, std::uint64_t seed) {
    Rng rng(Rng::derive(seed, 0x30));
    const std::size_t n = successes.size();
    std::vector<double> rates(resamples);
    for (int b = 0; b < resamples; ++b) {
        int hit = 0;
        for (std::size_t k = 0; k < n; ++k) hit += successes[rng.bounded(n)];
        rates[b] = double(hit) / double(n);
    }
    std::sort(rates.begin(), rates.end());
    double alpha = (1.0 - confidence) / 2.0;
    auto pick = [&](double q) {
        int idx = std::clamp(int(q * (resamples - 1)), 0, resamples - 1);
        return rates[idx];
    };
    return Interval{pick(alpha), pick(1.0 - alpha)};
}

} // namespace interdep::sim
