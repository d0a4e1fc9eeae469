// Command-line front end. Results go to stdout as JSON (machine-parseable
// only); diagnostics go to stderr. Exit codes: 0 success, 2 validation error,
// 3 size/enumeration guard exceeded, 4 requested allocation does not exist.

#include "interdep/agreeable.hpp"
#include "interdep/coopgame.hpp"
#include "interdep/homogeneous.hpp"
#include "interdep/infomodels.hpp"
#include "interdep/sim.hpp"
#include "interdep/strategies.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using json = nlohmann::ordered_json;
using namespace interdep;

constexpr const char* kVersion = "0.1.0";

struct Io {
    std::string out_path;

    void emit(json j, const SecurityNetwork* net) const {
        if (net) j["input_hash"] = to_hex(network_hash(*net));
        j["version"] = kVersion;
        if (out_path.empty()) {
            std::cout << j.dump(2) << "\n";
        } else {
            std::ofstream out(out_path);
            if (!out) throw ValidationError("cannot write output file: " + out_path);
            out << j.dump(2) << "\n";
        }
    }

    static std::string to_hex(std::uint64_t v) {
        char buf[20];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
        return buf;
    }
};

json coalition_labels(const SecurityNetwork& net, const Coalition& c) {
    json arr = json::array();
    for (int i : c.members()) arr.push_back(net.labels[i]);
    return arr;
}

json allocation_json(const SecurityNetwork& net, const Allocation& a) {
    json shares = json::object();
    for (int i = 0; i < net.n(); ++i) shares[net.labels[i]] = a.shares[i];
    json j;
    j["shares"] = shares;
    j["total"] = a.total;
    return j;
}

Coalition parse_members(const SecurityNetwork& net, const std::vector<std::string>& labels) {
    Coalition c(net.n());
    for (const std::string& lbl : labels) {
        auto it = std::find(net.labels.begin(), net.labels.end(), lbl);
        if (it == net.labels.end()) throw ValidationError("unknown node '" + lbl + "'");
        c.add(int(it - net.labels.begin()));
    }
    return c;
}

PartitionStructure parse_partition(const SecurityNetwork& net, const std::string& spec) {
    // blocks separated by '/', members by ','  e.g.  "a,b/c"
    PartitionStructure rho;
    std::stringstream ss(spec);
    std::string block;
    while (std::getline(ss, block, '/')) {
        std::vector<std::string> labels;
        std::stringstream bs(block);
        std::string lbl;
        while (std::getline(bs, lbl, ','))
            if (!lbl.empty()) labels.push_back(lbl);
        if (!labels.empty()) rho.blocks.push_back(parse_members(net, labels));
    }
    rho.validate(net.n());
    return rho;
}

int nonexistent(const Io& io, const SecurityNetwork& net, const std::string& reason) {
    json j;
    j["exists"] = false;
    j["reason"] = reason;
    io.emit(std::move(j), &net);
    return 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"interdependent-security cost sharing toolkit"};
    app.require_subcommand(1);

    Io io;
    std::string input;
    double tolerance = 1e-9;
    int jobs = 1;
    app.add_option("--out", io.out_path, "write the JSON result to this file");
    app.add_option("--tolerance", tolerance, "comparison tolerance (default 1e-9)");
    app.add_option("--jobs", jobs, "worker threads for simulations");

    auto add_net = [&](CLI::App* cmd) {
        cmd->add_option("network", input, "network JSON file")->required();
    };

    auto* solve = app.add_subcommand("solve", "independent and network-optimal strategies");
    add_net(solve);

    auto* coal = app.add_subcommand("coalition-cost", "coalition-optimal cost c(S)");
    add_net(coal);
    std::vector<std::string> members;
    coal->add_option("--members", members, "coalition member labels")->required();
    bool oracle = false;
    coal->add_flag("--oracle", oracle, "use the enumeration oracle instead of the min cut");

    auto* shap = app.add_subcommand("shapley", "Shapley value (exact | closed | mc)");
    add_net(shap);
    std::string mode = "exact";
    shap->add_option("--mode", mode, "exact | closed | mc")->check(CLI::IsMember({"exact", "closed", "mc"}));
    std::uint64_t samples = 10000, seed = 0;
    shap->add_option("--samples", samples, "Monte Carlo sample count");
    shap->add_option("--seed", seed, "Monte Carlo seed");

    auto* core = app.add_subcommand("core-check", "verify an allocation lies in the core");
    add_net(core);
    std::string alloc_file;
    core->add_option("--allocation", alloc_file, "JSON file {label: share}")->required();

    auto* extreme = app.add_subcommand("extreme-core", "marginal-worth vector along a permutation");
    add_net(extreme);
    std::vector<std::string> order;
    extreme->add_option("--order", order, "player labels in permutation order")->required();

    auto* agree = app.add_subcommand("agreeable", "agreeable allocation (private information)");
    add_net(agree);

    auto* dagree = app.add_subcommand("delta-agreeable", "delta-agreeable allocation");
    add_net(dagree);
    int delta = 1;
    std::uint64_t cap = 1'000'000;
    dagree->add_option("--delta", delta, "delta >= 1")->required();
    dagree->add_option("--cap", cap, "permutation enumeration cap");

    auto* pubeq = app.add_subcommand("public-eq", "equilibrium under public information");
    add_net(pubeq);
    std::string partition;
    pubeq->add_option("--partition", partition, "blocks 'a,b/c' (default: singletons)");

    auto* pcost = app.add_subcommand("partition-cost", "coalition cost within a partition");
    add_net(pcost);
    std::vector<std::string> pc_members;
    std::string pc_partition;
    bool pc_partial = false;
    pcost->add_option("--members", pc_members, "coalition member labels")->required();
    pcost->add_option("--partition", pc_partition, "blocks 'a,b/c'")->required();
    pcost->add_flag("--partial", pc_partial, "use the partial-information model");

    auto* stab = app.add_subcommand("stability-check", "grand-coalition deviation certificate");
    add_net(stab);
    bool singleton_residuals = false, stab_partial = false;
    stab->add_flag("--singleton-residuals", singleton_residuals,
                   "deviators face residual players as singletons");
    stab->add_flag("--partial", stab_partial, "use the partial-information model");

    auto* pagree = app.add_subcommand("partial-agreeable",
                                      "agreeable allocation under partial information");
    add_net(pagree);
    std::vector<std::string> public_override;
    pagree->add_option("--public", public_override, "override the network's public set");

    auto* pubagree = app.add_subcommand("public-agreeable",
                                        "agreeable allocation under public information");
    add_net(pubagree);

    auto* kcore = app.add_subcommand("kcore", "directed k-core decomposition");
    add_net(kcore);
    int kvalue = 0;
    kcore->add_option("--k", kvalue, "report the maximal k-core for this k");

    auto* predict = app.add_subcommand("predict-homogeneous",
                                       "agreeable existence prediction on quasi-homogeneous nets");
    add_net(predict);

    auto* reduce = app.add_subcommand("reduce", "drop players unsecured in the optimum");
    add_net(reduce);

    auto* simulate = app.add_subcommand("simulate", "seeded batch experiments with CSV output");
    std::string topo = "star", csv_path, summary_path;
    int sim_n = 7, runs = 100, delta_max = 2;
    double er_p = 0.3;
    std::string sim_file;
    std::uint64_t sim_seed = 0;
    bool unidirectional = false, decay = false, matched_mean = false, timings = false;
    double L0 = 409.6, c0 = 2.0;
    std::vector<std::string> consumers;
    simulate->add_option("--topology", topo, "star | clique | random_tree | erdos_renyi | from_file")
        ->check(CLI::IsMember({"star", "clique", "random_tree", "erdos_renyi", "from_file"}));
    simulate->add_option("--n", sim_n, "node count");
    simulate->add_option("--p", er_p, "Erdos-Renyi edge probability");
    simulate->add_option("--file", sim_file, "network file for from_file");
    simulate->add_option("--runs", runs, "number of runs");
    simulate->add_option("--seed", sim_seed, "master seed");
    simulate->add_option("--delta-max", delta_max, "largest delta probed for delta_star");
    simulate->add_flag("--unidirectional", unidirectional, "single arc per link");
    simulate->add_flag("--distance-decay", decay, "penalties decay with consumer distance");
    simulate->add_flag("--matched-mean", matched_mean, "uniform benchmark matching the decay mean");
    simulate->add_option("--L0", L0, "decay scale");
    simulate->add_option("--c0", c0, "decay base");
    simulate->add_option("--consumers", consumers, "consumer-facing node labels (indices)");
    simulate->add_option("--csv", csv_path, "CSV output path")->required();
    simulate->add_option("--summary", summary_path, "summary JSON path");
    simulate->add_flag("--timings", timings, "record wall-clock ms per stage (not byte-stable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // --help goes to stdout with exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // bad flags are validation errors
    }
    global_tolerance() = tolerance;

    try {
        if (solve->parsed()) {
            SecurityNetwork net = load_network_file(input);
            StrategyResult ind = independent_secure_set(net);
            StrategyResult opt = network_optimal(net);
            json j;
            j["independent"] = {{"secured", coalition_labels(net, ind.secured)},
                                {"cost", ind.cost}};
            j["network_optimal"] = {{"secured", coalition_labels(net, opt.secured)},
                                    {"cost", opt.cost},
                                    {"nash", is_nash(net, opt.profile)}};
            io.emit(std::move(j), &net);
            return 0;
        }
        if (coal->parsed()) {
            SecurityNetwork net = load_network_file(input);
            Coalition s = parse_members(net, members);
            StrategyResult r = oracle ? brute_force_coalition_cost(net, s) : coalition_cost(net, s);
            json j;
            j["cost"] = r.cost;
            j["secured"] = coalition_labels(net, r.secured);
            io.emit(std::move(j), &net);
            return 0;
        }
        if (shap->parsed()) {
            SecurityNetwork net = load_network_file(input);
            json j;
            if (mode == "exact") {
                j = allocation_json(net, shapley_exact(net));
            } else if (mode == "closed") {
                if (!shapley_closed_form_applicable(net))
                    return nonexistent(io, net,
                                       "closed form requires L_i > theta_i + incoming xi for all i");
                j = allocation_json(net, shapley_closed_form(net));
            } else {
                MonteCarloShapley mc = shapley_monte_carlo(net, samples, seed);
                j = allocation_json(net, mc.allocation);
                json err = json::object();
                for (int i = 0; i < net.n(); ++i) err[net.labels[i]] = mc.std_error[i];
                j["std_error"] = err;
                j["samples"] = mc.samples;
            }
            j["mode"] = mode;
            io.emit(std::move(j), &net);
            return 0;
        }
        if (core->parsed()) {
            SecurityNetwork net = load_network_file(input);
            std::ifstream in(alloc_file);
            if (!in) throw ValidationError("cannot open allocation file: " + alloc_file);
            json ja = json::parse(in, nullptr, true);
            Allocation alloc{std::vector<double>(net.n(), 0.0)};
            for (int i = 0; i < net.n(); ++i) {
                if (!ja.contains(net.labels[i]))
                    throw ValidationError("allocation missing node '" + net.labels[i] + "'");
                alloc.shares[i] = ja[net.labels[i]].get<double>();
                alloc.total += alloc.shares[i];
            }
            json j;
            j["in_core"] = is_core_allocation(net, alloc);
            io.emit(std::move(j), &net);
            return 0;
        }
        if (extreme->parsed()) {
            SecurityNetwork net = load_network_file(input);
            std::vector<int> perm;
            for (const std::string& lbl : order) {
                auto it = std::find(net.labels.begin(), net.labels.end(), lbl);
                if (it == net.labels.end()) throw ValidationError("unknown node '" + lbl + "'");
                perm.push_back(int(it - net.labels.begin()));
            }
            json j = allocation_json(net, extreme_core_allocation(net, perm));
            io.emit(std::move(j), &net);
            return 0;
        }
        if (agree->parsed()) {
            SecurityNetwork net = load_network_file(input);
            ReducedAllocation r = agreeable_allocation_reduced(net);
            if (!r.allocation) return nonexistent(io, net, r.reason);
            json j = allocation_json(net, *r.allocation);
            j["removed"] = coalition_labels(net, r.removed);
            io.emit(std::move(j), &net);
            return 0;
        }
        if (dagree->parsed()) {
            SecurityNetwork net = load_network_file(input);
            ReducedAllocation r = delta_agreeable_allocation_reduced(net, delta, cap);
            if (!r.allocation) return nonexistent(io, net, r.reason);
            json j = allocation_json(net, *r.allocation);
            j["removed"] = coalition_labels(net, r.removed);
            j["delta"] = delta;
            io.emit(std::move(j), &net);
            return 0;
        }
        if (pubeq->parsed()) {
            SecurityNetwork net = load_network_file(input);
            PartitionStructure rho = partition.empty() ? PartitionStructure::singletons(net.n())
                                                       : parse_partition(net, partition);
            EquilibriumState eq = public_coalition_equilibrium(net, rho);
            json j;
            j["secured"] = coalition_labels(net, eq.secured);
            j["rounds"] = eq.rounds;
            io.emit(std::move(j), &net);
            return 0;
        }
        if (pcost->parsed()) {
            SecurityNetwork net = load_network_file(input);
            PartitionStructure rho = parse_partition(net, pc_partition);
            Coalition s = parse_members(net, pc_members);
            double c = pc_partial ? partial_partition_cost(net, s, rho)
                                  : partition_cost(net, s, rho);
            json j;
            j["cost"] = c;
            io.emit(std::move(j), &net);
            return 0;
        }
        if (stab->parsed()) {
            SecurityNetwork net = load_network_file(input);
            std::optional<DeviationReport> rep =
                stab_partial ? partial_grand_coalition_deviation_check(net, singleton_residuals)
                             : grand_coalition_deviation_check(net, singleton_residuals);
            json j;
            j["stable"] = !rep.has_value();
            if (rep) {
                json blocks = json::array();
                for (const Coalition& b : rep->blocking_partition)
                    blocks.push_back(coalition_labels(net, b));
                j["blocking_partition"] = blocks;
                j["bound_sum"] = rep->bound_sum;
                j["grand_cost"] = rep->grand_cost;
            }
            io.emit(std::move(j), &net);
            return 0;
        }
        if (pagree->parsed()) {
            SecurityNetwork net = load_network_file(input);
            if (!public_override.empty()) net.public_set = parse_members(net, public_override);
            ReductionResult red = reduce_network(net);
            std::optional<Allocation> inner = partial_agreeable_allocation(red.network);
            if (!inner) return nonexistent(io, net, "partial-information family does not cover N");
            std::vector<double> shares(net.n(), 0.0);
            for (int i : red.removed.members()) shares[i] = net.penalty[i];
            for (int k = 0; k < int(red.kept_original.size()); ++k)
                shares[red.kept_original[k]] = inner->shares[k];
            json j = allocation_json(net, Allocation(std::move(shares)));
            j["removed"] = coalition_labels(net, red.removed);
            io.emit(std::move(j), &net);
            return 0;
        }
        if (pubagree->parsed()) {
            SecurityNetwork net = load_network_file(input);
            ReductionResult red = reduce_network(net);
            std::optional<Allocation> inner = public_agreeable_allocation(red.network);
            if (!inner) return nonexistent(io, net, "public-information family does not cover N");
            std::vector<double> shares(net.n(), 0.0);
            for (int i : red.removed.members()) shares[i] = net.penalty[i];
            for (int k = 0; k < int(red.kept_original.size()); ++k)
                shares[red.kept_original[k]] = inner->shares[k];
            json j = allocation_json(net, Allocation(std::move(shares)));
            j["removed"] = coalition_labels(net, red.removed);
            io.emit(std::move(j), &net);
            return 0;
        }
        if (kcore->parsed()) {
            SecurityNetwork net = load_network_file(input);
            std::vector<int> core = core_numbers(net);
            json j;
            json per = json::object();
            for (int i = 0; i < net.n(); ++i) per[net.labels[i]] = core[i];
            j["core_number"] = per;
            if (kvalue >= 1) {
                std::optional<Coalition> kc = has_k_core(net, kvalue);
                j["k"] = kvalue;
                j["k_core"] = kc ? coalition_labels(net, *kc) : json::array();
                j["has_k_core"] = kc.has_value();
            }
            io.emit(std::move(j), &net);
            return 0;
        }
        if (predict->parsed()) {
            SecurityNetwork net = load_network_file(input);
            ExistencePrediction p = predict_agreeable_existence(net);
            json j;
            j["prediction"] = to_string(p);
            io.emit(std::move(j), &net);
            return 0;
        }
        if (reduce->parsed()) {
            SecurityNetwork net = load_network_file(input);
            ReductionResult red = reduce_network(net);
            json j;
            j["removed"] = coalition_labels(net, red.removed);
            j["network"] = json::parse(serialize_network(red.network));
            io.emit(std::move(j), &net);
            return 0;
        }
        if (simulate->parsed()) {
            sim::ExperimentConfig cfg;
            if (topo == "star")
                cfg.topology = sim::Topology::star(sim_n);
            else if (topo == "clique")
                cfg.topology = sim::Topology::clique(sim_n);
            else if (topo == "random_tree")
                cfg.topology = sim::Topology::random_tree(sim_n);
            else if (topo == "erdos_renyi")
                cfg.topology = sim::Topology::erdos_renyi(sim_n, er_p);
            else
                cfg.topology = sim::Topology::from_file(sim_file);
            cfg.bidirectional = !unidirectional;
            if (decay) {
                std::vector<int> cons;
                for (const std::string& c : consumers) cons.push_back(std::stoi(c));
                if (cons.empty()) cons = {0};
                cfg.scheme = sim::CostScheme::distance_decay(L0, c0, cons);
                cfg.scheme.matched_mean_benchmark = matched_mean;
            }
            cfg.runs = runs;
            cfg.seed = sim_seed;
            cfg.delta_max = delta_max;
            cfg.timings = timings;
            cfg.jobs = jobs;
            sim::ExperimentResult res = sim::run_experiment(cfg);
            std::ofstream csv(csv_path);
            if (!csv) throw ValidationError("cannot write CSV file: " + csv_path);
            csv << res.csv();
            if (!summary_path.empty()) {
                std::ofstream sj(summary_path);
                if (!sj) throw ValidationError("cannot write summary file: " + summary_path);
                sj << res.summary_json() << "\n";
            }
            json j;
            j["runs"] = cfg.runs;
            j["agreeable_rate"] = res.agreeable_rate;
            j["shapley_cf_rate"] = res.shapley_cf_rate;
            j["csv"] = csv_path;
            // no network input here; the audit hash covers the configuration
            std::string cfg_key = cfg.topology.describe() + "|" +
                                  std::to_string(cfg.seed) + "|" + std::to_string(cfg.runs) +
                                  "|" + std::to_string(cfg.delta_max) +
                                  (cfg.bidirectional ? "|bi" : "|uni");
            j["input_hash"] = Io::to_hex(fnv1a(cfg_key));
            io.emit(std::move(j), nullptr);
            return 0;
        }
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
