#ifndef INTERDEP_MODEL_HPP
#define INTERDEP_MODEL_HPP

#include "interdep/common.hpp"

#include <optional>
#include <string>
#include <vector>

namespace interdep {

struct Arc {
    NodeId from = 0;
    NodeId to = 0;
    double xi = 0.0; // cost paid by `to` to secure the link against `from`
};

// The game instance: directed graph with per-node intrinsic cost theta and
// expected penalty L, per-arc extrinsic cost xi, and an optional public set P.
// Immutable after construction; all operations are pure functions over const&.
struct SecurityNetwork {
    std::vector<std::string> labels;   // dense ids 0..n-1, sorted label order
    std::vector<double> theta;         // >= 0
    std::vector<double> penalty;       // L_i >= 0
    std::vector<Arc> arcs;             // no self-loops, one arc per ordered pair
    Coalition public_set;              // P; empty => private model, full => public

    std::vector<std::vector<int>> in_arcs;  // arc indices with to == i
    std::vector<std::vector<int>> out_arcs; // arc indices with from == i

    int n() const { return int(theta.size()); }
    int m() const { return int(arcs.size()); }

    double in_xi_sum(NodeId i) const {
        double s = 0.0;
        for (int a : in_arcs[i]) s += arcs[a].xi;
        return s;
    }
    // neighbors N(i) = N+(i) union N-(i)
    Coalition neighbors(NodeId i) const;

    void rebuild_adjacency();
    // throws ValidationError when an invariant fails, naming the element
    void validate() const;
};

// Convenience builder used by tests and generators. Arcs as (from, to, xi).
SecurityNetwork make_network(std::vector<double> theta, std::vector<double> penalty,
                             std::vector<Arc> arcs,
                             std::vector<std::string> labels = {});

// Binary intrinsic action x per node and link action y per arc.
struct SecurityProfile {
    std::vector<std::uint8_t> x;       // per node
    std::vector<std::uint8_t> y;       // per arc index: y[a] is y_{from,to}

    static SecurityProfile idle(const SecurityNetwork& net) {
        return SecurityProfile{std::vector<std::uint8_t>(net.n(), 0),
                               std::vector<std::uint8_t>(net.m(), 0)};
    }
};

// Disjoint coalitions covering N.
struct PartitionStructure {
    std::vector<Coalition> blocks;

    static PartitionStructure singletons(int n);
    static PartitionStructure grand(int n);
    // {S, N\S} or {S} + singletons, used by deviation checks
    static PartitionStructure split(const Coalition& s, bool singleton_residuals = false);

    void validate(int n) const;
    // index of the block containing the coalition S exactly, or -1
    int find_block(const Coalition& s) const;
};

// Security state: sigma_i = 1 iff x_i = 1 and y_ji = 1 for every in-neighbor
// j believed unsecured. `beliefs[a]` is sigma_{from(a), to(a)} for arc a.
std::vector<std::uint8_t> security_state(const SecurityNetwork& net, const SecurityProfile& p,
                                         const std::vector<std::uint8_t>& beliefs);

// Expected security cost: L_i (1 - sigma_i) + theta_i x_i + sum of xi_ji y_ji.
double player_cost(const SecurityNetwork& net, const SecurityProfile& p,
                   const std::vector<std::uint8_t>& beliefs, NodeId i);

// Actual (mutually consistent) security states of a concrete profile: risk
// originates at players with x_i = 0 and propagates along unprotected links,
// so this is the greatest fixed point of the state map under accurate beliefs.
std::vector<std::uint8_t> consistent_states(const SecurityNetwork& net, const SecurityProfile& p);

struct ReductionResult {
    SecurityNetwork network;        // all remaining players secured in its optimum
    Coalition removed;              // original ids of dropped players
    std::vector<int> kept_original; // kept_original[new_id] = original id
};

// Drops every player unsecured under the network-optimal strategy, folding each
// dropped i's outgoing xi_ij into theta_j; iterates until the optimum secures
// every remaining node. Removed players are owed exactly L_i by any core
// allocation, so callers append those shares when mapping results back.
ReductionResult reduce_network(const SecurityNetwork& net);

// --- file format ---------------------------------------------------------

// JSON schema: {"nodes":[{"id","theta","L"}], "arcs":[{"from","to","xi"}], "public":[...]?}
SecurityNetwork load_network(const std::string& json_text);
SecurityNetwork load_network_file(const std::string& path);
std::string serialize_network(const SecurityNetwork& net);

// FNV-1a over the canonical serialization; used for audit trails.
std::uint64_t network_hash(const SecurityNetwork& net);
std::uint64_t fnv1a(const std::string& bytes);

} // namespace interdep

#endif
