#ifndef INTERDEP_INFOMODELS_HPP
#define INTERDEP_INFOMODELS_HPP

#include "interdep/strategies.hpp"

#include <optional>
#include <string>

namespace interdep {

struct EquilibriumState {
    Coalition secured;
    int rounds = 0;
};

// Iterated best responses under full observability: i secures once
// L_i >= theta_i + sum of xi over in-arcs from currently unsecured players.
EquilibriumState public_independent_equilibrium(const SecurityNetwork& net);

// Round-robin coalition best responses (each block solves its min cut given the
// currently secured outsiders) to a fixed point, in the listed block order.
EquilibriumState public_coalition_equilibrium(const SecurityNetwork& net,
                                              const PartitionStructure& rho);

// c-hat(S; rho): block members pay theta when secured, L when not, and xi on
// in-arcs from players unsecured in the joint equilibrium.
double partition_cost(const SecurityNetwork& net, const Coalition& s,
                      const PartitionStructure& rho);

// Partial-information analogues: only public players' secured status is
// observable outside their own coalition (net.public_set).
EquilibriumState partial_independent_equilibrium(const SecurityNetwork& net);
EquilibriumState partial_coalition_equilibrium(const SecurityNetwork& net,
                                               const PartitionStructure& rho);
// c-tilde(S; rho) per the partial cost: secured members pay xi on in-arcs from
// non-members that are private or publicly unsecured, and from unsecured members.
double partial_partition_cost(const SecurityNetwork& net, const Coalition& s,
                              const PartitionStructure& rho);

// True iff no block could strictly lower its own cost by re-optimizing against
// the state; used as the post-hoc equilibrium audit.
bool audit_coalition_equilibrium(const SecurityNetwork& net, const PartitionStructure& rho,
                                 const Coalition& secured, bool partial_info);

struct DeviationReport {
    std::vector<Coalition> blocking_partition; // proper coalitions whose bounds cannot be met
    double bound_sum = 0.0;                    // sum of their deviation costs
    double grand_cost = 0.0;                   // cost the grand coalition must allocate
};
// Searches for a partition of N into proper coalitions whose guaranteed
// deviation costs sum below the grand-coalition cost (an empty-core
// certificate). Deviators face residuals grouped as N\S by default. n <= 16.
std::optional<DeviationReport> grand_coalition_deviation_check(const SecurityNetwork& net,
                                                               bool singleton_residuals = false);
std::optional<DeviationReport>
partial_grand_coalition_deviation_check(const SecurityNetwork& net,
                                        bool singleton_residuals = false);

// Family T_1..T_l alternating public-equilibrium closures (odd) and private
// coalition-membership rounds (even). Requires a pre-reduced network.
struct TFamily {
    std::vector<Coalition> sets;
    Coalition covered;
    bool exists = false;
};
TFamily public_T_family(const SecurityNetwork& net);

// Agreeable allocation under public information (family + per-level updates
// with the even-level rebate pass). nullopt when the family does not cover N.
std::optional<Allocation> public_agreeable_allocation(const SecurityNetwork& net);

// Partial-information agreeable allocation; coincides with the private closed
// form at P = empty and with the public allocation at P = N.
std::optional<Allocation> partial_agreeable_allocation(const SecurityNetwork& net);

// Family behind partial_agreeable_allocation, exposed for existence checks.
struct PartialFamily {
    std::vector<Coalition> sets;
    std::vector<bool> equilibrium_level; // true = equilibrium closure, false = credit round
    Coalition covered;
    bool exists = false;
};
PartialFamily partial_T_family(const SecurityNetwork& net);

} // namespace interdep

#endif
