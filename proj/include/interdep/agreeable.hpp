#ifndef INTERDEP_AGREEABLE_HPP
#define INTERDEP_AGREEABLE_HPP

#include "interdep/strategies.hpp"

#include <optional>
#include <string>

namespace interdep {

// All operations here require a pre-reduced network (every player secured under
// the network-optimal strategy); apply reduce_network first and map shares back.
bool is_pre_reduced(const SecurityNetwork& net);

// Ordered family S_1..S_l; S_1 = S_I, then level k admits i exactly when
//   L_i >= theta_i + sum of xi_ji over uncovered in-neighbors
//              - sum of xi_ij over covered out-neighbors,
// i.e. when i is secured under the coalition-optimal strategy of covered + {i}.
struct AgreeableFamily {
    std::vector<Coalition> sets;
    Coalition covered;
    bool exists = false; // covered == N
};
AgreeableFamily agreeable_family(const SecurityNetwork& net);

// Closed-form shares; equal to the average of extreme core allocations over
// all agreeable permutations. nullopt when the family does not cover N.
std::optional<Allocation> agreeable_allocation(const SecurityNetwork& net);

// Delta-minimal rational security sets for S: the smallest size
// delta* <= delta at which some V (|V| = delta*, V disjoint from S) satisfies
// c(S + V) < c(S) + sum of L_v strictly, together with every such V.
struct DeltaMrsResult {
    int achieved_delta = 0; // 0 <=> empty result
    std::vector<Coalition> sets;
};
DeltaMrsResult delta_mrs(const SecurityNetwork& net, const Coalition& s, int delta);

// Augmenting orders: every block order of the delta-MRS, every internal order
// of each novel element set, deduplicated. Fragments are sequences of node ids.
std::vector<std::vector<int>> valid_permutations(const SecurityNetwork& net, const Coalition& s,
                                                 int delta, std::uint64_t cap = 1'000'000);

struct DeltaAgreeableResult {
    std::optional<Allocation> allocation;
    std::uint64_t permutation_count = 0; // number of distinct delta-agreeable permutations
    std::string reason;                  // set when allocation is nullopt
};
// Stage-by-stage block construction with exact averaging over all
// delta-agreeable permutations. Exceeding `cap` permutations raises
// GuardExceeded; nonexistence is a nullopt result.
DeltaAgreeableResult delta_agreeable_allocation(const SecurityNetwork& net, int delta,
                                                std::uint64_t cap = 1'000'000);

// Existence decision only: runs the block stages without enumerating or
// averaging permutations, so no cap applies.
bool delta_agreeable_exists(const SecurityNetwork& net, int delta);

// Convenience wrappers used by the CLI: reduce, solve on the reduction, then
// report removed players with share L_i in the original indexing.
struct ReducedAllocation {
    std::optional<Allocation> allocation; // over the ORIGINAL node set
    Coalition removed;
    std::string reason;
};
ReducedAllocation agreeable_allocation_reduced(const SecurityNetwork& net);
ReducedAllocation delta_agreeable_allocation_reduced(const SecurityNetwork& net, int delta,
                                                     std::uint64_t cap = 1'000'000);

} // namespace interdep

#endif
