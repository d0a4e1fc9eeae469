#ifndef INTERDEP_COOPGAME_HPP
#define INTERDEP_COOPGAME_HPP

#include "interdep/strategies.hpp"

#include <optional>

namespace interdep {

// Exact Shapley value over all 2^n coalition costs (memoized min cuts).
// Guard n <= 16.
Allocation shapley_exact(const SecurityNetwork& net);

// Closed form theta_i + in-xi/2 - out-xi/2; requires L_i > theta_i + sum of
// in-xi for every i (equivalently S_I = S_star = N), else ValidationError.
Allocation shapley_closed_form(const SecurityNetwork& net);
bool shapley_closed_form_applicable(const SecurityNetwork& net);

struct MonteCarloShapley {
    Allocation allocation;
    std::vector<double> std_error; // per player, of the mean
    std::uint64_t samples = 0;
};
// Unbiased permutation-sampling estimator; deterministic for a fixed seed.
MonteCarloShapley shapley_monte_carlo(const SecurityNetwork& net, std::uint64_t samples,
                                      std::uint64_t seed);

// Marginal-worth vector along a permutation; n min-cut evaluations. Always
// an extreme point of the core by convexity.
Allocation extreme_core_allocation(const SecurityNetwork& net, const std::vector<int>& perm);

// Efficiency plus all 2^n coalition inequalities. Guard n <= 20.
bool is_core_allocation(const SecurityNetwork& net, const Allocation& alloc);

// Submodularity verifier via the equivalent pairwise local condition
// c(S+i) + c(S+j) >= c(S+i+j) + c(S). Guard n <= 12.
bool is_submodular(const SecurityNetwork& net);

// G(i) and its union Gbar(i) from the bilateral implementability analysis.
struct MinimalRationalSecuritySets {
    NodeId player = 0;
    std::vector<Coalition> sets; // minimal P with i in Upsilon(P + i), by increasing size
    Coalition closure;           // union of the sets
};
MinimalRationalSecuritySets minimal_rational_security_sets(const SecurityNetwork& net, NodeId i);

// The known conditions are sufficient in each direction only, so a gap
// remains between them.
enum class BilateralStatus { Implementable, NotImplementable, Indeterminate };
BilateralStatus shapley_bilateral_classify(const SecurityNetwork& net);

const char* to_string(BilateralStatus s);

} // namespace interdep

#endif
