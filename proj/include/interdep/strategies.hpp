#ifndef INTERDEP_STRATEGIES_HPP
#define INTERDEP_STRATEGIES_HPP

#include "interdep/mincut.hpp"
#include "interdep/model.hpp"

#include <optional>

namespace interdep {

struct StrategyResult {
    Coalition secured;       // S_I, S_star, or Upsilon(S)
    double cost = 0.0;       // total expected cost of the relevant players
    SecurityProfile profile; // x_i = 1 iff secured; y_ji = 1 iff i secured, j unsecured
};

// i is in S_I iff L_i >= theta_i + sum of in-xi (weak inequality; ties secure).
StrategyResult independent_secure_set(const SecurityNetwork& net);

// Network optimum: secured = sink side of the canonical min cut, cost = U(G).
StrategyResult network_optimal(const SecurityNetwork& net);

// c(S) and Upsilon(S) via a min cut with N\S forced onto the source side.
StrategyResult coalition_cost(const SecurityNetwork& net, const Coalition& s);

// Enumeration oracle for c(S): minimizes the closed formula over all secured
// subsets of S. Ties prefer the larger secured set, then the lexicographically
// smallest one, matching the canonical-cut convention. Guard |S| <= 25.
StrategyResult brute_force_coalition_cost(const SecurityNetwork& net, const Coalition& s);

// True iff no single player can strictly lower its cost by changing (x_i, y_.i),
// others' actions fixed, with mutually consistent resulting states. Deviator
// in-degree guard 20.
bool is_nash(const SecurityNetwork& net, const SecurityProfile& profile);

// Summed member costs under worst-case beliefs about non-members;
// used by tests to cross-check StrategyResult.cost against its profile.
double profile_cost_sum(const SecurityNetwork& net, const SecurityProfile& p, const Coalition& s);

// Lazy memo of coalition costs keyed by bitmask, for the exponential
// enumerations. Guard: n <= 20 (2^20 table entries).
class CoalitionCostCache {
public:
    explicit CoalitionCostCache(const SecurityNetwork& net);

    double cost(std::uint32_t mask);
    const SecurityNetwork& net() const { return net_; }
    int n() const { return net_.n(); }

private:
    const SecurityNetwork& net_;
    flow::AuxiliaryGraph aux_;
    std::vector<double> table_;
};

} // namespace interdep

#endif
