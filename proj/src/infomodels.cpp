#include "interdep/infomodels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace interdep {

namespace {

// Best response of block S given the believed-secured outsiders: the members'
// min cut on the induced sub-instance, worst-case in-links folded into theta.
Coalition block_best_response(const SecurityNetwork& net, const Coalition& s,
                              const Coalition& believed_secured_outside) {
    std::vector<int> mem = s.members();
    std::vector<int> sub_id(net.n(), -1);
    for (int k = 0; k < int(mem.size()); ++k) sub_id[mem[k]] = k;

    SecurityNetwork sub;
    sub.theta.reserve(mem.size());
    for (int i : mem) {
        double th = net.theta[i];
        for (int a : net.in_arcs[i]) {
            int j = net.arcs[a].from;
            if (!s.contains(j) && !believed_secured_outside.contains(j)) th += net.arcs[a].xi;
        }
        sub.theta.push_back(th);
        sub.penalty.push_back(net.penalty[i]);
        sub.labels.push_back(net.labels[i]);
    }
    for (const Arc& a : net.arcs)
        if (s.contains(a.from) && s.contains(a.to))
            sub.arcs.push_back({sub_id[a.from], sub_id[a.to], a.xi});
    sub.public_set = Coalition(sub.n());
    sub.rebuild_adjacency();

    Coalition out(net.n());
    for (int k : network_optimal(sub).secured.members()) out.add(mem[k]);
    return out;
}

double block_cost(const SecurityNetwork& net, const Coalition& s, const Coalition& secured,
                  const Coalition& believed_secured_outside) {
    double total = 0.0;
    for (int i : s.members()) {
        if (!secured.contains(i)) {
            total += net.penalty[i];
            continue;
        }
        total += net.theta[i];
        for (int a : net.in_arcs[i]) {
            int j = net.arcs[a].from;
            bool safe = s.contains(j) ? secured.contains(j) : believed_secured_outside.contains(j);
            if (!safe) total += net.arcs[a].xi;
        }
    }
    return total;
}

// Fixed point of round-robin block best responses. `visible` filters which
// players' secured status propagates outside their own block (all players in
// the public model, only P in the partial model).
EquilibriumState equilibrium_fixed_point(const SecurityNetwork& net, const PartitionStructure& rho,
                                         const Coalition& visible) {
    rho.validate(net.n());
    Coalition sec(net.n());
    int rounds = 0;
    for (;;) {
        bool changed = false;
        for (const Coalition& block : rho.blocks) {
            Coalition outside_vis = sec.minus(block) & visible;
            Coalition resp = block_best_response(net, block, outside_vis);
            Coalition cur = sec & block;
            if (resp != cur) {
                sec = sec.minus(block) | resp;
                changed = true;
            }
        }
        ++rounds;
        if (!changed) break;
        if (rounds > net.n() + 3)
            throw std::logic_error("coalition equilibrium failed to converge");
    }
    return EquilibriumState{sec, rounds};
}

// Closure of the singleton best responses: admit i once its securing cost
// against non-visible-or-unsecured in-neighbors drops to L_i. `base` players
// count as secured from the start.
Coalition independent_closure(const SecurityNetwork& net, const Coalition& base,
                              const Coalition& visible) {
    Coalition sec = base;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < net.n(); ++i) {
            if (sec.contains(i)) continue;
            double cost = net.theta[i];
            for (int a : net.in_arcs[i]) {
                int j = net.arcs[a].from;
                if (!(visible.contains(j) && sec.contains(j))) cost += net.arcs[a].xi;
            }
            if (leq(cost, net.penalty[i])) {
                sec.add(i);
                changed = true;
            }
        }
    }
    return sec;
}

void require_pre_reduced(const SecurityNetwork& net, const char* op) {
    if (!network_optimal(net).secured.is_full())
        throw ValidationError(std::string(op) +
                              " requires a pre-reduced network (run reduce_network first)");
}

// credit-membership round shared with the private family: marginal securing
// cost of i against the covered base, relief on covered out-neighbors included
double credit_join_cost(const SecurityNetwork& net, const Coalition& covered, int i) {
    double c = net.theta[i];
    for (int a : net.in_arcs[i])
        if (!covered.contains(net.arcs[a].from)) c += net.arcs[a].xi;
    for (int a : net.out_arcs[i])
        if (covered.contains(net.arcs[a].to)) c -= net.arcs[a].xi;
    return c;
}

} // namespace

EquilibriumState public_independent_equilibrium(const SecurityNetwork& net) {
    Coalition sec(net.n());
    int rounds = 0;
    for (;;) {
        Coalition next = sec;
        for (int i = 0; i < net.n(); ++i) {
            if (next.contains(i)) continue;
            double cost = net.theta[i];
            for (int a : net.in_arcs[i])
                if (!sec.contains(net.arcs[a].from)) cost += net.arcs[a].xi;
            if (leq(cost, net.penalty[i])) next.add(i);
        }
        ++rounds;
        if (next == sec) break;
        sec = next;
    }
    return EquilibriumState{sec, rounds};
}

EquilibriumState public_coalition_equilibrium(const SecurityNetwork& net,
                                              const PartitionStructure& rho) {
    return equilibrium_fixed_point(net, rho, Coalition::all(net.n()));
}

EquilibriumState partial_independent_equilibrium(const SecurityNetwork& net) {
    // phase structure of the two-step characterization collapses into one
    // closure because private players' securing is invisible to everyone else
    Coalition sec(net.n());
    int rounds = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        ++rounds;
        for (int i = 0; i < net.n(); ++i) {
            if (sec.contains(i)) continue;
            double cost = net.theta[i];
            for (int a : net.in_arcs[i]) {
                int j = net.arcs[a].from;
                if (!(net.public_set.contains(j) && sec.contains(j))) cost += net.arcs[a].xi;
            }
            if (leq(cost, net.penalty[i])) {
                sec.add(i);
                changed = true;
            }
        }
    }
    return EquilibriumState{sec, rounds};
}

EquilibriumState partial_coalition_equilibrium(const SecurityNetwork& net,
                                               const PartitionStructure& rho) {
    return equilibrium_fixed_point(net, rho, net.public_set);
}

namespace {

double partition_cost_impl(const SecurityNetwork& net, const Coalition& s,
                           const PartitionStructure& rho, bool partial) {
    rho.validate(net.n());
    if (s.empty()) return 0.0; // an empty coalition never appears as a block but costs nothing
    if (rho.find_block(s) < 0) throw ValidationError("coalition is not a block of the partition");
    EquilibriumState eq = partial ? partial_coalition_equilibrium(net, rho)
                                  : public_coalition_equilibrium(net, rho);
    double total = 0.0;
    for (int i : s.members()) {
        if (!eq.secured.contains(i)) {
            total += net.penalty[i];
            continue;
        }
        total += net.theta[i];
        for (int a : net.in_arcs[i]) {
            int j = net.arcs[a].from;
            bool safe;
            if (s.contains(j))
                safe = eq.secured.contains(j); // member states are known exactly
            else if (partial)
                safe = net.public_set.contains(j) && eq.secured.contains(j);
            else
                safe = eq.secured.contains(j);
            if (!safe) total += net.arcs[a].xi;
        }
    }
    return total;
}

std::optional<DeviationReport> deviation_check_impl(const SecurityNetwork& net,
                                                    bool singleton_residuals, bool partial) {
    const int n = net.n();
    if (n > 16) throw GuardExceeded("deviation check limited to n <= 16");
    if (n <= 1) return std::nullopt;

    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    auto coalition_of = [&](std::uint32_t mask) {
        Coalition c(n);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) c.add(i);
        return c;
    };

    double grand = partition_cost_impl(net, Coalition::all(n), PartitionStructure::grand(n), partial);

    std::vector<double> bound(full + 1, 0.0);
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        Coalition s = coalition_of(mask);
        PartitionStructure rho = PartitionStructure::split(s, singleton_residuals);
        bound[mask] = partition_cost_impl(net, s, rho, partial);
    }

    // cheapest partition of each mask into proper coalitions
    std::vector<double> f(full + 1, 0.0);
    std::vector<std::uint32_t> pick(full + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        double best = (mask == full) ? std::numeric_limits<double>::infinity() : bound[mask];
        std::uint32_t best_pick = mask;
        std::uint32_t low = mask & (~mask + 1);
        for (std::uint32_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low)) continue; // fix the lowest element to avoid double counting
            double v = f[sub] + f[mask & ~sub];
            if (v < best) {
                best = v;
                best_pick = sub;
            }
        }
        f[mask] = best;
        pick[mask] = best_pick;
    }
    if (!lt(f[full], grand)) return std::nullopt;

    DeviationReport rep;
    rep.grand_cost = grand;
    rep.bound_sum = f[full];
    std::vector<std::uint32_t> stack{full};
    while (!stack.empty()) {
        std::uint32_t mask = stack.back();
        stack.pop_back();
        if (pick[mask] == mask) {
            rep.blocking_partition.push_back(coalition_of(mask));
        } else {
            stack.push_back(pick[mask]);
            stack.push_back(mask & ~pick[mask]);
        }
    }
    return rep;
}

} // namespace

double partition_cost(const SecurityNetwork& net, const Coalition& s,
                      const PartitionStructure& rho) {
    return partition_cost_impl(net, s, rho, false);
}

double partial_partition_cost(const SecurityNetwork& net, const Coalition& s,
                              const PartitionStructure& rho) {
    return partition_cost_impl(net, s, rho, true);
}

bool audit_coalition_equilibrium(const SecurityNetwork& net, const PartitionStructure& rho,
                                 const Coalition& secured, bool partial_info) {
    Coalition visible = partial_info ? net.public_set : Coalition::all(net.n());
    for (const Coalition& block : rho.blocks) {
        Coalition outside_vis = secured.minus(block) & visible;
        Coalition resp = block_best_response(net, block, outside_vis);
        double current = block_cost(net, block, secured & block, outside_vis);
        double better = block_cost(net, block, resp, outside_vis);
        if (lt(better, current)) return false;
    }
    return true;
}

std::optional<DeviationReport> grand_coalition_deviation_check(const SecurityNetwork& net,
                                                               bool singleton_residuals) {
    return deviation_check_impl(net, singleton_residuals, false);
}

std::optional<DeviationReport>
partial_grand_coalition_deviation_check(const SecurityNetwork& net, bool singleton_residuals) {
    return deviation_check_impl(net, singleton_residuals, true);
}

TFamily public_T_family(const SecurityNetwork& net) {
    require_pre_reduced(net, "public_T_family");
    TFamily fam;
    fam.covered = Coalition(net.n());
    Coalition all = Coalition::all(net.n());
    while (!fam.covered.is_full()) {
        // odd level: equilibrium closure given the covered coalition
        Coalition odd = independent_closure(net, fam.covered, all).minus(fam.covered);
        fam.covered |= odd;
        // even level: private credit-membership round
        Coalition even(net.n());
        for (int i = 0; i < net.n(); ++i)
            if (!fam.covered.contains(i) &&
                leq(credit_join_cost(net, fam.covered, i), net.penalty[i]))
                even.add(i);
        fam.covered |= even;
        if (odd.empty() && even.empty()) break;
        fam.sets.push_back(std::move(odd));
        fam.sets.push_back(std::move(even));
    }
    while (!fam.sets.empty() && fam.sets.back().empty()) fam.sets.pop_back();
    fam.exists = fam.covered.is_full();
    return fam;
}

std::optional<Allocation> public_agreeable_allocation(const SecurityNetwork& net) {
    TFamily fam = public_T_family(net);
    if (!fam.exists) return std::nullopt;
    const int n = net.n();
    const int levels = int(fam.sets.size());

    std::vector<int> level_of(n, 0); // 1-based level index
    for (int k = 0; k < levels; ++k)
        for (int i : fam.sets[k].members()) level_of[i] = k + 1;

    auto in_level = [&](int node, int k) { return k >= 1 && k <= levels && fam.sets[k - 1].contains(node); };

    std::vector<double> shares(n, 0.0);
    for (int k = 1; k <= levels; ++k) {
        bool odd = (k % 2) == 1;
        for (int i : fam.sets[k - 1].members()) {
            double v = net.theta[i];
            if (odd) {
                for (int a : net.in_arcs[i])
                    if (level_of[net.arcs[a].from] > k) v += net.arcs[a].xi;
            } else {
                for (int a : net.in_arcs[i]) {
                    int lj = level_of[net.arcs[a].from];
                    if (lj > k + 1)
                        v += net.arcs[a].xi;
                    else if (lj == k)
                        v += net.arcs[a].xi / 2.0;
                }
                for (int a : net.out_arcs[i]) {
                    int lj = level_of[net.arcs[a].to];
                    if (lj < k)
                        v -= net.arcs[a].xi;
                    else if (lj == k)
                        v -= net.arcs[a].xi / 2.0;
                }
            }
            shares[i] = v;
        }
        if (!odd) {
            // rebate: the next (odd) level's securing relieves everyone covered earlier
            for (int i = 0; i < n; ++i) {
                int li = level_of[i];
                if (li == 0 || li >= k) continue;
                for (int a : net.in_arcs[i])
                    if (in_level(net.arcs[a].from, k + 1)) shares[i] -= net.arcs[a].xi;
            }
        }
    }
    return Allocation(std::move(shares));
}

PartialFamily partial_T_family(const SecurityNetwork& net) {
    require_pre_reduced(net, "partial_T_family");
    PartialFamily fam;
    fam.covered = Coalition(net.n());
    while (!fam.covered.is_full()) {
        Coalition eq = independent_closure(net, fam.covered, net.public_set).minus(fam.covered);
        fam.covered |= eq;
        Coalition cr(net.n());
        for (int i = 0; i < net.n(); ++i)
            if (!fam.covered.contains(i) &&
                leq(credit_join_cost(net, fam.covered, i), net.penalty[i]))
                cr.add(i);
        fam.covered |= cr;
        if (eq.empty() && cr.empty()) break;
        fam.sets.push_back(std::move(eq));
        fam.equilibrium_level.push_back(true);
        fam.sets.push_back(std::move(cr));
        fam.equilibrium_level.push_back(false);
    }
    while (!fam.sets.empty() && fam.sets.back().empty()) {
        fam.sets.pop_back();
        fam.equilibrium_level.pop_back();
    }
    fam.exists = fam.covered.is_full();
    return fam;
}

std::optional<Allocation> partial_agreeable_allocation(const SecurityNetwork& net) {
    PartialFamily fam = partial_T_family(net);
    if (!fam.exists) return std::nullopt;
    const int n = net.n();

    std::vector<int> level_of(n, 0);
    std::vector<bool> is_eq(n, false);
    for (int k = 0; k < int(fam.sets.size()); ++k)
        for (int i : fam.sets[k].members()) {
            level_of[i] = k + 1;
            is_eq[i] = fam.equilibrium_level[k];
        }

    std::vector<double> shares(net.theta); // every player carries its theta
    for (const Arc& arc : net.arcs) {
        int u = arc.from, v = arc.to;
        int ku = level_of[u], kv = level_of[v];
        if (ku > kv) {
            // v paid for this link until u joined; the relief goes to u when u
            // bargained its way in, and back to v when u secured in equilibrium
            if (!is_eq[u]) {
                shares[v] += arc.xi;
                shares[u] -= arc.xi;
            }
        } else if (ku == kv) {
            bool split = !is_eq[u] || !net.public_set.contains(u);
            if (split) {
                shares[v] += arc.xi / 2.0;
                shares[u] -= arc.xi / 2.0;
            }
        }
        // ku < kv: u already secured when v joined; nothing changes hands
    }
    return Allocation(std::move(shares));
}

} // namespace interdep
