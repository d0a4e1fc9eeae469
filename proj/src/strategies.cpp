#include "interdep/strategies.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace interdep {

namespace {

SecurityProfile profile_for_secured(const SecurityNetwork& net, const Coalition& secured) {
    SecurityProfile p = SecurityProfile::idle(net);
    for (int i : secured.members()) p.x[i] = 1;
    for (int a = 0; a < net.m(); ++a)
        if (secured.contains(net.arcs[a].to) && !secured.contains(net.arcs[a].from)) p.y[a] = 1;
    return p;
}

} // namespace

StrategyResult independent_secure_set(const SecurityNetwork& net) {
    StrategyResult r;
    r.secured = Coalition(net.n());
    r.cost = 0.0;
    for (int i = 0; i < net.n(); ++i) {
        double secure_cost = net.theta[i] + net.in_xi_sum(i);
        if (leq(secure_cost, net.penalty[i])) {
            r.secured.add(i);
            r.cost += secure_cost;
        } else {
            r.cost += net.penalty[i];
        }
    }
    // independent players secure every incoming link, not only links from unsecured
    r.profile = SecurityProfile::idle(net);
    for (int i : r.secured.members()) {
        r.profile.x[i] = 1;
        for (int a : net.in_arcs[i]) r.profile.y[a] = 1;
    }
    return r;
}

StrategyResult network_optimal(const SecurityNetwork& net) {
    flow::CutResult cut = flow::min_cut(flow::build_auxiliary(net), Coalition(net.n()));
    StrategyResult r;
    r.secured = cut.sink_players;
    r.cost = cut.value;
    r.profile = profile_for_secured(net, r.secured);
    return r;
}

StrategyResult coalition_cost(const SecurityNetwork& net, const Coalition& s) {
    Coalition forced = s.complement();
    flow::CutResult cut = flow::min_cut(flow::build_auxiliary(net), forced);
    double outside_penalty = 0.0;
    for (int v : forced.members()) outside_penalty += net.penalty[v];
    StrategyResult r;
    r.secured = cut.sink_players; // subset of S: forced nodes stay on the source side
    r.cost = cut.value - outside_penalty;
    r.profile = profile_for_secured(net, r.secured);
    return r;
}

StrategyResult brute_force_coalition_cost(const SecurityNetwork& net, const Coalition& s) {
    std::vector<int> mem = s.members();
    const int k = int(mem.size());
    if (k > 25) throw GuardExceeded("brute-force coalition cost limited to |S| <= 25");

    double best = 0.0;
    std::uint32_t best_sub = 0;
    bool have = false;
    Coalition secured(net.n());
    for (std::uint32_t sub = 0; sub < (1u << k); ++sub) {
        Coalition tilde(net.n());
        for (int b = 0; b < k; ++b)
            if (sub >> b & 1) tilde.add(mem[b]);
        double cost = 0.0;
        for (int b = 0; b < k; ++b) {
            int i = mem[b];
            if (tilde.contains(i)) {
                cost += net.theta[i];
                for (int a : net.in_arcs[i])
                    if (!tilde.contains(net.arcs[a].from)) cost += net.arcs[a].xi;
            } else {
                cost += net.penalty[i];
            }
        }
        bool better = !have || lt(cost, best);
        if (!better && have && approx_eq(cost, best)) {
            int pc_new = std::popcount(sub), pc_old = std::popcount(best_sub);
            if (pc_new > pc_old)
                better = true;
            else if (pc_new == pc_old)
                better = tilde.members() < secured.members(); // lexicographic member order
        }
        if (better) {
            best = cost;
            best_sub = sub;
            secured = tilde;
            have = true;
        }
    }
    StrategyResult r;
    r.secured = secured;
    r.cost = best;
    r.profile = profile_for_secured(net, secured);
    return r;
}

double profile_cost_sum(const SecurityNetwork& net, const SecurityProfile& p, const Coalition& s) {
    // worst-case beliefs outside S, actual states inside: members start from x
    // and lose their state while any unprotected in-link carries risk
    std::vector<std::uint8_t> sigma(net.n(), 0);
    for (int i : s.members()) sigma[i] = p.x[i];
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i : s.members()) {
            if (!sigma[i]) continue;
            for (int a : net.in_arcs[i]) {
                int j = net.arcs[a].from;
                bool believed_secured = s.contains(j) && sigma[j];
                if (!believed_secured && !p.y[a]) {
                    sigma[i] = 0;
                    changed = true;
                    break;
                }
            }
        }
    }
    double total = 0.0;
    for (int i : s.members()) {
        total += net.penalty[i] * (sigma[i] ? 0.0 : 1.0) + net.theta[i] * (p.x[i] ? 1.0 : 0.0);
        for (int a : net.in_arcs[i])
            if (p.y[a]) total += net.arcs[a].xi;
    }
    return total;
}

bool is_nash(const SecurityNetwork& net, const SecurityProfile& profile) {
    std::vector<std::uint8_t> sigma = consistent_states(net, profile);
    auto cost_of = [&](const SecurityProfile& p, const std::vector<std::uint8_t>& st, int i) {
        double c = net.penalty[i] * (st[i] ? 0.0 : 1.0) + net.theta[i] * (p.x[i] ? 1.0 : 0.0);
        for (int a : net.in_arcs[i])
            if (p.y[a]) c += net.arcs[a].xi;
        return c;
    };
    for (int i = 0; i < net.n(); ++i) {
        const int indeg = int(net.in_arcs[i].size());
        if (indeg > 20) throw GuardExceeded("is_nash deviator in-degree limited to 20");
        double current = cost_of(profile, sigma, i);
        SecurityProfile dev = profile;
        for (std::uint32_t choice = 0; choice < (2u << indeg); ++choice) {
            dev.x[i] = choice & 1;
            for (int b = 0; b < indeg; ++b) dev.y[net.in_arcs[i][b]] = (choice >> (b + 1)) & 1;
            std::vector<std::uint8_t> st = consistent_states(net, dev);
            if (lt(cost_of(dev, st, i), current)) return false;
        }
    }
    return true;
}

CoalitionCostCache::CoalitionCostCache(const SecurityNetwork& net)
    : net_(net), aux_(flow::build_auxiliary(net)) {
    if (net.n() > 20) throw GuardExceeded("coalition cost memo limited to n <= 20 (2^20 entries)");
    table_.assign(std::size_t(1) << net.n(), std::numeric_limits<double>::quiet_NaN());
}

double CoalitionCostCache::cost(std::uint32_t mask) {
    double& slot = table_[mask];
    if (!std::isnan(slot)) return slot;
    if (mask == 0) return slot = 0.0;
    Coalition forced(net_.n());
    double outside_penalty = 0.0;
    for (int i = 0; i < net_.n(); ++i)
        if (!(mask >> i & 1)) {
            forced.add(i);
            outside_penalty += net_.penalty[i];
        }
    slot = flow::min_cut(aux_, forced).value - outside_penalty;
    return slot;
}

} // namespace interdep
