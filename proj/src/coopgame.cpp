#include "interdep/coopgame.hpp"

#include "interdep/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace interdep {

Allocation shapley_exact(const SecurityNetwork& net) {
    const int n = net.n();
    if (n > 16) throw GuardExceeded("exact Shapley limited to n <= 16");
    CoalitionCostCache cache(net);

    std::vector<long double> fact(n + 1, 1.0L);
    for (int k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;
    // weight of a coalition S containing i: (|S|-1)! (n-|S|)! / n!
    std::vector<long double> w(n + 1, 0.0L);
    for (int s = 1; s <= n; ++s) w[s] = fact[s - 1] * fact[n - s] / fact[n];

    std::vector<long double> phi(n, 0.0L);
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        double cs = cache.cost(mask);
        int size = std::popcount(mask);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) phi[i] += w[size] * (cs - cache.cost(mask & ~(1u << i)));
    }
    std::vector<double> shares(n);
    for (int i = 0; i < n; ++i) shares[i] = double(phi[i]);
    return Allocation(std::move(shares));
}

bool shapley_closed_form_applicable(const SecurityNetwork& net) {
    for (int i = 0; i < net.n(); ++i)
        if (!lt(net.theta[i] + net.in_xi_sum(i), net.penalty[i])) return false;
    return true;
}

Allocation shapley_closed_form(const SecurityNetwork& net) {
    if (!shapley_closed_form_applicable(net))
        throw ValidationError("closed-form Shapley requires L_i > theta_i + sum of in-xi for all i");
    std::vector<double> shares(net.n());
    for (int i = 0; i < net.n(); ++i) {
        double v = net.theta[i];
        for (int a : net.in_arcs[i]) v += net.arcs[a].xi / 2.0;
        for (int a : net.out_arcs[i]) v -= net.arcs[a].xi / 2.0;
        shares[i] = v;
    }
    return Allocation(std::move(shares));
}

MonteCarloShapley shapley_monte_carlo(const SecurityNetwork& net, std::uint64_t samples,
                                      std::uint64_t seed) {
    const int n = net.n();
    if (samples < 1) throw ValidationError("sample count must be >= 1");
    Rng rng(Rng::derive(seed, 0));

    std::optional<CoalitionCostCache> cache;
    if (n <= 20) cache.emplace(net);

    std::vector<double> mean(n, 0.0), m2(n, 0.0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::uint64_t t = 1; t <= samples; ++t) {
        shuffle(perm, rng);
        Coalition prefix(n);
        std::uint32_t mask = 0;
        double prev = 0.0;
        for (int pos = 0; pos < n; ++pos) {
            int i = perm[pos];
            prefix.add(i);
            if (cache) mask |= std::uint32_t(1) << i;
            double cur = cache ? cache->cost(mask) : coalition_cost(net, prefix).cost;
            double marginal = cur - prev;
            prev = cur;
            double d = marginal - mean[i];
            mean[i] += d / double(t);
            m2[i] += d * (marginal - mean[i]);
        }
    }
    MonteCarloShapley out;
    out.samples = samples;
    out.allocation = Allocation(mean);
    out.std_error.assign(n, 0.0);
    if (samples > 1)
        for (int i = 0; i < n; ++i)
            out.std_error[i] = std::sqrt(m2[i] / double(samples - 1) / double(samples));
    return out;
}

Allocation extreme_core_allocation(const SecurityNetwork& net, const std::vector<int>& perm) {
    const int n = net.n();
    if (int(perm.size()) != n) throw ValidationError("permutation length mismatch");
    std::vector<std::uint8_t> seen(n, 0);
    for (int i : perm) {
        if (i < 0 || i >= n || seen[i]) throw ValidationError("not a permutation of the players");
        seen[i] = 1;
    }
    std::vector<double> shares(n, 0.0);
    Coalition prefix(n);
    double prev = 0.0;
    for (int i : perm) {
        prefix.add(i);
        double cur = coalition_cost(net, prefix).cost;
        shares[i] = cur - prev;
        prev = cur;
    }
    return Allocation(std::move(shares));
}

bool is_core_allocation(const SecurityNetwork& net, const Allocation& alloc) {
    const int n = net.n();
    if (n > 20) throw GuardExceeded("core membership check limited to n <= 20");
    if (int(alloc.shares.size()) != n) throw ValidationError("allocation length mismatch");
    CoalitionCostCache cache(net);
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    double sum = std::accumulate(alloc.shares.begin(), alloc.shares.end(), 0.0);
    if (!approx_eq(sum, cache.cost(full))) return false;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s += alloc.shares[i];
        if (!leq(s, cache.cost(mask))) return false;
    }
    return true;
}

bool is_submodular(const SecurityNetwork& net) {
    const int n = net.n();
    if (n > 12) throw GuardExceeded("submodularity check limited to n <= 12");
    if (n <= 1) return true;
    CoalitionCostCache cache(net);
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        for (int i = 0; i < n; ++i) {
            if (mask >> i & 1) continue;
            for (int j = i + 1; j < n; ++j) {
                if (mask >> j & 1) continue;
                double lhs = cache.cost(mask | (1u << i)) + cache.cost(mask | (1u << j));
                double rhs = cache.cost(mask | (1u << i) | (1u << j)) + cache.cost(mask);
                if (lt(lhs, rhs)) return false;
            }
        }
    }
    return true;
}

MinimalRationalSecuritySets minimal_rational_security_sets(const SecurityNetwork& net, NodeId i) {
    const int n = net.n();
    if (n > 16) throw GuardExceeded("minimal rational security sets limited to n <= 16");
    MinimalRationalSecuritySets out;
    out.player = i;
    out.closure = Coalition(n);

    std::vector<int> others;
    for (int j = 0; j < n; ++j)
        if (j != i) others.push_back(j);
    const int k = int(others.size());

    std::vector<std::uint32_t> kept; // masks over `others`
    // enumerate by increasing size so that minimality is a subset check on kept sets
    std::vector<std::vector<std::uint32_t>> by_size(k + 1);
    for (std::uint32_t sub = 0; sub < (1u << k); ++sub) by_size[std::popcount(sub)].push_back(sub);
    for (int size = 0; size <= k; ++size) {
        for (std::uint32_t sub : by_size[size]) {
            bool dominated = false;
            for (std::uint32_t m : kept)
                if ((m & sub) == m) { dominated = true; break; }
            if (dominated) continue;
            Coalition s(n);
            s.add(i);
            for (int b = 0; b < k; ++b)
                if (sub >> b & 1) s.add(others[b]);
            if (coalition_cost(net, s).secured.contains(i)) {
                kept.push_back(sub);
                Coalition p(n);
                for (int b = 0; b < k; ++b)
                    if (sub >> b & 1) p.add(others[b]);
                out.closure |= p;
                out.sets.push_back(p);
            }
        }
    }
    return out;
}

BilateralStatus shapley_bilateral_classify(const SecurityNetwork& net) {
    const int n = net.n();
    if (n > 16) throw GuardExceeded("bilateral classification limited to n <= 16");
    std::vector<Coalition> gbar;
    gbar.reserve(n);
    for (int j = 0; j < n; ++j) gbar.push_back(minimal_rational_security_sets(net, j).closure);

    bool impl = true;
    for (int i = 0; i < n && impl; ++i)
        for (int j : net.neighbors(i).members())
            if (net.neighbors(j).count() > 1 && gbar[j].contains(i)) { impl = false; break; }
    if (impl) return BilateralStatus::Implementable;

    for (int i = 0; i < n; ++i)
        for (int j : net.neighbors(i).members())
            if (gbar[j].contains(i) && net.neighbors(j).minus(net.neighbors(i)).count() > 1)
                return BilateralStatus::NotImplementable;
    return BilateralStatus::Indeterminate;
}

const char* to_string(BilateralStatus s) {
    switch (s) {
    case BilateralStatus::Implementable: return "implementable";
    case BilateralStatus::NotImplementable: return "not-implementable";
    default: return "indeterminate";
    }
}

} // namespace interdep
