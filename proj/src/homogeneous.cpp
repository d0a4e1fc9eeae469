#include "interdep/homogeneous.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace interdep {

std::optional<HomogeneousParams> is_quasi_homogeneous(const SecurityNetwork& net) {
    if (net.n() == 0 || net.m() == 0) return std::nullopt;
    HomogeneousParams p{net.theta[0], net.penalty[0], net.arcs[0].xi};
    for (int i = 0; i < net.n(); ++i)
        if (!approx_eq(net.theta[i], p.theta) || !approx_eq(net.penalty[i], p.penalty))
            return std::nullopt;
    for (const Arc& a : net.arcs)
        if (!approx_eq(a.xi, p.xi)) return std::nullopt;
    return p;
}

namespace {

// peel nodes with in-degree < k inside the remaining induced subgraph
Coalition peel(const SecurityNetwork& net, int k, Coalition alive) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < net.n(); ++i) {
            if (!alive.contains(i)) continue;
            int indeg = 0;
            for (int a : net.in_arcs[i])
                if (alive.contains(net.arcs[a].from)) ++indeg;
            if (indeg < k) {
                alive.remove(i);
                changed = true;
            }
        }
    }
    return alive;
}

int max_out_degree_to_complement(const SecurityNetwork& net, const Coalition& h) {
    int worst = 0;
    for (int i : h.members()) {
        int d = 0;
        for (int a : net.out_arcs[i])
            if (!h.contains(net.arcs[a].to)) ++d;
        worst = std::max(worst, d);
    }
    return worst;
}

bool is_k_in_core(const SecurityNetwork& net, const Coalition& h, int k) {
    for (int i : h.members()) {
        int indeg = 0;
        for (int a : net.in_arcs[i])
            if (h.contains(net.arcs[a].from)) ++indeg;
        if (indeg < k) return false;
    }
    return true;
}

} // namespace

std::vector<int> core_numbers(const SecurityNetwork& net) {
    std::vector<int> core(net.n(), 0);
    Coalition alive = Coalition::all(net.n());
    for (int k = 1; !alive.empty(); ++k) {
        alive = peel(net, k, alive);
        for (int i : alive.members()) core[i] = k;
    }
    return core;
}

std::optional<Coalition> has_k_core(const SecurityNetwork& net, int k) {
    if (k < 1) throw ValidationError("k must be >= 1");
    Coalition c = peel(net, k, Coalition::all(net.n()));
    if (c.empty()) return std::nullopt;
    return c;
}

std::optional<Coalition> find_kl_core(const SecurityNetwork& net, int q) {
    if (q < 1) throw ValidationError("q must be >= 1");
    const int n = net.n();
    if (n > 20) throw GuardExceeded("exact (k,l)-core search limited to n <= 20");
    for (int l = 0; l < n; ++l) {
        const int k = l + q;
        Coalition candidate = peel(net, k, Coalition::all(n));
        if (candidate.empty()) break; // larger l needs an even denser core
        std::vector<int> mem = candidate.members();
        const int c = int(mem.size());
        // subsets of the maximal k-in-core, largest first so the maximal witness wins
        std::vector<std::uint32_t> subs;
        subs.reserve(1u << c);
        for (std::uint32_t sub = 1; sub < (1u << c); ++sub) subs.push_back(sub);
        std::sort(subs.begin(), subs.end(), [](std::uint32_t a, std::uint32_t b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa > pb : a < b;
        });
        for (std::uint32_t sub : subs) {
            Coalition h(n);
            for (int b = 0; b < c; ++b)
                if (sub >> b & 1) h.add(mem[b]);
            if (is_k_in_core(net, h, k) && max_out_degree_to_complement(net, h) <= l) return h;
        }
    }
    return std::nullopt;
}

std::optional<Coalition> find_kl_core_heuristic(const SecurityNetwork& net, int q) {
    if (q < 1) throw ValidationError("q must be >= 1");
    for (int l = 0; l < net.n(); ++l) {
        Coalition h = peel(net, l + q, Coalition::all(net.n()));
        if (h.empty()) break;
        if (max_out_degree_to_complement(net, h) <= l) return h;
    }
    return std::nullopt;
}

const char* to_string(ExistencePrediction p) {
    switch (p) {
    case ExistencePrediction::Exists: return "exists";
    case ExistencePrediction::NotExists: return "not-exists";
    default: return "indeterminate";
    }
}

ExistencePrediction predict_agreeable_existence(const SecurityNetwork& net) {
    std::optional<HomogeneousParams> hp = is_quasi_homogeneous(net);
    if (!hp) throw ValidationError("predictor requires a quasi-homogeneous network");
    const double ratio = (hp->penalty - hp->theta) / hp->xi;

    // membership threshold: a node with remaining in-degree d secures when
    // theta + d xi <= L, i.e. d <= ratio
    int q_ceil = int(std::ceil(ratio - global_tolerance()));
    if (q_ceil >= 1 && !has_k_core(net, q_ceil)) return ExistencePrediction::Exists;

    // exclusion needs theta + (k - l) xi > L strictly, i.e. k - l > ratio
    int q_strict = std::max(1, int(std::floor(ratio + global_tolerance())) + 1);
    {
        std::optional<Coalition> witness = net.n() <= 20 ? find_kl_core(net, q_strict)
                                                         : find_kl_core_heuristic(net, q_strict);
        if (witness) return ExistencePrediction::NotExists;
    }
    return ExistencePrediction::Indeterminate;
}

} // namespace interdep
