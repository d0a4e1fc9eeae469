#include "interdep/agreeable.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace interdep {

bool is_pre_reduced(const SecurityNetwork& net) {
    return network_optimal(net).secured.is_full();
}

namespace {

void require_pre_reduced(const SecurityNetwork& net, const char* op) {
    if (!is_pre_reduced(net))
        throw ValidationError(std::string(op) +
                              " requires a pre-reduced network (run reduce_network first)");
}

// marginal cost of securing i once `covered` is secured: theta + uncovered in-xi
// minus the link costs this relieves covered out-neighbors of
double join_cost(const SecurityNetwork& net, const Coalition& covered, int i) {
    double c = net.theta[i];
    for (int a : net.in_arcs[i])
        if (!covered.contains(net.arcs[a].from)) c += net.arcs[a].xi;
    for (int a : net.out_arcs[i])
        if (covered.contains(net.arcs[a].to)) c -= net.arcs[a].xi;
    return c;
}

} // namespace

AgreeableFamily agreeable_family(const SecurityNetwork& net) {
    require_pre_reduced(net, "agreeable_family");
    AgreeableFamily fam;
    fam.covered = Coalition(net.n());
    while (!fam.covered.is_full()) {
        Coalition level(net.n());
        for (int i = 0; i < net.n(); ++i)
            if (!fam.covered.contains(i) && leq(join_cost(net, fam.covered, i), net.penalty[i]))
                level.add(i);
        if (level.empty()) break;
        fam.covered |= level;
        fam.sets.push_back(std::move(level));
    }
    fam.exists = fam.covered.is_full();
    return fam;
}

std::optional<Allocation> agreeable_allocation(const SecurityNetwork& net) {
    AgreeableFamily fam = agreeable_family(net);
    if (!fam.exists) return std::nullopt;

    std::vector<int> level_of(net.n(), -1);
    for (int k = 0; k < int(fam.sets.size()); ++k)
        for (int i : fam.sets[k].members()) level_of[i] = k;

    std::vector<double> shares(net.n(), 0.0);
    for (int i = 0; i < net.n(); ++i) {
        const int k = level_of[i];
        double v = net.theta[i];
        for (int a : net.in_arcs[i]) {
            int j = net.arcs[a].from;
            if (level_of[j] > k)
                v += net.arcs[a].xi; // still uncovered when S_k joins
            else if (level_of[j] == k)
                v += net.arcs[a].xi / 2.0; // shared within the block
        }
        for (int a : net.out_arcs[i]) {
            int j = net.arcs[a].to;
            if (level_of[j] < k)
                v -= net.arcs[a].xi; // savings bestowed on earlier blocks
            else if (level_of[j] == k)
                v -= net.arcs[a].xi / 2.0;
        }
        shares[i] = v;
    }
    return Allocation(std::move(shares));
}

DeltaMrsResult delta_mrs(const SecurityNetwork& net, const Coalition& s, int delta) {
    if (delta < 1) throw ValidationError("delta must be >= 1");
    if (delta > 6) throw GuardExceeded("delta-MRS enumeration limited to delta <= 6");

    std::vector<int> outside = s.complement().members();
    const int k = int(outside.size());
    const double base = s.empty() ? 0.0 : coalition_cost(net, s).cost;

    DeltaMrsResult res;
    for (int size = 1; size <= delta && size <= k; ++size) {
        // enumerate combinations of `outside` of this size
        std::vector<int> idx(size);
        for (int b = 0; b < size; ++b) idx[b] = b;
        for (;;) {
            Coalition v(net.n());
            double penalty_sum = 0.0;
            for (int b : idx) {
                v.add(outside[b]);
                penalty_sum += net.penalty[outside[b]];
            }
            if (lt(coalition_cost(net, s | v).cost, base + penalty_sum)) res.sets.push_back(v);
            // next combination
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == k - size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int b = pos + 1; b < size; ++b) idx[b] = idx[b - 1] + 1;
        }
        if (!res.sets.empty()) {
            res.achieved_delta = size;
            break;
        }
    }
    return res;
}

namespace {

void emit_fragments(const std::vector<Coalition>& blocks, std::vector<int>& block_order,
                    std::vector<std::uint8_t>& used, std::set<std::vector<int>>& out,
                    std::uint64_t cap, std::uint64_t& work_budget) {
    // block orders explode factorially even when the deduplicated fragment set
    // stays small, so the traversal itself is budgeted alongside the output
    if (work_budget-- == 0) throw GuardExceeded("permutation cap exceeded");
    const int k = int(blocks.size());
    if (int(block_order.size()) == k) {
        // novel elements per block position, then all internal orders
        std::vector<std::vector<int>> novel;
        Coalition seen(blocks[0].universe());
        for (int b : block_order) {
            std::vector<int> c;
            for (int v : blocks[b].members())
                if (!seen.contains(v)) { c.push_back(v); seen.add(v); }
            if (!c.empty()) novel.push_back(std::move(c));
        }
        std::vector<int> frag;
        auto rec = [&](auto&& self, std::size_t level) -> void {
            if (out.size() > cap || work_budget-- == 0)
                throw GuardExceeded("permutation cap exceeded");
            if (level == novel.size()) {
                out.insert(frag);
                return;
            }
            std::vector<int>& c = novel[level];
            std::sort(c.begin(), c.end());
            do {
                frag.insert(frag.end(), c.begin(), c.end());
                self(self, level + 1);
                frag.resize(frag.size() - c.size());
            } while (std::next_permutation(c.begin(), c.end()));
        };
        rec(rec, 0);
        return;
    }
    for (int b = 0; b < k; ++b) {
        if (used[b]) continue;
        used[b] = 1;
        block_order.push_back(b);
        emit_fragments(blocks, block_order, used, out, cap, work_budget);
        block_order.pop_back();
        used[b] = 0;
    }
}

std::vector<std::vector<int>> fragments_for(const std::vector<Coalition>& blocks,
                                            std::uint64_t cap) {
    std::set<std::vector<int>> dedup;
    std::vector<int> order;
    std::vector<std::uint8_t> used(blocks.size(), 0);
    std::uint64_t work_budget = 16 * cap + (1u << 20);
    emit_fragments(blocks, order, used, dedup, cap, work_budget);
    return {dedup.begin(), dedup.end()};
}

} // namespace

std::vector<std::vector<int>> valid_permutations(const SecurityNetwork& net, const Coalition& s,
                                                 int delta, std::uint64_t cap) {
    DeltaMrsResult mrs = delta_mrs(net, s, delta);
    if (mrs.sets.empty()) return {};
    return fragments_for(mrs.sets, cap);
}

DeltaAgreeableResult delta_agreeable_allocation(const SecurityNetwork& net, int delta,
                                                std::uint64_t cap) {
    require_pre_reduced(net, "delta_agreeable_allocation");
    DeltaAgreeableResult out;
    const int n = net.n();

    std::map<std::vector<int>, double> cost_memo;
    auto cost_of = [&](const Coalition& c) {
        std::vector<int> key = c.members();
        auto it = cost_memo.find(key);
        if (it != cost_memo.end()) return it->second;
        double v = c.empty() ? 0.0 : coalition_cost(net, c).cost;
        cost_memo.emplace(std::move(key), v);
        return v;
    };

    std::vector<double> shares(n, 0.0);
    Coalition covered(n);
    std::uint64_t total_perms = 1;
    while (!covered.is_full()) {
        DeltaMrsResult mrs = delta_mrs(net, covered, delta);
        if (mrs.sets.empty()) {
            std::string who;
            for (int i : covered.members()) who += (who.empty() ? "" : ",") + net.labels[i];
            out.reason = "delta-agreeable permutations do not exist: no rational set of size <= " +
                         std::to_string(delta) + " joins {" + who + "}";
            return out;
        }
        std::vector<std::vector<int>> frags =
            fragments_for(mrs.sets, std::max<std::uint64_t>(1, cap / total_perms));
        if (total_perms > cap / std::max<std::uint64_t>(1, frags.size()))
            throw GuardExceeded("permutation cap exceeded");
        total_perms *= frags.size();

        // stage average of marginal vectors; stages multiply independently, so
        // the overall average is the sum of per-stage averages
        std::vector<double> stage(n, 0.0);
        const double base = cost_of(covered);
        for (const auto& frag : frags) {
            Coalition prefix = covered;
            double prev = base;
            for (int v : frag) {
                prefix.add(v);
                double cur = cost_of(prefix);
                stage[v] += cur - prev;
                prev = cur;
            }
        }
        for (int i = 0; i < n; ++i) shares[i] += stage[i] / double(frags.size());
        for (const Coalition& b : mrs.sets) covered |= b;
    }
    out.permutation_count = total_perms;
    out.allocation = Allocation(std::move(shares));
    return out;
}

bool delta_agreeable_exists(const SecurityNetwork& net, int delta) {
    require_pre_reduced(net, "delta_agreeable_exists");
    Coalition covered(net.n());
    while (!covered.is_full()) {
        DeltaMrsResult mrs = delta_mrs(net, covered, delta);
        if (mrs.sets.empty()) return false;
        for (const Coalition& b : mrs.sets) covered |= b;
    }
    return true;
}

namespace {

ReducedAllocation expand_reduced(const SecurityNetwork& net, const ReductionResult& red,
                                 std::optional<Allocation> inner, std::string reason) {
    ReducedAllocation out;
    out.removed = red.removed;
    out.reason = std::move(reason);
    if (!inner) return out;
    std::vector<double> shares(net.n(), 0.0);
    for (int i : red.removed.members()) shares[i] = net.penalty[i];
    for (int j = 0; j < int(red.kept_original.size()); ++j)
        shares[red.kept_original[j]] = inner->shares[j];
    out.allocation = Allocation(std::move(shares));
    return out;
}

} // namespace

ReducedAllocation agreeable_allocation_reduced(const SecurityNetwork& net) {
    ReductionResult red = reduce_network(net);
    std::optional<Allocation> inner = agreeable_allocation(red.network);
    std::string reason;
    if (!inner) {
        AgreeableFamily fam = agreeable_family(red.network);
        std::string who;
        for (int i : fam.covered.members())
            who += (who.empty() ? "" : ",") + red.network.labels[i];
        reason = "family stalled at {" + who + "}";
    }
    return expand_reduced(net, red, std::move(inner), std::move(reason));
}

ReducedAllocation delta_agreeable_allocation_reduced(const SecurityNetwork& net, int delta,
                                                     std::uint64_t cap) {
    ReductionResult red = reduce_network(net);
    DeltaAgreeableResult inner = delta_agreeable_allocation(red.network, delta, cap);
    return expand_reduced(net, red, std::move(inner.allocation), std::move(inner.reason));
}

} // namespace interdep
