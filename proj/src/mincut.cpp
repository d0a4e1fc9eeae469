#include "interdep/mincut.hpp"

#include <cassert>
#include <limits>
#include <queue>

namespace interdep::flow {

void AuxiliaryGraph::add_edge(int u, int v, double cap) {
    adj[u].push_back({v, cap, int(adj[v].size())});
    adj[v].push_back({u, 0.0, int(adj[u].size()) - 1});
    cap_sum += cap;
    ++forward_arcs;
}

AuxiliaryGraph build_auxiliary(const SecurityNetwork& net) {
    AuxiliaryGraph g;
    g.players = net.n();
    g.adj.assign(g.node_count(), {});
    for (int i = 0; i < net.n(); ++i) g.add_edge(g.s(), i, net.theta[i]);
    for (const Arc& a : net.arcs) g.add_edge(a.from, a.to, a.xi);
    for (int i = 0; i < net.n(); ++i) g.add_edge(i, g.l(), net.penalty[i]);
    return g;
}

namespace {

// Dinic on double capacities; residuals below eps are treated as saturated.
class Dinic {
public:
    explicit Dinic(AuxiliaryGraph g) : g_(std::move(g)) {}

    double run(int s, int t) {
        double flow = 0.0;
        const double eps = global_tolerance();
        while (bfs(s, t, eps)) {
            it_.assign(g_.adj.size(), 0);
            for (;;) {
                double f = dfs(s, t, std::numeric_limits<double>::infinity(), eps);
                if (f <= eps) break;
                flow += f;
            }
        }
        return flow;
    }

    // nodes reachable from s in the residual graph (call after run)
    std::vector<std::uint8_t> residual_reachable(int s) const {
        const double eps = global_tolerance();
        std::vector<std::uint8_t> seen(g_.adj.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const auto& e : g_.adj[u])
                if (!seen[e.to] && e.cap > eps) {
                    seen[e.to] = 1;
                    q.push(e.to);
                }
        }
        return seen;
    }

    const AuxiliaryGraph& graph() const { return g_; }

private:
    bool bfs(int s, int t, double eps) {
        level_.assign(g_.adj.size(), -1);
        std::queue<int> q;
        q.push(s);
        level_[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const auto& e : g_.adj[u])
                if (level_[e.to] < 0 && e.cap > eps) {
                    level_[e.to] = level_[u] + 1;
                    q.push(e.to);
                }
        }
        return level_[t] >= 0;
    }

    double dfs(int u, int t, double budget, double eps) {
        if (u == t) return budget;
        for (int& i = it_[u]; i < int(g_.adj[u].size()); ++i) {
            auto& e = g_.adj[u][i];
            if (e.cap <= eps || level_[e.to] != level_[u] + 1) continue;
            double f = dfs(e.to, t, std::min(budget, e.cap), eps);
            if (f > eps) {
                e.cap -= f;
                g_.adj[e.to][e.rev].cap += f;
                return f;
            }
        }
        return 0.0;
    }

    AuxiliaryGraph g_;
    std::vector<int> level_;
    std::vector<int> it_;
};

} // namespace

CutResult min_cut(const AuxiliaryGraph& aux, const Coalition& forced_source) {
    AuxiliaryGraph work = aux;
    const double inf = aux.cap_sum + 1.0;
    for (int v : forced_source.members()) work.add_edge(work.s(), v, inf);

    Dinic dinic(std::move(work));
    double flow = dinic.run(aux.s(), aux.l());
    std::vector<std::uint8_t> on_source = dinic.residual_reachable(aux.s());

    CutResult res;
    res.source_players = Coalition(aux.players);
    res.sink_players = Coalition(aux.players);
    for (int i = 0; i < aux.players; ++i)
        (on_source[i] ? res.source_players : res.sink_players).add(i);

    // cut weight from the ORIGINAL capacities (forcing arcs never cross: both
    // endpoints are on the source side)
    double weight = 0.0;
    for (int u = 0; u < aux.node_count(); ++u) {
        if (!on_source[u]) continue;
        for (const auto& e : aux.adj[u])
            if (e.cap > 0.0 && !on_source[e.to]) weight += e.cap;
    }
    res.value = weight;
#ifndef NDEBUG
    assert(std::abs(flow - weight) <= 1e-6 * (1.0 + std::abs(weight))); // max-flow min-cut duality
#else
    (void)flow;
#endif
    return res;
}

} // namespace interdep::flow
