#ifndef INTERDEP_MINCUT_HPP
#define INTERDEP_MINCUT_HPP

#include "interdep/common.hpp"
#include "interdep/model.hpp"

namespace interdep::flow {

// Auxiliary network: source s, sink l, one node per player. Arcs s->i (theta_i),
// i->j (xi_ij) for each (i,j) in A, i->l (L_i).
struct AuxiliaryGraph {
    int players = 0;                 // node ids: 0..players-1, s = players, l = players+1
    struct Edge {
        int to;
        double cap;
        int rev;                     // index of the reverse edge in adj[to]
    };
    std::vector<std::vector<Edge>> adj;
    double cap_sum = 0.0;            // total finite capacity; cap_sum + 1 acts as infinity
    int forward_arcs = 0;

    int s() const { return players; }
    int l() const { return players + 1; }
    int node_count() const { return players + 2; }
    int arc_count() const { return forward_arcs; }

    void add_edge(int u, int v, double cap);
};

AuxiliaryGraph build_auxiliary(const SecurityNetwork& net);

struct CutResult {
    double value = 0.0;       // total weight of the returned cut
    Coalition source_players; // player nodes on the s side (unsecured)
    Coalition sink_players;   // player nodes on the l side (secured)
};

// Minimum weight s-l cut. Every node of `forced_source` is pinned to the source
// side via a capacity-infinity arc from s (infinity = cap_sum + 1, kept finite so
// arithmetic stays exact). Among all minimum cuts the canonical one is returned:
// the source side is the set of nodes reachable from s in the final residual
// graph, which makes the secured (sink-side) set the unique maximal optimum.
CutResult min_cut(const AuxiliaryGraph& aux, const Coalition& forced_source);

} // namespace interdep::flow

#endif
